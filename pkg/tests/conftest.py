import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

from symbpow import new_complex  # noqa: E402


@st.composite
def complexes(draw, max_n=5, pure=False, proper=False):
    """Random complexes on [n]; ``proper`` excludes the facet [n]."""
    n = draw(st.integers(1 if not proper else 2, max_n))
    top = n - 1 if proper else n
    size = draw(st.integers(1, top))
    verts = st.integers(1, n)
    if pure:
        face = st.frozensets(verts, min_size=size, max_size=size)
    else:
        face = st.frozensets(verts, min_size=1, max_size=top)
    faces = draw(st.lists(face, min_size=1, max_size=6))
    return new_complex(n, faces)


@st.composite
def permutations(draw, n):
    return draw(st.permutations(list(range(1, n + 1))))

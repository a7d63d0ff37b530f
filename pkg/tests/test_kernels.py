import os
import subprocess
import sys

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from conftest import complexes
from symbpow import kernels, lcm_lattice, symbolic_power
from symbpow.kernels import _py

nb = pytest.importorskip("symbpow.kernels._nb")

ints = hnp.arrays(np.int64, st.tuples(st.integers(1, 6), st.integers(1, 6)), elements=st.integers(-4, 4))


def sorted_rows(a):
    a = np.asarray(a)
    return a[np.lexsort(a.T[::-1])] if len(a) else a


def test_default_backend_is_numba():
    if os.environ.get("SYMBPOW_DISABLE_JIT", "") in ("", "0"):
        assert kernels.BACKEND == "numba"


def test_env_flag_selects_python():
    env = dict(os.environ, SYMBPOW_DISABLE_JIT="1")
    out = subprocess.run(
        [sys.executable, "-c", "from symbpow import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@given(ints)
def test_ranks_agree(M):
    expected = sympy.Matrix(M.tolist()).rank()
    assert nb.rank_bareiss(M) == _py.rank_bareiss(M) == expected
    for p in (2, 3, 7):
        assert nb.rank_mod_p(M, p) == _py.rank_mod_p(M, p)


def test_bareiss_overflow_signal():
    # minors reach 1e10 after one step, past the int64 headroom guard
    M = np.array([[100000, 3, 7], [5, 100003, 11], [13, 17, 100019]], dtype=np.int64)
    assert nb.rank_bareiss(M) == -1
    assert _py.rank_bareiss(M) == 3
    from symbpow.homology import _rank

    assert _rank(M, 0) == 3


@given(hnp.arrays(np.int64, st.tuples(st.integers(1, 12), st.integers(1, 4)), elements=st.integers(0, 3)))
def test_minimal_mask_agrees(rows):
    rows = np.unique(rows, axis=0)
    rows = rows[np.argsort(rows.sum(axis=1), kind="stable")]
    assert np.array_equal(nb.minimal_mask(rows), _py.minimal_mask(rows))


@given(complexes(max_n=5), st.integers(1, 3))
def test_lattice_and_betti_agree(cx, m):
    I = symbolic_power(cx, m)
    a, ok_a = nb.lcm_closure(I.array, 10_000)
    b, ok_b = _py.lcm_closure(I.array, 10_000)
    assert ok_a and ok_b and np.array_equal(sorted_rows(a), sorted_rows(b))
    lat = lcm_lattice(I)
    for p in (0, 2):
        ca, _ = nb.betti_at(I.array, lat, p)
        cb, _ = _py.betti_at(I.array, lat, p)
        assert np.array_equal(ca, cb)


@given(complexes(max_n=6), st.integers(1, 4))
def test_cover_search_agrees(cx, k):
    inc = cx.incidence()
    a, ok_a = nb.basic_covers(inc, k, 100_000)
    b, ok_b = _py.basic_covers(inc, k, 100_000)
    assert ok_a and ok_b
    assert np.array_equal(sorted_rows(a), sorted_rows(b))


def test_caps_report_overflow():
    I = symbolic_power(__import__("symbpow").cycle_complex(6), 3)
    assert not nb.lcm_closure(I.array, 10)[1] and not _py.lcm_closure(I.array, 10)[1]

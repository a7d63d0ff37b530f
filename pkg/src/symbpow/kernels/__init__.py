"""Hot loops, compiled with numba when available.

Set ``SYMBPOW_DISABLE_JIT=1`` to force the pure numpy/Python path. Both
backends expose the same functions and return identical results.
"""
import os

_FLAG = os.environ.get("SYMBPOW_DISABLE_JIT", "").strip().lower()
DISABLED = _FLAG not in ("", "0", "false", "no")

if DISABLED:
    from . import _py as backend
else:
    try:
        from . import _nb as backend
    except ImportError:  # numba missing
        from . import _py as backend

BACKEND = backend.NAME

minimal_mask = backend.minimal_mask
lcm_closure = backend.lcm_closure
basic_covers = backend.basic_covers
betti_at = backend.betti_at
rank_mod_p = backend.rank_mod_p
rank_bareiss = backend.rank_bareiss

__all__ = [
    "BACKEND",
    "DISABLED",
    "minimal_mask",
    "lcm_closure",
    "basic_covers",
    "betti_at",
    "rank_mod_p",
    "rank_bareiss",
]

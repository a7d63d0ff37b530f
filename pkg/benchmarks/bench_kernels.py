"""Time the numba kernels against the pure numpy/Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--end-to-end]

Each kernel is called once on both backends to warm up (and to check they
agree) before timing. ``--end-to-end`` also times a full verify-theorem run
on C9 in subprocesses with and without SYMBPOW_DISABLE_JIT.
"""
import argparse
import itertools
import json
import os
import subprocess
import sys
import time

import numpy as np

from symbpow import cycle_complex, load_fixture, skeleton_complex, symbolic_power
from symbpow.homology import lcm_lattice
from symbpow.kernels import _nb, _py


def boundary_matrix(n, q):
    """Boundary map from q-faces to (q-1)-faces of the simplex on n vertices."""
    lower = list(itertools.combinations(range(n), q))
    index = {f: t for t, f in enumerate(lower)}
    upper = list(itertools.combinations(range(n), q + 1))
    B = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for c, f in enumerate(upper):
        for pos in range(q + 1):
            B[index[f[:pos] + f[pos + 1:]], c] = -1 if pos & 1 else 1
    return B


def cases():
    c7 = cycle_complex(7)
    I3 = symbolic_power(c7, 3)
    lat = lcm_lattice(I3)
    rp2 = symbolic_power(load_fixture("rp2"), 2)
    M = boundary_matrix(10, 2)
    rng = np.random.default_rng(0)
    rows = np.unique(rng.integers(0, 4, size=(3000, 6)), axis=0)
    rows = rows[np.argsort(rows.sum(axis=1), kind="stable")]
    return [
        ("basic_covers C10 k=10", "basic_covers", (cycle_complex(10).incidence(), 10, 10**7)),
        ("basic_covers skel(6,2) k=6", "basic_covers", (skeleton_complex(6, 2).incidence(), 6, 10**7)),
        ("lcm_closure C7 m=3", "lcm_closure", (I3.array, 10**6)),
        ("lcm_closure J(RP2)^(2)", "lcm_closure", (rp2.array, 10**6)),
        ("betti_at C7 m=3, char 0", "betti_at", (I3.array, lat, 0)),
        ("betti_at C7 m=3, char 2", "betti_at", (I3.array, lat, 2)),
        ("minimal_mask 3000x6", "minimal_mask", (rows,)),
        ("rank_bareiss boundary 45x120", "rank_bareiss", (M,)),
        ("rank_mod_p boundary 45x120 p=2", "rank_mod_p", (M, 2)),
    ]


def same(a, b):
    if isinstance(a, tuple):
        a, b = a[0], b[0]
    if isinstance(a, np.ndarray) and a.ndim == 2 and a.shape[1] and a.shape[0]:
        a = a[np.lexsort(a.T[::-1])]
        b = b[np.lexsort(b.T[::-1])]
    return np.array_equal(np.asarray(a), np.asarray(b))


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def end_to_end(repeat):
    desc = os.path.join(os.path.dirname(os.path.abspath(__file__)), "c9.json")
    with open(desc, "w") as fh:
        json.dump(cycle_complex(9).to_dict(), fh)
    cmd = [sys.executable, "-m", "symbpow.cli", "verify-theorem", desc,
           "--mmax", "3", "--chars", "0", "--out", os.devnull]
    out = {}
    for label, flag in (("numba", "0"), ("python", "1")):
        env = dict(os.environ, SYMBPOW_DISABLE_JIT=flag)
        subprocess.run(cmd, env=env, check=True)  # warm the numba cache
        out[label] = best_of(lambda: subprocess.run(cmd, env=env, check=True), (), 1)
    os.remove(desc)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--end-to-end", action="store_true")
    args = ap.parse_args(argv)

    print(f"{'kernel':32s} {'numba s':>10s} {'python s':>10s} {'speedup':>8s}")
    for label, name, call in cases():
        fn_nb, fn_py = getattr(_nb, name), getattr(_py, name)
        if not same(fn_nb(*call), fn_py(*call)):
            raise SystemExit(f"backends disagree on {label}")
        t_nb = best_of(fn_nb, call, args.repeat)
        t_py = best_of(fn_py, call, args.repeat)
        print(f"{label:32s} {t_nb:10.4f} {t_py:10.4f} {t_py / t_nb:8.1f}x")
    if args.end_to_end:
        t = end_to_end(args.repeat)
        print(f"{'verify-theorem C9 m<=3 (process)':32s} {t['numba']:10.4f} {t['python']:10.4f} "
              f"{t['python'] / t['numba']:8.1f}x")


if __name__ == "__main__":
    main()

"""Multigraded Betti numbers, depth and Cohen-Macaulay tests for monomial ideals.

beta_{i,a}(I) is the rank of the reduced homology in degree i-1 of the upper
Koszul complex K^a(I) = {squarefree b <= a : x^(a-b) in I}. It can only be
nonzero when a lies in the lcm lattice of the generators, so only those
multidegrees are visited.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import kernels
from .errors import (
    CapacityExceeded,
    DegreeOutOfLattice,
    InputError,
    LengthMismatch,
    NotDownwardClosed,
    UnitIdeal,
    ZeroIdeal,
)
from .ideals import MonomialIdeal, contains, radical
from .kernels import _py

LATTICE_CAP = 50_000


def check_field(char: int) -> int:
    """Validate a characteristic: 0 or a prime below 2**31."""
    char = int(char)
    if char == 0:
        return 0
    if char < 2 or char >= 2**31 or any(char % q == 0 for q in range(2, int(char**0.5) + 1)):
        raise InputError(f"characteristic must be 0 or a prime, got {char}")
    return char


@dataclass(frozen=True)
class BettiTable:
    n: int
    char: int
    entries: dict = field(default_factory=dict)  # (i, degree) -> rank

    def totals(self) -> list[int]:
        top = max((i for i, _ in self.entries), default=-1)
        out = [0] * (top + 1)
        for (i, _), r in self.entries.items():
            out[i] += r
        return out

    @property
    def max_index(self) -> int:
        """Largest i with some beta_{i,a} nonzero, i.e. pd of the ideal."""
        return max(i for i, _ in self.entries)

    def to_list(self) -> list[dict]:
        return [
            {"i": i, "degree": list(a), "rank": r}
            for (i, a), r in sorted(self.entries.items())
        ]

    @classmethod
    def from_list(cls, rows: list[dict], n: int, char: int = 0) -> "BettiTable":
        return cls(n, char, {(r["i"], tuple(r["degree"])): r["rank"] for r in rows})


@dataclass(frozen=True)
class DepthReport:
    n: int
    char: int
    projective_dimension: int
    depth: int
    krull_dim: int
    cohen_macaulay: bool
    ideal_id: str = ""

    def to_dict(self) -> dict:
        return {
            "ideal_id": self.ideal_id,
            "n": self.n,
            "char": self.char,
            "projective_dimension": self.projective_dimension,
            "depth": self.depth,
            "krull_dim": self.krull_dim,
            "cohen_macaulay": self.cohen_macaulay,
        }


def koszul_subcomplex(I: MonomialIdeal, a) -> frozenset[tuple[int, ...]]:
    """Faces b (subsets of supp a, 1-based) with x^(a-b) in I."""
    a = np.asarray(a, dtype=np.int64)
    if I.is_zero:
        return frozenset()
    if a.shape != (I.n,):
        raise LengthMismatch(f"degree of length {a.shape} against n={I.n}")
    # the unit ideal has lcm 0 but every a is meaningful for it
    if np.any(a < 0) or (not I.is_unit and np.any(a > np.array(I.lcm()))):
        raise DegreeOutOfLattice(f"{a.tolist()} is not below lcm {list(I.lcm())}")
    supp = [v for v in range(I.n) if a[v] > 0]
    faces = []
    for r in range(len(supp) + 1):
        for b in itertools.combinations(supp, r):
            u = a.copy()
            u[list(b)] -= 1
            if contains(I, u):
                faces.append(tuple(v + 1 for v in b))
    return frozenset(faces)


def _check_closed(faces: frozenset) -> None:
    for f in faces:
        for r in range(len(f)):
            if f[:r] + f[r + 1:] not in faces:
                raise NotDownwardClosed(f"{f} present but its face {f[:r] + f[r + 1:]} is not")


def reduced_homology_ranks(faces: Iterable[Iterable[int]], char: int = 0) -> list[int]:
    """Ranks of reduced homology; entry j+1 holds degree j, from j = -1 upward.

    The void complex (no faces) gives [0]; the complex {()} gives [1].
    """
    char = check_field(char)
    faces = frozenset(tuple(sorted(f)) for f in faces)
    if not faces:
        return [0]
    _check_closed(faces)
    top = max(len(f) for f in faces)
    by_size = [sorted(f for f in faces if len(f) == q) for q in range(top + 1)]
    ranks = [0] * (top + 2)
    for q in range(1, top + 1):
        index = {f: t for t, f in enumerate(by_size[q - 1])}
        B = np.zeros((len(by_size[q - 1]), len(by_size[q])), dtype=np.int64)
        for col, f in enumerate(by_size[q]):
            for pos in range(q):
                B[index[f[:pos] + f[pos + 1:]], col] = -1 if pos & 1 else 1
        ranks[q] = _rank(B, char)
    return [len(by_size[q]) - ranks[q] - ranks[q + 1] for q in range(top + 1)]


def _rank(B: np.ndarray, char: int) -> int:
    if B.size == 0:
        return 0
    if char:
        return kernels.rank_mod_p(B, char)
    r = kernels.rank_bareiss(B)
    return r if r >= 0 else _py.rank_bareiss(B)


def lcm_lattice(I: MonomialIdeal, cap: int | None = None) -> np.ndarray:
    """lcms of all nonempty generator subsets, lexicographically sorted."""
    cap = LATTICE_CAP if cap is None else cap
    rows, ok = kernels.lcm_closure(I.array, cap)
    if not ok:
        raise CapacityExceeded(f"lcm lattice has more than {cap} elements")
    return rows[np.lexsort(rows.T[::-1])]


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise ZeroIdeal("the zero ideal has no Betti numbers here")
    if I.is_unit:
        raise UnitIdeal("the unit ideal is not proper")


def betti_numbers(I: MonomialIdeal, char: int = 0, cap: int | None = None) -> BettiTable:
    """All nonzero beta_{i,a}(I) over the given field."""
    _require_proper(I)
    char = check_field(char)
    lattice = lcm_lattice(I, cap)
    counts, overflow = kernels.betti_at(I.array, lattice, char)
    if overflow.any():
        exact, _ = _py.betti_at(I.array, lattice[overflow], char)
        counts[overflow] = exact
    entries = {}
    for l, i in zip(*np.nonzero(counts)):
        entries[(int(i), tuple(int(x) for x in lattice[l]))] = int(counts[l, i])
    return BettiTable(I.n, char, dict(sorted(entries.items())))


def krull_dimension(I: MonomialIdeal) -> int:
    """n minus the smallest support of a minimal prime of the radical."""
    if I.is_unit:
        raise UnitIdeal("the unit ideal has no dimension")
    if I.is_zero:
        return I.n
    n = I.n
    gmask = [sum(1 << v for v in range(n) if g[v]) for g in radical(I).gens]
    if n <= 20:
        masks = np.arange(1 << n, dtype=np.int64)
        hits = np.ones(len(masks), dtype=np.bool_)
        for g in gmask:
            hits &= (masks & g) != 0
        return n - int(np.bitwise_count(masks[hits]).min())
    for h in range(1, n + 1):
        for combo in itertools.combinations(range(n), h):
            m = sum(1 << v for v in combo)
            if all(m & g for g in gmask):
                return n - h
    raise AssertionError("the full variable set always meets every generator")


def depth_and_cm(
    I: MonomialIdeal, char: int = 0, cap: int | None = None, ideal_id: str = ""
) -> DepthReport:
    """Depth of S/I via Auslander-Buchsbaum and the Cohen-Macaulay verdict."""
    table = betti_numbers(I, char, cap)
    pd = table.max_index + 1
    depth = I.n - pd
    dim = krull_dimension(I)
    return DepthReport(I.n, table.char, pd, depth, dim, depth == dim, ideal_id)

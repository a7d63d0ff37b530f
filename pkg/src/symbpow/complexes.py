"""Simplicial complexes on [n], duality and matroid recognition.

Vertices are 1-based throughout. A complex is stored by its facets only,
each as an ascending tuple, and the facet tuple is sorted, so two complexes
compare equal exactly when they have the same faces.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import (
    EmptyFaceList,
    EmptyFacet,
    FullFacet,
    InputError,
    SkeletonOutOfRange,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return max(len(F) for F in self.facets) - 1

    @property
    def d(self) -> int:
        """Krull dimension of K[Delta], i.e. the largest facet size."""
        return self.dim + 1

    @property
    def is_pure(self) -> bool:
        return len({len(F) for F in self.facets}) == 1

    def facet_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(F) for F in self.facets)

    def incidence(self) -> np.ndarray:
        """Boolean facet-by-vertex matrix (0-based columns)."""
        inc = np.zeros((len(self.facets), self.n), dtype=np.bool_)
        for r, F in enumerate(self.facets):
            inc[r, [v - 1 for v in F]] = True
        return inc

    def contains_face(self, face: Iterable[int]) -> bool:
        face = set(face)
        return any(face <= set(F) for F in self.facets)

    def relabel(self, perm: dict[int, int] | list[int]) -> "SimplicialComplex":
        """Apply a vertex permutation; ``perm[v]`` is the image of v (1-based)."""
        if isinstance(perm, (list, tuple)):
            perm = {v + 1: w for v, w in enumerate(perm)}
        return new_complex(self.n, [[perm[v] for v in F] for F in self.facets])

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [list(F) for F in self.facets]}

    def __str__(self) -> str:
        body = ",".join("{" + ",".join(map(str, F)) + "}" for F in self.facets)
        return f"Delta(n={self.n}; {body})"


@dataclass(frozen=True)
class FVector:
    """Face counts f_{-1}, f_0, ..., f_{dim}."""

    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i + 1]


@dataclass(frozen=True)
class ExchangeViolation:
    """Facets F, G and i in F with no j in G making (F - i) + j a facet."""

    F: tuple[int, ...]
    G: tuple[int, ...]
    i: int

    def holds_in(self, cx: SimplicialComplex) -> bool:
        """Re-check the violation by brute force."""
        fs = cx.facet_set()
        if frozenset(self.F) not in fs or frozenset(self.G) not in fs:
            return False
        if self.i not in self.F:
            return False
        base = set(self.F) - {self.i}
        return all(frozenset(base | {j}) not in fs for j in self.G)


def new_complex(n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build the complex generated by ``faces``; only maximal faces are kept."""
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be positive, got {n}")
    sets = []
    for face in faces:
        s = frozenset(int(v) for v in face)
        if not s:
            raise EmptyFacet("the empty set cannot be supplied as a face")
        bad = [v for v in s if v < 1 or v > n]
        if bad:
            raise VertexOutOfRange(f"vertices {sorted(bad)} not in 1..{n}")
        sets.append(s)
    if not sets:
        raise EmptyFaceList("a complex needs at least one face")
    uniq = set(sets)
    maximal = [s for s in uniq if not any(s < t for t in uniq)]
    facets = tuple(sorted(tuple(sorted(s)) for s in maximal))
    return SimplicialComplex(n, facets)


def dual_complex(cx: SimplicialComplex) -> SimplicialComplex:
    """The complex whose facets are the complements [n] - F."""
    full = set(range(1, cx.n + 1))
    comps = [full - set(F) for F in cx.facets]
    if any(not c for c in comps):
        raise FullFacet("a facet equals [n]; its complement is empty")
    return new_complex(cx.n, comps)


def _exchange_targets(cx: SimplicialComplex):
    fs = cx.facet_set()
    for F in cx.facets:
        for G in cx.facets:
            for i in F:
                yield F, G, i, fs


def find_exchange_violation(cx: SimplicialComplex) -> Optional[ExchangeViolation]:
    """First (F, G, i) in canonical order breaking the exchange axiom."""
    for F, G, i, fs in _exchange_targets(cx):
        base = set(F) - {i}
        if not any(frozenset(base | {j}) in fs for j in G):
            return ExchangeViolation(F, G, i)
    return None


def is_matroid(cx: SimplicialComplex) -> bool:
    """Brute-force check of the facet exchange axiom over all (F, G, i)."""
    return find_exchange_violation(cx) is None


def check_symmetric_exchange(cx: SimplicialComplex) -> bool:
    """Both (F - i) + j and (G - j) + i facets for some j in G, for all (F, G, i)."""
    for F, G, i, fs in _exchange_targets(cx):
        base_f = set(F) - {i}
        ok = False
        for j in G:
            if frozenset(base_f | {j}) in fs and frozenset((set(G) - {j}) | {i}) in fs:
                ok = True
                break
        if not ok:
            return False
    return True


def skeleton_complex(n: int, k: int) -> SimplicialComplex:
    """k-skeleton of the (n-1)-simplex: all (k+1)-subsets of [n]."""
    if n < 1 or k < 0 or k > n - 1:
        raise SkeletonOutOfRange(f"need 0 <= k <= n-1, got n={n}, k={k}")
    return new_complex(n, itertools.combinations(range(1, n + 1), k + 1))


def cycle_complex(n: int) -> SimplicialComplex:
    """The n-gon as a 1-dimensional complex (n >= 3)."""
    if n < 3:
        raise InputError(f"cycles need at least 3 vertices, got {n}")
    return new_complex(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> SimplicialComplex:
    return skeleton_complex(n, 1)


def f_vector(cx: SimplicialComplex) -> FVector:
    faces = set()
    for F in cx.facets:
        for r in range(len(F) + 1):
            faces.update(itertools.combinations(F, r))
    counts = [0] * (cx.dim + 2)
    for f in faces:
        counts[len(f)] += 1
    return FVector(tuple(counts))


def multiplicity_and_dim(cx: SimplicialComplex) -> tuple[int, int, bool]:
    """(dim K[Delta], multiplicity, pure): multiplicity counts top-size facets."""
    d = cx.d
    return d, sum(1 for F in cx.facets if len(F) == d), cx.is_pure


def complex_from_dict(data: dict) -> SimplicialComplex:
    return new_complex(int(data["n"]), data["facets"])


def load_complex(path) -> SimplicialComplex:
    with open(path) as fh:
        return complex_from_dict(json.load(fh))


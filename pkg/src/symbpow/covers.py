"""k-covers, basic k-covers and the Hilbert function of the basic cover algebra.

A k-cover of a complex is a nonzero vector alpha of naturals with
sum(alpha[F]) >= k on every facet F. It is basic when no smaller nonzero
vector is still a k-cover; the basic k-covers index the minimal generators
of the m-th symbolic power of the cover ideal, and their number is the
Hilbert function of the basic cover algebra in degree k.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .complexes import (
    ExchangeViolation,
    SimplicialComplex,
    find_exchange_violation,
    is_matroid,
)
from .errors import (
    CapacityExceeded,
    InputError,
    LemmaRangeViolated,
    LengthMismatch,
    NoViolation,
    NotACover,
    NotBasic,
    NotMatroid,
    NotPure,
    TupleMismatch,
    WindowTooSmall,
)
from .ideals import MonomialIdeal

DEFAULT_CAP = 2_000_000
DEAD_ZONE = 0.35


@dataclass(frozen=True)
class Cover:
    values: tuple[int, ...]
    k: int

    def to_dict(self) -> dict:
        return {"k": self.k, "values": list(self.values)}


@dataclass(frozen=True)
class HilbertProfile:
    ks: tuple[int, ...]
    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.counts[self.ks.index(k)]

    def to_dict(self) -> dict:
        return {"k": list(self.ks), "count": list(self.counts)}

    @classmethod
    def from_dict(cls, data: dict) -> "HilbertProfile":
        return cls(tuple(data["k"]), tuple(data["count"]))


@dataclass(frozen=True)
class GrowthEstimate:
    exponent: float
    verdict: str  # "<=d", ">=d+1" or "indeterminate"
    d: int
    profile: HilbertProfile

    @property
    def dim_bracket(self) -> tuple[int, int | None]:
        """Bounds on dim of the basic cover algebra implied by the verdict."""
        if self.verdict == "<=d":
            return (self.d, self.d)
        if self.verdict == ">=d+1":
            return (self.d + 1, None)
        return (self.d, None)


@dataclass(frozen=True)
class AkTuple:
    a: tuple[int, ...]
    b: tuple[int, ...]


@dataclass(frozen=True)
class ViolationFrame:
    """Vertex labelling used to turn an exchange violation into covers.

    ``F_order`` lists F as i_1..i_d with i_1 the violating vertex and the
    face F0 in the last s+1 slots; ``G_order`` lists G with G0 first.
    """

    d: int
    s: int
    F_order: tuple[int, ...]
    G_order: tuple[int, ...]
    F0: tuple[int, ...]
    G0: tuple[int, ...]


def _vector(cx: SimplicialComplex, alpha: Sequence[int]) -> np.ndarray:
    a = np.asarray(alpha, dtype=np.int64)
    if a.shape != (cx.n,):
        raise LengthMismatch(f"cover of length {a.shape} for a complex on {cx.n} vertices")
    return a


def _facet_sums(cx: SimplicialComplex, a: np.ndarray) -> np.ndarray:
    return cx.incidence().astype(np.int64) @ a


def is_cover(cx: SimplicialComplex, alpha: Sequence[int], k: int) -> bool:
    a = _vector(cx, alpha)
    if k < 1:
        raise InputError(f"cover level must be positive, got {k}")
    if a.min() < 0 or not a.any():
        return False
    return bool(np.all(_facet_sums(cx, a) >= k))


def is_basic_cover(cx: SimplicialComplex, alpha: Sequence[int], k: int) -> bool:
    """A k-cover whose positive entries each sit on a facet summing to exactly k."""
    if not is_cover(cx, alpha, k):
        return False
    a = _vector(cx, alpha)
    inc = cx.incidence()
    tight = _facet_sums(cx, a) == k
    on_tight = inc[tight].any(axis=0)
    return bool(np.all(on_tight | (a == 0)))


def reduce_to_basic(cx: SimplicialComplex, alpha: Sequence[int], k: int) -> Cover:
    """Lower alpha to a basic k-cover by sweeps over vertices 1..n.

    Each sweep decrements by one every coordinate whose decrement keeps a
    nonzero k-cover; sweeps repeat until one changes nothing.
    """
    if not is_cover(cx, alpha, k):
        raise NotACover(f"{list(alpha)} is not a {k}-cover of {cx}")
    a = _vector(cx, alpha).copy()
    inc = cx.incidence().astype(np.int64)
    sums = inc @ a
    changed = True
    while changed:
        changed = False
        for v in range(cx.n):
            if a[v] == 0 or a.sum() == 1:
                continue
            if np.all(sums[inc[:, v] == 1] > k):
                a[v] -= 1
                sums -= inc[:, v]
                changed = True
    return Cover(tuple(int(x) for x in a), k)


def _basic_cover_array(cx: SimplicialComplex, k: int, cap: int | None) -> np.ndarray:
    if k < 1:
        raise InputError(f"cover level must be positive, got {k}")
    cap = DEFAULT_CAP if cap is None else cap
    inc = cx.incidence()
    rows, ok = kernels.basic_covers(inc, k, cap)
    if not ok:
        raise CapacityExceeded(f"more than {cap} basic {k}-covers")
    if len(rows) == 0:
        return rows
    # the search prunes aggressively; this filter is what guarantees basicness
    sums = rows @ inc.T.astype(np.int64)
    cover = np.all(sums >= k, axis=1) & rows.any(axis=1)
    on_tight = ((sums == k).astype(np.int64) @ inc.astype(np.int64)) > 0
    basic = cover & np.all(on_tight | (rows == 0), axis=1)
    rows = rows[basic]
    return rows[np.lexsort(rows.T[::-1])]


def enumerate_basic_covers(
    cx: SimplicialComplex, k: int, cap: int | None = None
) -> list[Cover]:
    """All basic k-covers in lexicographic order."""
    rows = _basic_cover_array(cx, k, cap)
    return [Cover(tuple(int(x) for x in r), k) for r in rows]


def hilbert_function(
    cx: SimplicialComplex, k_max: int, k_min: int = 1, cap: int | None = None
) -> HilbertProfile:
    if k_max < 1 or k_min < 1 or k_min > k_max:
        raise InputError(f"bad level range [{k_min}, {k_max}]")
    ks = tuple(range(k_min, k_max + 1))
    return HilbertProfile(ks, tuple(len(_basic_cover_array(cx, k, cap)) for k in ks))


def generators_via_covers(
    cx: SimplicialComplex, m: int, cap: int | None = None
) -> MonomialIdeal:
    """J(Delta)^(m) read off from the basic m-covers."""
    rows = _basic_cover_array(cx, m, cap)
    return MonomialIdeal(cx.n, tuple(sorted(tuple(int(x) for x in r) for r in rows)))


def estimate_fiber_dimension(
    cx: SimplicialComplex,
    k_min: int = 4,
    k_max: int = 12,
    dead_zone: float = DEAD_ZONE,
    cap: int | None = None,
) -> GrowthEstimate:
    """Growth exponent of the basic cover counts over [k_min, k_max].

    Counts are divided by C(k+d-1, d-1), the growth every matroid stays
    under, before the log-log slope is taken; the exponent is d-1 plus that
    slope. Normalising first removes most of the low-k bias a raw log-log
    fit carries.
    """
    if k_max - k_min + 1 < 6:
        raise WindowTooSmall(f"need at least 6 levels, got [{k_min}, {k_max}]")
    d = cx.d
    prof = hilbert_function(cx, k_max, k_min, cap)
    ks = np.array(prof.ks, dtype=float)
    envelope = np.array([math.comb(k + d - 1, d - 1) for k in prof.ks], dtype=float)
    slope = np.polyfit(np.log(ks), np.log(np.array(prof.counts) / envelope), 1)[0]
    exponent = float(d - 1 + slope)
    boundary = d - 0.5
    if exponent < boundary - dead_zone:
        verdict = "<=d"
    elif exponent > boundary + dead_zone:
        verdict = ">=d+1"
    else:
        verdict = "indeterminate"
    return GrowthEstimate(exponent, verdict, d, prof)


def _check_lemma_range(d: int, s: int):
    if s < -1 or s > d - 3:
        raise LemmaRangeViolated(f"need -1 <= s <= d-3, got d={d}, s={s}")


def _partitions(k: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if k == 0:
            yield ()
        return
    for v in range(min(k, cap), -1, -1):
        if v * parts < k:
            break
        for rest in _partitions(k - v, parts - 1, v):
            yield (v,) + rest


def _compositions(total: int, parts: int, floor: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if total >= floor:
            yield (total,)
        return
    for v in range(floor, total - floor * (parts - 1) + 1):
        for rest in _compositions(total - v, parts - 1, floor):
            yield (v,) + rest


def enumerate_A_k(d: int, s: int, k: int) -> list[AkTuple]:
    """Tuples (a, b) with a nonincreasing of sum k, every b_q >= a_2 and
    sum(b) = a_1 + ... + a_{d-s-1}."""
    _check_lemma_range(d, s)
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    L = d - s - 1
    out = []
    for a in _partitions(k, d, k):
        for b in _compositions(sum(a[:L]), L, a[1]):
            out.append(AkTuple(a, b))
    out.sort(key=lambda t: (t.a, t.b))
    return out


def in_A_k(t: AkTuple, d: int, s: int, k: int) -> bool:
    L = d - s - 1
    a, b = t.a, t.b
    return (
        len(a) == d
        and len(b) == L
        and min(a + b) >= 0
        and sum(a) == k
        and all(a[p] >= a[p + 1] for p in range(d - 1))
        and all(x >= a[1] for x in b)
        and sum(b) == sum(a[:L])
    )


def violation_frame(cx: SimplicialComplex, violation: ExchangeViolation) -> ViolationFrame:
    """Locate s, F0 and G0 for an exchange violation of a pure complex.

    s is the largest integer for which an s-dimensional face F0 of F - i and a
    (d-s-2)-dimensional face G0 of G together form a facet; ties go to the
    lexicographically first pair.
    """
    if not cx.is_pure:
        raise NotPure("the exchange construction needs equal-size facets")
    if violation is None or not violation.holds_in(cx):
        raise NoViolation(f"{violation} is not an exchange violation of {cx}")
    F, G, i = violation.F, violation.G, violation.i
    d = len(F)
    fs = cx.facet_set()
    rest = sorted(set(F) - {i})
    for s in range(d - 2, -2, -1):
        for F0 in itertools.combinations(rest, s + 1):
            for G0 in itertools.combinations(sorted(G), d - s - 1):
                if frozenset(F0) | frozenset(G0) in fs:
                    if s > d - 3:
                        raise NoViolation("F - i extends to a facet through G")
                    middle = tuple(v for v in rest if v not in F0)
                    G_rest = tuple(v for v in sorted(G) if v not in G0)
                    return ViolationFrame(d, s, (i,) + middle + F0, G0 + G_rest, F0, G0)
    raise NoViolation("no frame found")  # G itself always qualifies at s = -1


def build_nonmatroid_cover(
    cx: SimplicialComplex, violation: ExchangeViolation, tup: AkTuple, k: int
) -> Cover:
    """The k-cover taking a_p on i_p, b_q on j_q (q <= d-s-1) and k elsewhere."""
    frame = violation_frame(cx, violation)
    if not in_A_k(tup, frame.d, frame.s, k):
        raise TupleMismatch(f"{tup} is not in A_k for d={frame.d}, s={frame.s}, k={k}")
    values = [k] * cx.n
    for q, j in enumerate(frame.G0):
        values[j - 1] = tup.b[q]
    for p, v in enumerate(frame.F_order):
        values[v - 1] = tup.a[p]
    return Cover(tuple(values), k)


def covers_from_violation(
    cx: SimplicialComplex, k: int, violation: ExchangeViolation | None = None
) -> list[Cover]:
    """Basic k-covers obtained by reducing the construction over all of A_k."""
    violation = violation or find_exchange_violation(cx)
    frame = violation_frame(cx, violation)
    return [
        reduce_to_basic(cx, build_nonmatroid_cover(cx, violation, t, k).values, k)
        for t in enumerate_A_k(frame.d, frame.s, k)
    ]


def matroid_value_set_check(cx: SimplicialComplex, cover: Cover) -> bool:
    """Some tight facet F carries every value alpha takes on the vertices of Delta.

    Vertices lying in no facet are excluded: they are forced to 0 and the
    tight facet need not contain a zero.
    """
    if not is_matroid(cx):
        raise NotMatroid(f"{cx} is not a matroid")
    k = cover.k
    if not is_basic_cover(cx, cover.values, k):
        raise NotBasic(f"{list(cover.values)} is not a basic {k}-cover")
    alpha = cover.values
    support = set().union(*map(set, cx.facets))
    values = {alpha[v - 1] for v in support}
    for F in cx.facets:
        if sum(alpha[v - 1] for v in F) == k and values <= {alpha[v - 1] for v in F}:
            return True
    return False

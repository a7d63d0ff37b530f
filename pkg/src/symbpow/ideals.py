"""Monomial ideals in n variables, kept as minimal generating sets.

A monomial is its exponent vector. An ideal stores its minimal generators
in lexicographic order; the zero ideal has no generators and the unit
ideal is generated by the zero vector.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .complexes import SimplicialComplex
from .errors import (
    CapacityExceeded,
    EmptyPrimeList,
    EmptyPrimeSupport,
    InputError,
    LengthMismatch,
    ZeroIdeal,
)

DEFAULT_CAP = 200_000
# exponent ceiling; far beyond desk scale, keeps int64 sums exact
_MAX_EXPONENT = 2**40


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[tuple[int, ...], ...]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.n)
        arr.setflags(write=False)
        return arr

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __contains__(self, u) -> bool:
        return contains(self, u)

    def lcm(self) -> tuple[int, ...]:
        if not self.gens:
            return (0,) * self.n
        return tuple(int(x) for x in self.array.max(axis=0))

    def to_dict(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.gens]}

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(_monomial_str(g) for g in self.gens) + ")"


def _monomial_str(g) -> str:
    parts = [f"x{v + 1}" + (f"^{e}" if e > 1 else "") for v, e in enumerate(g) if e]
    return "*".join(parts) or "1"


def _cap(cap):
    return DEFAULT_CAP if cap is None else cap


def _from_array(arr: np.ndarray, n: int) -> MonomialIdeal:
    if arr.size == 0:
        return MonomialIdeal(n, ())
    if arr.min() < 0:
        raise InputError("exponents must be nonnegative")
    if arr.max() > _MAX_EXPONENT:
        raise CapacityExceeded("exponent overflow guard tripped")
    arr = np.unique(arr, axis=0)
    order = np.argsort(arr.sum(axis=1), kind="stable")
    arr = arr[order]
    keep = kernels.minimal_mask(arr)
    gens = sorted(tuple(int(x) for x in row) for row in arr[keep])
    return MonomialIdeal(n, tuple(gens))


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Ideal generated by ``gens``, reduced to its componentwise-minimal elements."""
    rows = [tuple(int(x) for x in g) for g in gens]
    lengths = {len(r) for r in rows}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise LengthMismatch(f"exponent vectors of differing lengths {sorted(lengths)}")
    if not lengths:
        raise LengthMismatch("cannot infer the ambient dimension of an empty generator list")
    n = lengths.pop()
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    return _from_array(arr, n)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def _same_n(I: MonomialIdeal, J: MonomialIdeal):
    if I.n != J.n:
        raise LengthMismatch(f"ambient dimensions differ: {I.n} vs {J.n}")


def _pairwise(I, J, op, cap):
    _same_n(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(I.n)
    if len(I) * len(J) > _cap(cap):
        raise CapacityExceeded(
            f"{len(I)} x {len(J)} candidate generators exceed the cap {_cap(cap)}"
        )
    A = I.array[:, None, :]
    B = J.array[None, :, :]
    return _from_array(op(A, B).reshape(-1, I.n), I.n)


def intersect(I: MonomialIdeal, J: MonomialIdeal, cap: int | None = None) -> MonomialIdeal:
    """I cap J, generated by pairwise lcms."""
    return _pairwise(I, J, np.maximum, cap)


def multiply(I: MonomialIdeal, J: MonomialIdeal, cap: int | None = None) -> MonomialIdeal:
    return _pairwise(I, J, np.add, cap)


def power(I: MonomialIdeal, m: int, cap: int | None = None) -> MonomialIdeal:
    if m < 1:
        raise InputError(f"power exponent must be positive, got {m}")
    out = I
    for _ in range(m - 1):
        out = multiply(out, I, cap)
    return out


def prime_power(A: Iterable[int], m: int, n: int) -> MonomialIdeal:
    """(x_i : i in A)^m, for a vertex set A (1-based)."""
    A = sorted(set(int(v) for v in A))
    if not A:
        raise EmptyPrimeSupport("prime support must be nonempty")
    if A[0] < 1 or A[-1] > n:
        raise InputError(f"prime support {A} not inside 1..{n}")
    if m < 1:
        raise InputError(f"power exponent must be positive, got {m}")
    gens = []
    for combo in itertools.combinations_with_replacement(A, m):
        g = [0] * n
        for v in combo:
            g[v - 1] += 1
        gens.append(tuple(g))
    return MonomialIdeal(n, tuple(sorted(gens)))


def symbolic_power_from_primes(
    primes: Iterable[Iterable[int]], m: int, n: int, cap: int | None = None
) -> MonomialIdeal:
    """Intersection of the m-th powers of the given monomial primes."""
    primes = [list(P) for P in primes]
    if not primes:
        raise EmptyPrimeList("need at least one prime")
    powers = [prime_power(P, m, n) for P in primes]
    return reduce(lambda acc, Q: intersect(acc, Q, cap), powers[1:], powers[0])


def cover_ideal(cx: SimplicialComplex, cap: int | None = None) -> MonomialIdeal:
    """J(Delta): intersection of the primes generated by each facet."""
    return symbolic_power_from_primes(cx.facets, 1, cx.n, cap)


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """I_Delta, generated by the minimal non-faces."""
    n = cx.n
    if n > 20:
        full = set(range(1, n + 1))
        return symbolic_power_from_primes([full - set(F) for F in cx.facets], 1, n)
    fmask = np.array([sum(1 << (v - 1) for v in F) for F in cx.facets], dtype=np.int64)
    masks = np.arange(1 << n, dtype=np.int64)
    face = ((masks[:, None] & ~fmask[None, :]) == 0).any(axis=1)
    minimal = ~face
    for t in range(n):
        bit = np.int64(1 << t)
        has = (masks & bit) != 0
        minimal &= ~has | face[masks & ~bit]
    gens = [tuple((int(mk) >> v) & 1 for v in range(n)) for mk in masks[minimal]]
    return MonomialIdeal(n, tuple(sorted(gens)))


def symbolic_power(
    cx: SimplicialComplex, m: int, side: str = "cover", cap: int | None = None
) -> MonomialIdeal:
    """J(Delta)^(m) (side='cover') or I_Delta^(m) (side='sr')."""
    if side == "cover":
        primes = cx.facets
    elif side == "sr":
        full = set(range(1, cx.n + 1))
        primes = [full - set(F) for F in cx.facets]
    else:
        raise InputError(f"side must be 'cover' or 'sr', got {side!r}")
    return symbolic_power_from_primes(primes, m, cx.n, cap)


def contains(I: MonomialIdeal, u: Sequence[int]) -> bool:
    """x^u in I, i.e. some generator divides x^u."""
    u = np.asarray(u, dtype=np.int64)
    if u.shape != (I.n,):
        raise LengthMismatch(f"vector of length {u.shape} against n={I.n}")
    if I.is_zero:
        return False
    return bool(np.all(I.array <= u, axis=1).any())


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_n(I, J)
    return I.gens == J.gens


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I contained in J."""
    _same_n(I, J)
    return all(contains(J, g) for g in I.gens)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero:
        return I
    return _from_array(np.minimum(I.array, 1), I.n)


def is_complete_intersection(I: MonomialIdeal) -> bool:
    """Minimal generators with pairwise disjoint supports."""
    if I.is_zero:
        raise ZeroIdeal("the zero ideal is not a complete intersection candidate")
    supports = (I.array > 0).sum(axis=0)
    return bool(np.all(supports <= 1))


def ideal_from_dict(data: dict) -> MonomialIdeal:
    n = int(data["n"])
    return minimalize(data["generators"], n)

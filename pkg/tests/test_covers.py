import itertools
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from conftest import complexes
from symbpow import (
    AkTuple,
    Cover,
    ExchangeViolation,
    HilbertProfile,
    build_nonmatroid_cover,
    covers_from_violation,
    cycle_complex,
    enumerate_A_k,
    enumerate_basic_covers,
    estimate_fiber_dimension,
    find_exchange_violation,
    generators_via_covers,
    hilbert_function,
    in_A_k,
    is_basic_cover,
    is_cover,
    is_matroid,
    matroid_value_set_check,
    new_complex,
    pure_complexes,
    reduce_to_basic,
    symbolic_power,
    violation_frame,
)
from symbpow.errors import (
    InputError,
    LemmaRangeViolated,
    NoViolation,
    NotACover,
    NotBasic,
    NotMatroid,
    NotPure,
    TupleMismatch,
    WindowTooSmall,
)

TRIANGLE = new_complex(3, [(1, 2), (1, 3), (2, 3)])
C5, C10 = cycle_complex(5), cycle_complex(10)
C5_VIOLATION = ExchangeViolation((1, 2), (3, 4), 2)
# basic cover counts of C10 for k = 1..14, from the enumeration; k = 1 is
# re-derived below by brute force over {0,1}^10
C10_HF = [17, 83, 254, 605, 1231, 2247, 3788, 6009, 9085, 13211, 18602, 25493, 34139, 44815]


def values(covers):
    return [c.values for c in covers]


def test_is_cover_examples():
    assert is_cover(TRIANGLE, (1, 1, 1), 2)
    assert not is_cover(TRIANGLE, (1, 1, 0), 2)
    assert not is_cover(C5, (0,) * 5, 1)
    with pytest.raises(InputError):
        is_cover(TRIANGLE, (1, 1, 1), 0)


def test_is_basic_examples():
    assert is_basic_cover(TRIANGLE, (1, 1, 1), 2)
    assert not is_basic_cover(TRIANGLE, (2, 1, 1), 2)
    assert is_basic_cover(TRIANGLE, (2, 2, 0), 2)


def test_reduce_examples():
    assert reduce_to_basic(TRIANGLE, (2, 1, 1), 2).values == (1, 1, 1)
    assert reduce_to_basic(TRIANGLE, (5, 5, 5), 2).values == (1, 1, 1)
    assert reduce_to_basic(TRIANGLE, (2, 2, 0), 2).values == (2, 2, 0)
    with pytest.raises(NotACover):
        reduce_to_basic(TRIANGLE, (1, 0, 0), 2)


def test_enumeration_examples():
    assert values(enumerate_basic_covers(TRIANGLE, 1)) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert sorted(values(enumerate_basic_covers(TRIANGLE, 2))) == sorted(
        [(1, 1, 1), (2, 2, 0), (2, 0, 2), (0, 2, 2)]
    )
    c10 = values(enumerate_basic_covers(C10, 1))
    assert len(c10) == 17 and c10 == oracles.basic_covers(10, C10.facets, 1)


def test_hilbert_examples():
    tri = hilbert_function(TRIANGLE, 8)
    assert tri[1] == 3 and tri[2] == 4
    assert list(tri.counts) == [len(oracles.basic_covers(3, TRIANGLE.facets, k)) for k in range(1, 9)]
    assert hilbert_function(C10, 1)[1] == 17
    assert list(hilbert_function(C5, 4).counts) == [
        len(oracles.basic_covers(5, C5.facets, k)) for k in range(1, 5)
    ]
    with pytest.raises(InputError):
        hilbert_function(TRIANGLE, 3, 5)


def test_triangle_counts_are_quasilinear():
    counts = hilbert_function(TRIANGLE, 12).counts
    expected = tuple(3 * k // 2 + 1 if k % 2 == 0 else 3 * (k + 1) // 2 for k in range(1, 13))
    assert counts == expected


@pytest.mark.slow
def test_decagon_counts():
    assert list(hilbert_function(C10, 14).counts) == C10_HF


def test_generators_via_covers_examples():
    assert generators_via_covers(TRIANGLE, 2).gens == ((0, 2, 2), (1, 1, 1), (2, 0, 2), (2, 2, 0))
    assert generators_via_covers(C5, 1) == symbolic_power(C5, 1)
    g = generators_via_covers(C5, 1).gens
    assert len(g) == 5 and all(sum(x) == 3 and max(x) == 1 for x in g)


def test_growth_examples():
    tri = estimate_fiber_dimension(TRIANGLE)
    assert tri.verdict == "<=d" and abs(tri.exponent - 1) < 0.15
    c5 = estimate_fiber_dimension(C5)
    assert c5.verdict == ">=d+1" and abs(c5.exponent - 2) < 0.2
    assert tri.dim_bracket == (2, 2) and c5.dim_bracket == (3, None)
    with pytest.raises(WindowTooSmall):
        estimate_fiber_dimension(TRIANGLE, 4, 8)


def test_A_k_examples():
    assert enumerate_A_k(2, -1, 1) == [AkTuple((1, 0), (0, 1)), AkTuple((1, 0), (1, 0))]
    a4 = enumerate_A_k(2, -1, 4)
    assert len(a4) == 9
    by_a2 = {v: sum(t.a[1] == v for t in a4) for v in range(3)}
    assert by_a2 == {0: 5, 1: 3, 2: 1}
    with pytest.raises(LemmaRangeViolated):
        enumerate_A_k(3, 1, 4)
    with pytest.raises(LemmaRangeViolated):
        enumerate_A_k(3, -2, 4)


@pytest.mark.parametrize("d, s", [(2, -1), (3, -1), (3, 0), (4, 1), (4, -1), (5, 0)])
def test_A_k_counts_against_naive(d, s):
    for k in range(1, 13):
        tuples = enumerate_A_k(d, s, k)
        assert len(tuples) == oracles.ak_count(d, s, k)
        assert len(set(tuples)) == len(tuples)
        assert all(in_A_k(t, d, s, k) for t in tuples)


def test_A_k_bounded_below_d3_s0():
    ratios = [len(enumerate_A_k(3, 0, k)) / k**3 for k in range(10, 31)]
    assert min(ratios) >= len(enumerate_A_k(3, 0, 80)) / 80**3 > 0


def test_violation_frame_c5():
    fr = violation_frame(C5, C5_VIOLATION)
    assert (fr.s, fr.F0, fr.G0) == (-1, (), (3, 4))
    with pytest.raises(NoViolation):
        violation_frame(C5, ExchangeViolation((1, 2), (2, 3), 1))
    with pytest.raises(NotPure):
        violation_frame(new_complex(3, [(1, 2), (3,)]), ExchangeViolation((1, 2), (3,), 1))


def test_build_nonmatroid_cover_examples():
    c1 = build_nonmatroid_cover(C5, C5_VIOLATION, AkTuple((1, 0), (1, 0)), 1)
    assert c1.values == (0, 1, 1, 0, 1) and is_cover(C5, c1.values, 1)
    assert c1.values[0] + c1.values[1] == 1 and c1.values[2] + c1.values[3] == 1
    c2 = build_nonmatroid_cover(C5, C5_VIOLATION, AkTuple((1, 1), (1, 1)), 2)
    assert c2.values == (1, 1, 1, 1, 2) and is_cover(C5, c2.values, 2)
    with pytest.raises(TupleMismatch):
        build_nonmatroid_cover(C5, C5_VIOLATION, AkTuple((2, 0), (1, 0)), 2)


def test_violation_covers_distinct_on_frame():
    fr = violation_frame(C5, C5_VIOLATION)
    frame = [v - 1 for v in fr.F_order + fr.G0]
    for k in range(1, 7):
        tuples = enumerate_A_k(fr.d, fr.s, k)
        built = [build_nonmatroid_cover(C5, C5_VIOLATION, t, k).values for t in tuples]
        reduced = [c.values for c in covers_from_violation(C5, k, C5_VIOLATION)]
        assert len({tuple(b[i] for i in frame) for b in built}) == len(tuples)
        assert [tuple(r[i] for i in frame) for r in reduced] == [tuple(b[i] for i in frame) for b in built]


def test_value_set_examples():
    assert matroid_value_set_check(TRIANGLE, Cover((2, 2, 0), 2))
    assert matroid_value_set_check(TRIANGLE, Cover((1, 1, 1), 2))
    with pytest.raises(NotMatroid):
        matroid_value_set_check(C5, Cover((1, 1, 1, 1, 1), 2))
    with pytest.raises(NotBasic):
        matroid_value_set_check(TRIANGLE, Cover((2, 1, 1), 2))


def test_hilbert_profile_roundtrip():
    prof = hilbert_function(C5, 5)
    assert HilbertProfile.from_dict(prof.to_dict()) == prof


# properties ---------------------------------------------------------------

CENSUS = [cx for n in range(1, 6) for cx in pure_complexes(n, iso=False)]
MATROIDS = [cx for cx in CENSUS if is_matroid(cx)]
NON_MATROIDS = [cx for cx in CENSUS if not is_matroid(cx)]


@given(complexes(max_n=5), st.integers(1, 3))
def test_basic_covers_match_full_lattice_oracle(cx, k):
    got = values(enumerate_basic_covers(cx, k))
    expected = oracles.basic_covers(cx.n, cx.facets, k)
    assert got == expected
    for a in itertools.product(range(k + 1), repeat=cx.n):
        assert is_basic_cover(cx, a, k) == (a in set(expected))


@given(complexes(max_n=5), st.integers(1, 4))
def test_generator_identity(cx, m):
    assert generators_via_covers(cx, m) == symbolic_power(cx, m)


@given(complexes(max_n=5), st.integers(1, 3), st.data())
def test_reduce_gives_basic_below(cx, k, data):
    alpha = data.draw(st.lists(st.integers(0, 2 * k), min_size=cx.n, max_size=cx.n))
    assume(is_cover(cx, alpha, k))
    red = reduce_to_basic(cx, alpha, k)
    assert is_basic_cover(cx, red.values, k)
    assert all(x <= y for x, y in zip(red.values, alpha))
    assert reduce_to_basic(cx, red.values, k) == red


@given(st.sampled_from(NON_MATROIDS), st.integers(1, 4))
def test_violation_covers_are_distinct_basic(cx, k):
    v = find_exchange_violation(cx)
    fr = violation_frame(cx, v)
    covers = covers_from_violation(cx, k, v)
    assert all(is_basic_cover(cx, c.values, k) for c in covers)
    assert len(set(covers)) == len(covers) == len(enumerate_A_k(fr.d, fr.s, k))


@given(st.sampled_from(MATROIDS), st.integers(1, 5))
def test_matroid_hf_bound_and_value_sets(cx, k):
    covers = enumerate_basic_covers(cx, k)
    assert len(covers) <= len(cx.facets) * math.comb(k + cx.d - 1, cx.d - 1)
    assert all(matroid_value_set_check(cx, c) for c in covers)


@given(complexes(max_n=5), st.integers(1, 3), st.data())
def test_relabel_equivariance(cx, k, data):
    perm = data.draw(st.permutations(list(range(1, cx.n + 1))))
    moved = sorted(
        tuple(c.values[perm.index(w)] for w in range(1, cx.n + 1))
        for c in enumerate_basic_covers(cx, k)
    )
    assert values(enumerate_basic_covers(cx.relabel(perm), k)) == moved

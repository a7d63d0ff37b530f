"""Symbolic powers of Stanley-Reisner and cover ideals, basic covers and matroids.

The package checks, at desk scale, that all symbolic powers of J(Delta) give
Cohen-Macaulay quotients exactly when Delta is a matroid, by two independent
routes: exact Betti numbers (depth) and basic cover counts (growth).
"""
from . import kernels
from .complexes import (
    ExchangeViolation,
    FVector,
    SimplicialComplex,
    check_symmetric_exchange,
    complete_graph,
    complex_from_dict,
    cycle_complex,
    dual_complex,
    f_vector,
    find_exchange_violation,
    is_matroid,
    load_complex,
    multiplicity_and_dim,
    new_complex,
    skeleton_complex,
)
from .covers import (
    AkTuple,
    Cover,
    GrowthEstimate,
    HilbertProfile,
    ViolationFrame,
    build_nonmatroid_cover,
    covers_from_violation,
    enumerate_A_k,
    enumerate_basic_covers,
    estimate_fiber_dimension,
    generators_via_covers,
    hilbert_function,
    in_A_k,
    is_basic_cover,
    is_cover,
    matroid_value_set_check,
    reduce_to_basic,
    violation_frame,
)
from .errors import *  # noqa: F401,F403
from .harness import (
    CorpusResult,
    PolynomialFit,
    ThekeyCheck,
    VerificationReport,
    build_corpus,
    fit_hilbert_polynomial,
    load_fixture,
    pure_complexes,
    run_corpus,
    verify_theorem,
    verify_thekey,
)
from .homology import (
    BettiTable,
    DepthReport,
    betti_numbers,
    depth_and_cm,
    koszul_subcomplex,
    krull_dimension,
    lcm_lattice,
    reduced_homology_ranks,
)
from .ideals import (
    MonomialIdeal,
    contains,
    cover_ideal,
    equals,
    intersect,
    is_complete_intersection,
    is_subideal,
    minimalize,
    multiply,
    power,
    prime_power,
    radical,
    stanley_reisner_ideal,
    symbolic_power,
    symbolic_power_from_primes,
    unit_ideal,
    zero_ideal,
)

__version__ = "0.1.0"

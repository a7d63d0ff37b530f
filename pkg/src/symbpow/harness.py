"""Two-route verification of the matroid / Cohen-Macaulay dichotomy.

For a complex Delta the combinatorial route counts basic covers and reads off
the growth of the basic cover algebra; the homological route computes the
depth of S/J(Delta)^(m) for m = 1..m_max from exact Betti numbers. Both are
compared against the brute-force matroid test.
"""
from __future__ import annotations

import itertools
import json
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

from .complexes import (
    SimplicialComplex,
    complete_graph,
    complex_from_dict,
    cycle_complex,
    dual_complex,
    is_matroid,
    load_complex,
    new_complex,
    skeleton_complex,
)
from .covers import HilbertProfile, estimate_fiber_dimension
from .errors import BudgetExceeded, CapacityExceeded, InputError, WindowTooSmall
from .homology import check_field, depth_and_cm
from .ideals import symbolic_power

log = logging.getLogger(__name__)

M_MAX = 4
CHARS = (0, 2)
K_MIN, K_MAX = 4, 12


@dataclass
class CMRecord:
    m: int
    char: int
    status: str  # "ok" or "capacity"
    cohen_macaulay: bool | None = None
    depth: int | None = None
    dim: int | None = None


@dataclass
class ThekeyCheck:
    lhs: tuple[int, int]  # bracket on dim of the basic cover algebra
    rhs: int | None  # n - min depth over the tested m
    consistent: bool
    tested_m: tuple[int, ...]


@dataclass
class VerificationReport:
    complex_id: str
    n: int
    d: int
    facets: list[list[int]]
    side: str
    matroid: bool
    pure: bool
    cm: list[CMRecord] = field(default_factory=list)
    growth_exponent: float | None = None
    growth_verdict: str | None = None
    growth_window: tuple[int, int] | None = None
    detection: str = "matroid"  # "matroid", "detected" or "undetected"
    theorem_consistent: bool = True
    growth_consistent: bool | None = None
    thekey: ThekeyCheck | None = None
    capacity_hits: int = 0
    timings: dict = field(default_factory=dict)

    @property
    def thekey_consistent(self) -> bool | None:
        return None if self.thekey is None else self.thekey.consistent

    @property
    def consistent(self) -> bool:
        return (
            self.theorem_consistent
            and self.growth_consistent is not False
            and self.thekey_consistent is not False
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        out["thekey_consistent"] = self.thekey_consistent
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        data = dict(data)
        data.pop("thekey_consistent", None)
        data["cm"] = [CMRecord(**r) for r in data["cm"]]
        if data.get("growth_window") is not None:
            data["growth_window"] = tuple(data["growth_window"])
        if data.get("thekey") is not None:
            tk = dict(data["thekey"])
            tk["lhs"] = tuple(tk["lhs"])
            tk["tested_m"] = tuple(tk["tested_m"])
            data["thekey"] = ThekeyCheck(**tk)
        return cls(**data)


def complex_id(cx: SimplicialComplex) -> str:
    sep = "" if cx.n < 10 else "-"
    return f"n{cx.n}:" + ".".join(sep.join(map(str, F)) for F in cx.facets)


def _thekey(cx: SimplicialComplex, depths: dict[int, int], bracket) -> ThekeyCheck:
    n, d = cx.n, cx.d
    lo, hi = bracket if bracket is not None else (d, None)
    hi = n if hi is None else hi
    if not cx.is_pure:
        # only the height bound n - dim S/J = min facet size is guaranteed
        lo = min(len(F) for F in cx.facets)
    tested = tuple(sorted(depths))
    if not depths:
        return ThekeyCheck((lo, hi), None, True, tested)
    rhs = n - min(depths.values())
    return ThekeyCheck((lo, hi), rhs, lo <= rhs <= hi, tested)


def _pipeline_complex(cx: SimplicialComplex, side: str) -> SimplicialComplex:
    if side == "cover":
        return cx
    if side == "sr":
        # S/I_Delta^(m) = S/J(Delta^c)^(m)
        return dual_complex(cx)
    raise InputError(f"side must be 'cover' or 'sr', got {side!r}")


def verify_theorem(
    cx: SimplicialComplex,
    m_max: int = M_MAX,
    chars: Sequence[int] = CHARS,
    k_max: int = K_MAX,
    k_min: int = K_MIN,
    side: str = "cover",
    lattice_cap: int | None = None,
) -> VerificationReport:
    """Matroid test, CM verdicts for m <= m_max and the growth estimate.

    A non-matroid whose tested symbolic powers are all Cohen-Macaulay is
    reported as undetected, never as a contradiction.
    """
    if m_max < 1:
        raise InputError(f"m_max must be positive, got {m_max}")
    chars = [check_field(c) for c in chars]
    if not chars:
        raise InputError("need at least one field")
    work = _pipeline_complex(cx, side)
    t0 = time.perf_counter()
    matroid = is_matroid(work)
    report = VerificationReport(
        complex_id(cx), cx.n, work.d, [list(F) for F in cx.facets], side, matroid, work.is_pure
    )
    report.timings["matroid"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for m in range(1, m_max + 1):
        try:
            ideal = symbolic_power(work, m)
        except CapacityExceeded:
            report.cm.extend(CMRecord(m, c, "capacity") for c in chars)
            continue
        for c in chars:
            try:
                rep = depth_and_cm(ideal, c, lattice_cap)
            except CapacityExceeded:
                report.cm.append(CMRecord(m, c, "capacity"))
                continue
            report.cm.append(CMRecord(m, c, "ok", rep.cohen_macaulay, rep.depth, rep.krull_dim))
    report.capacity_hits = sum(r.status == "capacity" for r in report.cm)
    report.timings["homology"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    growth = None
    try:
        growth = estimate_fiber_dimension(work, k_min, k_max)
    except CapacityExceeded:
        log.warning("growth estimate for %s hit the cover cap", report.complex_id)
    report.timings["growth"] = time.perf_counter() - t0
    if growth is not None:
        report.growth_exponent = growth.exponent
        report.growth_verdict = growth.verdict
        report.growth_window = (k_min, k_max)
        if work.is_pure:
            bad = ">=d+1" if matroid else "<=d"
            report.growth_consistent = growth.verdict != bad

    computed = [r for r in report.cm if r.status == "ok"]
    if matroid:
        report.detection = "matroid"
        report.theorem_consistent = all(r.cohen_macaulay for r in computed)
    else:
        detected = any(not r.cohen_macaulay for r in computed)
        report.detection = "detected" if detected else "undetected"
        report.theorem_consistent = True

    char0 = chars[0]
    depths = {r.m: r.depth for r in computed if r.char == char0}
    report.thekey = _thekey(work, depths, growth.dim_bracket if growth else None)
    return report


def verify_thekey(
    cx: SimplicialComplex,
    m_max: int = M_MAX,
    k_window: tuple[int, int] = (K_MIN, K_MAX),
    char: int = 0,
    lattice_cap: int | None = None,
) -> ThekeyCheck:
    """Compare n - min_m depth(S/J^(m)) against the growth bracket on dim."""
    char = check_field(char)
    depths = {}
    for m in range(1, m_max + 1):
        try:
            depths[m] = depth_and_cm(symbolic_power(cx, m), char, lattice_cap).depth
        except CapacityExceeded:
            continue
    growth = estimate_fiber_dimension(cx, *k_window)
    return _thekey(cx, depths, growth.dim_bracket)


@dataclass(frozen=True)
class PolynomialFit:
    ks: tuple[int, ...]
    coefficients: tuple[Fraction, ...]  # ascending powers of k
    exact: bool
    step: int = 1

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1]

    def multiplicity(self) -> Fraction:
        """Leading coefficient times degree!, the multiplicity when dim = degree + 1."""
        return self.leading_coefficient * math.factorial(self.degree)

    def __call__(self, k) -> Fraction:
        return sum(c * Fraction(k) ** p for p, c in enumerate(self.coefficients))

    def to_dict(self) -> dict:
        return {
            "k": list(self.ks),
            "step": self.step,
            "coefficients": [str(c) for c in self.coefficients],
            "exact": self.exact,
        }


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _newton_to_monomial(diffs, k0: int, step: int) -> list[Fraction]:
    """Expand sum_j diffs[j] * binom(t, j), t = (k - k0)/step, in powers of k."""
    coeffs = [Fraction(0)] * len(diffs)
    basis = [Fraction(1)]
    t = [Fraction(-k0, step), Fraction(1, step)]
    for j, dj in enumerate(diffs):
        for p, c in enumerate(basis):
            coeffs[p] += dj * c
        basis = _poly_mul(basis, [t[0] - j, t[1]])
        basis = [c / (j + 1) for c in basis]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def fit_hilbert_polynomial(
    profile: HilbertProfile,
    window: tuple[int, int] | None = None,
    step: int = 1,
    degree: int | None = None,
) -> PolynomialFit:
    """Exact rational polynomial through the counts at k0, k0+step, ..., <= k1.

    Without ``degree`` the fit is exact when some order of successive
    differences vanishes on the window, and the degree is the first such
    order minus one. With ``degree`` the polynomial through the first
    degree+1 points is returned and ``exact`` says whether it reproduces the
    rest of the window.
    """
    k0, k1 = window if window is not None else (profile.ks[0], profile.ks[-1])
    ks = tuple(range(k0, k1 + 1, step))
    missing = [k for k in ks if k not in profile.ks]
    if missing:
        raise InputError(f"levels {missing} are outside the profile")
    vals = [Fraction(profile[k]) for k in ks]
    need = 2 if degree is None else degree + 2
    if len(vals) < need:
        raise WindowTooSmall(f"{len(vals)} points cannot certify a fit")
    rows = [vals]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    diffs = [r[0] for r in rows]
    if degree is not None:
        coeffs = _newton_to_monomial(diffs[: degree + 1], k0, step)
        exact = not any(rows[degree + 1])
        return PolynomialFit(ks, tuple(coeffs), exact, step)
    for e in range(len(rows) - 1):
        if not any(rows[e + 1]):
            return PolynomialFit(ks, tuple(_newton_to_monomial(diffs[: e + 1], k0, step)), True, step)
    return PolynomialFit(ks, tuple(_newton_to_monomial(diffs, k0, step)), False, step)


# corpus generation -------------------------------------------------------

def _canonical(n: int, family: Sequence[tuple[int, ...]]) -> tuple:
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        img = tuple(sorted(tuple(sorted(perm[v - 1] for v in F)) for F in family))
        if best is None or img < best:
            best = img
    return best


def pure_complexes(n: int, iso: bool = True) -> list[SimplicialComplex]:
    """Every pure complex on [n] (facet size 1..n), optionally one per isomorphism class."""
    out = []
    for r in range(1, n + 1):
        subsets = list(itertools.combinations(range(1, n + 1), r))
        seen = set()
        for mask in range(1, 1 << len(subsets)):
            family = [subsets[t] for t in range(len(subsets)) if mask >> t & 1]
            if iso:
                key = _canonical(n, family)
                if key in seen:
                    continue
                seen.add(key)
                family = list(key)
            out.append(new_complex(n, family))
    return out


def fixture_path(name: str):
    return resources.files("symbpow") / "fixtures" / f"{name}.json"


def load_fixture(name: str) -> SimplicialComplex:
    """Shipped fixture by name, e.g. 'pentagon', 'decagon', 'rp2', 'rp2_dual'."""
    if name == "rp2_dual":
        return dual_complex(load_fixture("rp2"))
    path = fixture_path(name)
    if not path.is_file():
        raise InputError(f"no fixture named {name!r}")
    return complex_from_dict(json.loads(path.read_text()))


def _inclusive(desc) -> list[int]:
    if isinstance(desc, dict):
        return list(range(desc["min"], desc["max"] + 1))
    return list(desc)


def build_corpus(desc: dict) -> list[SimplicialComplex]:
    """Complexes named by a corpus description, deduplicated, in a stable order."""
    found: list[SimplicialComplex] = []
    iso = desc.get("iso", True)
    for n in range(1, desc.get("pure_max_n", 0) + 1):
        found.extend(pure_complexes(n, iso))
    for n in _inclusive(desc.get("cycles", [])):
        found.append(cycle_complex(n))
    for n in _inclusive(desc.get("complete_graphs", [])):
        found.append(complete_graph(n))
    skel = desc.get("skeletons", [])
    if isinstance(skel, dict):
        skel = [(n, k) for n in range(1, skel["max_n"] + 1) for k in range(n)]
    for n, k in skel:
        found.append(skeleton_complex(n, k))
    for name in desc.get("fixtures", []):
        found.append(load_fixture(name))
    for path in desc.get("files", []):
        found.append(load_complex(path))
    for data in desc.get("complexes", []):
        found.append(complex_from_dict(data))
    unique = list(dict.fromkeys(found))
    return unique


@dataclass
class CorpusResult:
    reports: list[VerificationReport]
    summary: dict

    @property
    def exit_code(self) -> int:
        if self.summary["inconsistent"]:
            return 2
        return 0

    def to_dict(self) -> dict:
        return {"summary": self.summary, "reports": [r.to_dict() for r in self.reports]}


def _verify_kwargs(desc: dict) -> dict:
    return {
        "m_max": desc.get("m_max", M_MAX),
        "chars": tuple(desc.get("chars", CHARS)),
        "k_min": desc.get("k_min", K_MIN),
        "k_max": desc.get("k_max", K_MAX),
        "side": desc.get("side", "cover"),
    }


def _verify_one(args):
    cx, kwargs = args
    return verify_theorem(cx, **kwargs)


def summarize(reports: Iterable[VerificationReport]) -> dict:
    reports = list(reports)
    return {
        "complexes": len(reports),
        "matroids": sum(r.matroid for r in reports),
        "detected": sum(r.detection == "detected" for r in reports),
        "undetected": sum(r.detection == "undetected" for r in reports),
        "consistent": sum(r.consistent for r in reports),
        "inconsistent": sum(not r.consistent for r in reports),
        "capacity_hits": sum(r.capacity_hits for r in reports),
    }


def run_corpus(
    desc: dict, budget: float | None = None, workers: int = 1
) -> CorpusResult:
    """verify_theorem over every complex of the corpus, sorted by complex id."""
    corpus = build_corpus(desc)
    kwargs = _verify_kwargs(desc)
    if budget is None:
        budget = desc.get("budget_seconds")
    start = time.perf_counter()
    reports = []

    def check_budget():
        if budget is not None and time.perf_counter() - start > budget:
            raise BudgetExceeded(f"corpus run passed its {budget}s budget")

    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            for rep in pool.map(_verify_one, [(cx, kwargs) for cx in corpus]):
                reports.append(rep)
                check_budget()
    else:
        for cx in corpus:
            reports.append(verify_theorem(cx, **kwargs))
            check_budget()
    reports.sort(key=lambda r: (r.n, r.complex_id))
    return CorpusResult(reports, summarize(reports))

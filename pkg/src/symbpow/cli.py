"""Command line entry point: ``symbpow <subcommand> ...``; every result is JSON."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import kernels
from .complexes import (
    complex_from_dict,
    dual_complex,
    f_vector,
    find_exchange_violation,
    is_matroid,
    multiplicity_and_dim,
)
from .covers import enumerate_basic_covers, estimate_fiber_dimension, hilbert_function
from .errors import BudgetExceeded, CapacityExceeded, SymbpowError
from .harness import complex_id, fixture_path, load_fixture, run_corpus, verify_theorem
from .homology import betti_numbers, depth_and_cm
from .ideals import (
    MonomialIdeal,
    cover_ideal,
    ideal_from_dict,
    stanley_reisner_ideal,
    symbolic_power,
)

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT, EXIT_CAPACITY = 0, 1, 2, 3


def _read_json(source: str) -> dict:
    """A path, or ``fixture:<name>`` for a shipped fixture."""
    if source.startswith("fixture:"):
        name = source.split(":", 1)[1]
        path = fixture_path(name)
        if path.is_file():
            return json.loads(path.read_text())
        return load_fixture(name).to_dict()
    with open(source) as fh:
        return json.load(fh)


def _complex(source: str):
    return complex_from_dict(_read_json(source))


def _ideal(args) -> MonomialIdeal:
    data = _read_json(args.input)
    if "generators" in data:
        return ideal_from_dict(data)
    cx = complex_from_dict(data)
    if args.m is None:
        return cover_ideal(cx) if args.side == "cover" else stanley_reisner_ideal(cx)
    return symbolic_power(cx, args.m, args.side)


def cmd_analyze(args):
    cx = _complex(args.input)
    viol = find_exchange_violation(cx)
    d, mult, pure = multiplicity_and_dim(cx)
    out = {
        "id": complex_id(cx),
        "n": cx.n,
        "facets": [list(F) for F in cx.facets],
        "d": d,
        "pure": pure,
        "multiplicity": mult,
        "f_vector": list(f_vector(cx).counts),
        "matroid": viol is None,
        "violation": None if viol is None else {"F": list(viol.F), "G": list(viol.G), "i": viol.i},
        "stanley_reisner_ideal": stanley_reisner_ideal(cx).to_dict()["generators"],
        "cover_ideal": cover_ideal(cx).to_dict()["generators"],
    }
    try:
        out["dual_matroid"] = is_matroid(dual_complex(cx))
    except SymbpowError:
        out["dual_matroid"] = None
    return out, EXIT_OK


def cmd_covers(args):
    cx = _complex(args.input)
    return [c.to_dict() for c in enumerate_basic_covers(cx, args.k)], EXIT_OK


def cmd_hilbert(args):
    cx = _complex(args.input)
    out = hilbert_function(cx, args.kmax, args.kmin).to_dict()
    if args.growth:
        est = estimate_fiber_dimension(cx, args.growth[0], args.growth[1])
        out["growth"] = {"exponent": est.exponent, "verdict": est.verdict, "d": est.d}
    return out, EXIT_OK


def cmd_symbolic_power(args):
    cx = _complex(args.input)
    return symbolic_power(cx, args.m, args.side).to_dict(), EXIT_OK


def cmd_betti(args):
    I = _ideal(args)
    return betti_numbers(I, args.char).to_list(), EXIT_OK


def cmd_depth(args):
    I = _ideal(args)
    return depth_and_cm(I, args.char, ideal_id=args.input).to_dict(), EXIT_OK


def _chars(text: str) -> tuple[int, ...]:
    return tuple(int(c) for c in text.split(",") if c.strip())


def cmd_verify_theorem(args):
    cx = _complex(args.input)
    rep = verify_theorem(cx, args.mmax, _chars(args.chars), args.kmax, args.kmin, args.side)
    return rep.to_dict(), EXIT_OK if rep.consistent else EXIT_INCONSISTENT


def cmd_run_corpus(args):
    desc = _read_json(args.input)
    res = run_corpus(desc, args.budget, args.workers)
    return res.to_dict(), res.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symbpow", description=__doc__)
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="JSON file, or fixture:<name>")
        sp.add_argument("--out", default=argparse.SUPPRESS, help="write JSON here instead of stdout")
        sp.set_defaults(func=fn)
        return sp

    add("analyze", cmd_analyze, "matroid test, ideals, f-vector")
    sp = add("covers", cmd_covers, "basic k-covers")
    sp.add_argument("--k", type=int, required=True)
    sp = add("hilbert", cmd_hilbert, "basic cover counts for k = kmin..kmax")
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--kmin", type=int, default=1)
    sp.add_argument("--growth", type=int, nargs=2, metavar=("KMIN", "KMAX"),
                    help="also report the growth estimate on this window")
    sp = add("symbolic-power", cmd_symbolic_power, "J^(m) or I^(m) of a complex")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--side", choices=["cover", "sr"], default="cover")
    for name, fn in (("betti", cmd_betti), ("depth", cmd_depth)):
        sp = add(name, fn, f"{name} of an ideal JSON, or of a complex's ideal")
        sp.add_argument("--char", type=int, default=0)
        sp.add_argument("--side", choices=["cover", "sr"], default="cover")
        sp.add_argument("--m", type=int, default=None, help="symbolic power (complex input)")
    sp = add("verify-theorem", cmd_verify_theorem, "two-route check on one complex")
    sp.add_argument("--mmax", type=int, default=4)
    sp.add_argument("--chars", default="0,2")
    sp.add_argument("--kmax", type=int, default=12)
    sp.add_argument("--kmin", type=int, default=4)
    sp.add_argument("--side", choices=["cover", "sr"], default="cover")
    sp = add("run-corpus", cmd_run_corpus, "verify-theorem over a corpus description")
    sp.add_argument("--budget", type=float, default=None, help="wall-clock seconds")
    sp.add_argument("--workers", type=int, default=1)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    logging.getLogger(__name__).info("kernel backend: %s", kernels.BACKEND)
    try:
        result, code = args.func(args)
    except (CapacityExceeded, BudgetExceeded) as exc:
        result, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_CAPACITY
    except (SymbpowError, OSError, json.JSONDecodeError, KeyError) as exc:
        result, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INPUT
    text = json.dumps(result, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

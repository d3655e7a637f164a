"""
Command-line front end.

Subcommands: ``col`` (coloring counts), ``tlk`` (triple linking and the
chirality certificate), ``phi`` (cocycle invariant in multiset, reduced,
or polynomial form), ``classify`` (count class and canonical
representative), ``sweep`` (NDJSON family grids), ``selftest`` (the
acceptance suite).

Exit codes: 0 success, 1 usage or parse error, 2 non-commuting input,
3 violated twist hypothesis.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import qdl
from .braid import (
    CommutingPair,
    GeneratorRangeError,
    NonCommutingError,
    WordSyntaxError,
    parse_word,
)
from .cocycle import (
    HypothesisViolationError,
    phi_closed_multiset,
    phi_n3_polynomial,
    phi_via_shadow,
    reduced_phi,
)
from .coloring import (
    NotOddPrimeError,
    coloring_kernel,
    golden_unit_criterion,
    sigma12_count_closed_form,
)
from .linking import chirality_certificate, triple_linking, triple_linking_variant
from .selftest import run_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NONCOMMUTING = 2
EXIT_HYPOTHESIS = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 by default; we want 1
        raise _UsageError(message)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--strands", type=int, default=3, help="strand count (default 3)")
    sub.add_argument("-p", type=int, default=3, help="odd prime modulus (default 3)")
    sub.add_argument("--a", default="e", help="first basis word")
    sub.add_argument("--b", default="e", help="second basis word")
    sub.add_argument("--json", action="store_true", help="emit a JSON report")


def _build_parser() -> _Parser:
    parser = _Parser(prog="toruslink", description=__doc__.strip().splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    col = subs.add_parser("col", help="coloring count of a commuting pair")
    _add_common(col)

    tlk = subs.add_parser("tlk", help="triple linking numbers and chirality")
    _add_common(tlk)

    phi = subs.add_parser("phi", help="cocycle invariant of a twist family")
    _add_common(phi)
    phi.add_argument("--method", choices=("brute", "closed", "shadow"), default="closed",
                     help="shadow enumerates colorings of --a; closed/brute use --nu")
    phi.add_argument("--m", type=int, default=1, help="full-twist exponent parameter")
    phi.add_argument("--n", type=int, default=3, help="strand count for closed forms")
    phi.add_argument("--nu", default=None, help="comma-separated exponent sums")
    phi.add_argument("--reduced", action="store_true", help="value at a p-th root of unity")
    phi.add_argument("--poly", action="store_true", help="degree-3 polynomial closed form")

    cls = subs.add_parser("classify", help="count class of a commuting pair")
    _add_common(cls)
    cls.add_argument("--depth", type=int, default=12, help="rewrite search budget")

    sweep = subs.add_parser("sweep", help="NDJSON family sweep")
    sweep.add_argument("--family", choices=("sigma12", "golden", "s4"), required=True)
    sweep.add_argument("--n", default="0..12", help="range a..b for the family power")
    sweep.add_argument("--k", default="-3..3", help="range a..b for the s4 family")
    sweep.add_argument("--m", default="-3..3", help="range a..b for the s4 family")
    sweep.add_argument("--p-list", default="3,5,7", help="comma-separated primes")
    sweep.add_argument("--jobs", type=int, default=1, help="worker processes")

    subs.add_parser("selftest", help="run the acceptance suite")
    return parser


def _parse_range(text: str) -> range:
    lo, _, hi = text.partition("..")
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError as exc:
        raise _UsageError(f"bad range {text!r}, expected a..b") from exc


def _report(command: str, inputs: dict, results: dict, started: float) -> dict:
    return {
        "schema": 1,
        "command": command,
        "inputs": inputs,
        "results": results,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True))
        return
    for key, value in report["results"].items():
        print(f"{key}: {value}")


def _pair_from(args) -> CommutingPair:
    a = parse_word(args.a, args.strands)
    b = parse_word(args.b, args.strands)
    return CommutingPair(a, b)


def _cmd_col(args) -> int:
    started = time.perf_counter()
    pair = _pair_from(args)
    space = coloring_kernel([pair.a, pair.b], args.p)
    report = _report(
        "col",
        {"a": args.a, "b": args.b, "strands": args.strands, "p": args.p},
        {"count": space.count, "dimension": space.dimension},
        started,
    )
    _emit(report, args.json)
    return EXIT_OK


def _cmd_tlk(args) -> int:
    started = time.perf_counter()
    pair = _pair_from(args)
    base = triple_linking(pair)
    variants = {
        kind: list(triple_linking_variant(pair, kind).as_tuple)
        for kind in ("reverse", "mirror", "reverse_mirror")
    }
    cert = chirality_certificate(pair)
    report = _report(
        "tlk",
        {"a": args.a, "b": args.b, "strands": args.strands},
        {
            "tlk": list(base.as_tuple),
            "variants": variants,
            "chirality": {
                "applies": cert.applies,
                "conclusion": cert.conclusion,
                "failed": list(cert.witness.failed),
            },
        },
        started,
    )
    _emit(report, args.json)
    return EXIT_OK


def _parse_nus(text: str | None) -> tuple[int, ...]:
    if not text:
        raise _UsageError("this phi form needs --nu")
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad --nu {text!r}") from exc


def _cmd_phi(args) -> int:
    started = time.perf_counter()
    inputs = {"p": args.p, "m": args.m}
    if args.reduced:
        nus = _parse_nus(args.nu)
        inputs.update({"nu": list(nus), "n": args.n, "form": "reduced"})
        result = reduced_phi(nus, args.m, args.n, args.p)
        results = {
            "value_coeffs": list(result.value.coeffs),
            "active": list(result.active),
            "obstruction": result.obstruction,
        }
    elif args.poly:
        nus = _parse_nus(args.nu)
        if len(nus) != 2:
            raise _UsageError("--poly needs exactly two exponent sums")
        inputs.update({"nu": list(nus), "form": "poly"})
        poly = phi_n3_polynomial(nus[0], nus[1], args.m, args.p)
        results = {"poly_coeffs": list(poly.coeffs)}
    elif args.method in ("shadow", "brute"):
        # both names enumerate colorings of --a; "closed" uses the formula
        word = parse_word(args.a, args.strands)
        inputs.update({"a": args.a, "strands": args.strands, "form": "shadow"})
        multiset = phi_via_shadow(word, args.m, args.p)
        results = {"multiset": [list(item) for item in multiset.counts]}
    else:
        nus = _parse_nus(args.nu)
        inputs.update({"nu": list(nus), "n": args.n, "form": "closed"})
        multiset = phi_closed_multiset(nus, args.m, args.n, args.p)
        results = {"multiset": [list(item) for item in multiset.counts]}
    _emit(_report("phi", inputs, results, started), args.json)
    return EXIT_OK


def _cmd_classify(args) -> int:
    started = time.perf_counter()
    pair = _pair_from(args)
    result = qdl.classify(pair, depth=args.depth)
    payload = qdl.qdl_class_to_json(result)
    report = _report(
        "classify",
        {"a": args.a, "b": args.b, "strands": args.strands, "depth": args.depth},
        {
            "class": payload["class"],
            "phi3": qdl.phi3(pair),
            "representative": payload["representative"],
        },
        started,
    )
    _emit(report, args.json)
    return EXIT_OK


def _sigma12_cell(cell: tuple[int, int]) -> dict:
    n, p = cell
    from .braid import sigma

    word = (sigma(3, 1) * sigma(3, 2)) ** n
    kernel = coloring_kernel([word], p).count
    closed = sigma12_count_closed_form(n, p)
    return {"schema": 1, "family": "sigma12", "n": n, "p": p,
            "kernel": kernel, "closed": closed, "agree": kernel == closed}


def _golden_cell(cell: tuple[int, int]) -> dict:
    n, p = cell
    from .braid import inverse, sigma

    word = (sigma(3, 1) * inverse(sigma(3, 2))) ** n
    count = coloring_kernel([word], p).count
    report = golden_unit_criterion(n, p)
    return {"schema": 1, "family": "golden", "n": n, "p": p, "count": count,
            "unit_is_one": report.full_count,
            "agree": report.full_count == (count == p**3)}


def _s4_cell(cell: tuple[int, int]) -> dict:
    k, m = cell
    poly = qdl.s4_family_phi3(k, m)
    return {"schema": 1, "family": "s4", "k": k, "m": m,
            "coeffs": list(poly.coeffs), "tc_bound": qdl.tc_index_bound(poly)}


_SWEEP_WORKERS = {"sigma12": _sigma12_cell, "golden": _golden_cell, "s4": _s4_cell}


def _cmd_sweep(args) -> int:
    primes = [int(part) for part in args.p_list.split(",") if part]
    if args.family in ("sigma12", "golden"):
        cells = [(n, p) for n in _parse_range(args.n) for p in primes]
    else:
        cells = [(k, m) for k in _parse_range(args.k) for m in _parse_range(args.m)]
    worker = _SWEEP_WORKERS[args.family]
    if args.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(args.jobs) as pool:
            for row in pool.imap(worker, cells):
                print(json.dumps(row, sort_keys=True))
    else:
        for cell in cells:
            print(json.dumps(worker(cell), sort_keys=True))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"toruslink: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "col":
            return _cmd_col(args)
        if args.command == "tlk":
            return _cmd_tlk(args)
        if args.command == "phi":
            return _cmd_phi(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "selftest":
            return EXIT_OK if run_all() else EXIT_USAGE
        raise AssertionError(f"unhandled command {args.command}")
    except _UsageError as exc:
        print(f"toruslink: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WordSyntaxError, GeneratorRangeError, NotOddPrimeError) as exc:
        print(f"toruslink: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonCommutingError as exc:
        print(f"toruslink: {exc}", file=sys.stderr)
        return EXIT_NONCOMMUTING
    except HypothesisViolationError as exc:
        print(f"toruslink: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ValueError as exc:
        print(f"toruslink: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

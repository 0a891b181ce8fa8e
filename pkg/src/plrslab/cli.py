"""Command-line front end.

Every command emits exactly one JSON envelope in json mode, a header plus
data rows in csv mode, or plain lines in text mode (the default).  Results
go to stdout only; diagnostics go to stderr, so pipelines stay clean.

Exit codes: 0 success / Complete, 2 invalid arguments or vector,
3 Incomplete, 4 ConjecturallyComplete, 5 cap exceeded, 6 conjecture
violation discovered by the census.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Iterable, Optional

from . import __version__, families, hunt, zeck
from .errors import (
    CapExceededError,
    CapTooLargeError,
    ConjectureViolation,
    NoLegalDecompositionError,
    OutOfRangeError,
    PLRSError,
    VectorValidationError,
)
from .seqcore import CoefficientVector, terms_prefix
from .verdicts import (
    AnalysisConfig,
    VerdictStatus,
    brown_scan,
    classify,
    is_complete_up_to,
    verdict_to_json,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCOMPLETE = 3
EXIT_CONJECTURAL = 4
EXIT_CAP = 5
EXIT_VIOLATION = 6

_STATUS_EXIT = {
    VerdictStatus.COMPLETE: EXIT_OK,
    VerdictStatus.INCOMPLETE: EXIT_INCOMPLETE,
    VerdictStatus.CONJECTURALLY_COMPLETE: EXIT_CONJECTURAL,
}


def _envelope(command: str, inputs: dict, results) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "tool_version": __version__,
    }


def _print_json(envelope: dict) -> None:
    print(json.dumps(envelope, ensure_ascii=False))


def _print_csv(header: list[str], rows: Iterable[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)


def _emit(args, envelope: dict, text_lines: list[str], csv_table=None) -> None:
    if args.format == "json":
        _print_json(envelope)
    elif args.format == "csv":
        if csv_table is None:
            raise OutOfRangeError(f"{envelope['command']} has no CSV form")
        _print_csv(*csv_table)
    else:
        for line in text_lines:
            print(line)


def _parse_span(text: str) -> list[int]:
    """Parse "2" or "1:4" (inclusive) into a list of ints."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [int(text)]


# --------------------------------------------------------------------------
# Commands


def cmd_gen(args) -> int:
    cv = CoefficientVector.parse(args.vector)
    if args.count < 1:
        raise OutOfRangeError("--count must be >= 1")
    terms = terms_prefix(cv, args.count)
    envelope = _envelope(
        "gen",
        {"vector": list(cv), "count": args.count},
        {"terms": terms},
    )
    csv_table = (["n", "term"], [[i + 1, t] for i, t in enumerate(terms)])
    _emit(args, envelope, [" ".join(str(t) for t in terms)], csv_table)
    return EXIT_OK


def cmd_analyze(args) -> int:
    cv = CoefficientVector.parse(args.vector)
    cfg = AnalysisConfig(horizon=args.horizon, oracle_cap=args.oracle_cap)
    verdict = classify(cv, cfg)
    horizon = cfg.effective_horizon(len(cv))
    gaps = brown_scan(cv, horizon).gaps
    payload = verdict_to_json(cv, verdict, gaps)
    payload["witness_verified"] = None
    if verdict.is_incomplete and verdict.witness is not None:
        if verdict.witness <= cfg.oracle_cap:
            ok, missing = is_complete_up_to(cv, verdict.witness)
            payload["witness_verified"] = (not ok) and missing == verdict.witness
    lines = [
        f"vector: {list(cv)}",
        f"verdict: {verdict.status.value}",
    ]
    if verdict.proof is not None:
        lines.append(f"proof: {verdict.proof.rule.value} {verdict.proof.params}")
    if verdict.is_incomplete:
        lines.append(f"first failure: {verdict.first_failure_index}")
        lines.append(f"witness: {verdict.witness}")
        if payload["witness_verified"] is not None:
            lines.append(f"witness verified: {payload['witness_verified']}")
    if verdict.is_conjectural:
        lines.append(f"scanned horizon: {verdict.horizon}")
    lines.append("gaps: " + " ".join(str(g) for g in gaps))
    envelope = _envelope(
        "analyze",
        {"vector": list(cv), "horizon": args.horizon, "oracle_cap": args.oracle_cap},
        payload,
    )
    csv_table = (["n", "gap"], [[i + 1, g] for i, g in enumerate(gaps)])
    _emit(args, envelope, lines, csv_table)
    return _STATUS_EXIT[verdict.status]


def cmd_decompose(args) -> int:
    cv = CoefficientVector.parse(args.vector)
    if args.n < 0:
        raise OutOfRangeError("N must be >= 0")
    results: dict = {"N": args.n}
    lines: list[str] = []
    if args.mode in ("legal", "both"):
        try:
            digits = zeck.legal_decompose(cv, args.n)
        except NoLegalDecompositionError:
            results["legal"] = None
            lines.append("legal: none")
        else:
            results["legal"] = zeck.decomposition_json(cv, digits)
            rendered = zeck.render_decomposition(cv, digits)
            results["legal"]["rendered"] = rendered
            lines.append(f"legal: {rendered}" if args.n else "legal: empty")
    if args.mode in ("distinct", "both"):
        if args.n == 0:
            results["distinct"] = {"indices": [], "terms": []}
            lines.append("distinct: empty")
        else:
            dd = zeck.distinct_decompose(cv, args.n, cap=args.oracle_cap)
            if dd is None:
                results["distinct"] = None
                lines.append("distinct: none")
            else:
                results["distinct"] = {"indices": list(dd.indices), "terms": list(dd.terms)}
                rhs = " + ".join(str(t) for t in reversed(dd.terms))
                lines.append(f"distinct: {args.n} = {rhs}")
    envelope = _envelope(
        "decompose",
        {"vector": list(cv), "N": args.n, "mode": args.mode},
        results,
    )
    _emit(args, envelope, lines)
    return EXIT_OK


def cmd_bound(args) -> int:
    chosen = [name for name in ("single_one", "double_one", "g_ones", "shift") if getattr(args, name)]
    if len(chosen) != 1:
        raise OutOfRangeError("choose exactly one of --single-one/--double-one/--g-ones/--shift")
    kind = chosen[0]
    inputs: dict = {"family": kind}
    vector = None
    if kind == "single_one":
        if args.k is None:
            raise OutOfRangeError("--single-one requires --k")
        bound = families.max_n_single_one(args.k)
        inputs["k"] = args.k
    elif kind == "double_one":
        if args.k is None:
            raise OutOfRangeError("--double-one requires --k")
        bound = families.max_n_double_one(args.k)
        inputs["k"] = args.k
    elif kind == "g_ones":
        if args.k is None or args.g is None:
            raise OutOfRangeError("--g-ones requires --g and --k")
        bound = families.max_n_g_ones(args.g, args.k)
        inputs.update({"g": args.g, "k": args.k})
        if bound is None:
            envelope = _envelope("bound", inputs, {"max_n": None, "rule": None, "exact": None})
            _emit(args, envelope, ["no closed form for g < k"])
            return EXIT_OK
    else:
        if args.length is None or args.i is None:
            raise OutOfRangeError("--shift requires --L and --i")
        bound = families.corollary_shift_bound(args.length, args.i)
        vector = families.shifted_one_vector(args.length, args.i, bound.max_n)
        inputs.update({"L": args.length, "i": args.i})
    results = {"max_n": bound.max_n, "rule": bound.rule, "exact": bound.exact}
    lines = [str(bound.max_n)]
    if vector is not None:
        results["vector"] = list(vector)
        lines.append(f"vector: {list(vector)}")
    envelope = _envelope("bound", inputs, results)
    _emit(args, envelope, lines)
    return EXIT_OK


def cmd_maxn(args) -> int:
    prefix = [int(p) for p in args.prefix.split(",")]
    cfg = AnalysisConfig(horizon=args.horizon)
    try:
        emp = families.empirical_max_n(prefix, cfg)
    except ValueError as exc:
        raise VectorValidationError(str(exc)) from exc
    results = {
        "prefix": prefix,
        "max_n": emp.max_n,
        "proven_max_n": emp.proven_max_n,
        "proof": emp.proof.rule.value if emp.proof else None,
    }
    envelope = _envelope("maxn", {"prefix": prefix, "horizon": args.horizon}, results)
    lines = [str(emp.max_n)]
    if emp.proven_max_n != emp.max_n:
        lines.append(f"proven only up to {emp.proven_max_n}")
    _emit(args, envelope, lines)
    return EXIT_OK


def cmd_census(args) -> int:
    if args.length >= 5 and not args.deep:
        raise OutOfRangeError(f"census at L = {args.length} needs --deep (large enumeration)")
    report = hunt.first_failure_census(
        args.length,
        args.deep_horizon,
        jobs=args.jobs,
        checkpoint_path=args.checkpoint,
        rows_path=args.rows,
    )
    payload = report.to_json()
    envelope = _envelope(
        "census",
        {
            "L": args.length,
            "deep_horizon": report.deep_horizon,
            "jobs": args.jobs,
        },
        payload,
    )
    lines = [
        f"L: {report.length}",
        f"vectors scanned: {report.vectors_scanned}",
        f"max first failure: {report.max_first_failure}",
        "extremal: " + "; ".join(str(list(v)) for v in report.extremal_vectors),
        f"conjectural survivors: {report.equality_window_vectors}",
    ]
    lines.extend(f"note: {n}" for n in report.notes)
    csv_rows = [
        [
            ",".join(str(c) for c in r.vector),
            "" if r.first_failure is None else r.first_failure,
            r.verdict,
            r.proof,
        ]
        for r in report.rows
    ]
    _emit(args, envelope, lines, (hunt.CENSUS_CSV_HEADER, csv_rows))
    return EXIT_OK


def cmd_figure(args) -> int:
    rows = families.figure1_table(
        _parse_span(args.k_range), _parse_span(args.g_range), jobs=args.jobs
    )
    payload = [
        {
            "k": r.k,
            "g": r.g,
            "empirical_max_n": r.empirical_max_n,
            "closed_form_max_n": r.closed_form_max_n,
            "provenance": r.provenance,
        }
        for r in rows
    ]
    envelope = _envelope(
        "figure",
        {"k_range": args.k_range, "g_range": args.g_range},
        {"rows": payload},
    )
    lines = [
        f"k={r.k} g={r.g} empirical={r.empirical_max_n} "
        f"closed={'-' if r.closed_form_max_n is None else r.closed_form_max_n} "
        f"({r.provenance})"
        for r in rows
    ]
    csv_rows = [
        [
            r.k,
            r.g,
            r.empirical_max_n,
            "" if r.closed_form_max_n is None else r.closed_form_max_n,
            r.provenance,
        ]
        for r in rows
    ]
    _emit(args, envelope, lines, (families.FIGURE_CSV_HEADER, csv_rows))
    return EXIT_OK


# --------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plrslab",
        description="Completeness lab for positive linear recurrence sequences",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "print sequence terms")
    p.add_argument("vector", help="comma-separated coefficients, e.g. 1,0,4")
    p.add_argument("--count", type=int, default=10)

    p = add("analyze", cmd_analyze, "classify a generator as complete/incomplete")
    p.add_argument("vector")
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--oracle-cap", type=int, default=10**6)

    p = add("decompose", cmd_decompose, "legal and distinct decompositions of N")
    p.add_argument("vector")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=["legal", "distinct", "both"], default="both")
    p.add_argument("--oracle-cap", type=int, default=zeck.DEFAULT_DISTINCT_CAP)

    p = add("bound", cmd_bound, "closed-form maximal last coefficients")
    p.add_argument("--single-one", dest="single_one", action="store_true")
    p.add_argument("--double-one", dest="double_one", action="store_true")
    p.add_argument("--g-ones", dest="g_ones", action="store_true")
    p.add_argument("--shift", action="store_true")
    p.add_argument("--k", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--L", dest="length", type=int)
    p.add_argument("--i", dest="i", type=int)

    p = add("maxn", cmd_maxn, "empirical maximal last coefficient for a prefix")
    p.add_argument("prefix", help="comma-separated prefix, e.g. 1,1,0,0")
    p.add_argument("--horizon", type=int, default=None)

    p = add("census", cmd_census, "exhaustive first-failure census at length L")
    p.add_argument("--L", dest="length", type=int, required=True)
    p.add_argument("--deep-horizon", dest="deep_horizon", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--deep", action="store_true", help="allow L >= 5")
    p.add_argument("--checkpoint", default=None, help="shard checkpoint file")
    p.add_argument("--rows", default=None, help="incremental rows CSV (with --checkpoint)")

    p = add("figure", cmd_figure, "empirical vs closed-form table over (k, g)")
    p.add_argument("--k-range", dest="k_range", required=True, help="e.g. 1:4 or 2")
    p.add_argument("--g-range", dest="g_range", required=True, help="e.g. 1:8 or 3")
    p.add_argument("--jobs", type=int, default=1)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except VectorValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (CapTooLargeError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ConjectureViolation as exc:
        print(f"conjecture violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except OutOfRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except PLRSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

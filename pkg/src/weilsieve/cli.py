"""Batch driver: enumerate candidates, run the test pipeline, emit reports.

Output formats: jsonlines (one candidate per line, replayable certificates)
and text (one narrative paragraph per candidate).  Two runs with the same
configuration produce byte-identical jsonlines output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arith, sieve, weil
from .enumerate import EnumConstraints, enumerate_real_weil
from .sieve import SieveConfig, SieveReport
from .weil import RealWeilPoly

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3

TEST_NAMES = tuple(name for name, _fn in sieve._PIPELINE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weilsieve",
        description="Enumerate real Weil polynomials under point-count "
                    "constraints and decide which classes can contain "
                    "Jacobians.")
    parser.add_argument("--q", type=int, required=True,
                        help="prime power field size")
    parser.add_argument("--g", type=int, help="genus (required unless --h)")
    parser.add_argument("--h", dest="h_coeffs", metavar="C0,C1,...,1",
                        help="analyze a single candidate with the given "
                             "ascending coefficients instead of enumerating")
    parser.add_argument("--points", type=int,
                        help="exact point count #C(F_q)")
    parser.add_argument("--defect", type=int,
                        help="maximum defect from the Weil-Serre bound")
    parser.add_argument("--horizon", type=int,
                        help="extension degrees to check (default 2g)")
    parser.add_argument("--tests",
                        help="comma-separated subset of: " + ", ".join(TEST_NAMES))
    parser.add_argument("--exhaustive", action="store_true",
                        help="run every test even after an elimination")
    parser.add_argument("--format", choices=("text", "jsonlines"),
                        default="text")
    parser.add_argument("--effort", type=int, default=arith.DEFAULT_BUDGET,
                        help="integer factorization budget")
    parser.add_argument("--out", help="output file (default stdout)")
    return parser


def report_row(report: SieveReport) -> dict:
    return {
        "q": report.candidate.q,
        "g": report.candidate.g,
        "h": report.candidate.coeffs,
        "defect": weil.defect(report.candidate),
        "point_counts": list(report.profile.point_counts),
        "verdict": report.verdict,
        "tests": [
            {"name": o.test_name, "status": o.status,
             "certificate": o.certificate}
            for o in report.outcomes
        ],
    }


def _poly_str(coeffs: list[int]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(f"{c:+d}")
        else:
            var = "x" if i == 1 else f"x^{i}"
            if c == 1:
                terms.append(f"+{var}")
            elif c == -1:
                terms.append(f"-{var}")
            else:
                terms.append(f"{c:+d}{var}")
    s = "".join(terms) or "0"
    return s[1:] if s.startswith("+") else s


def _text_report(report: SieveReport) -> str:
    cand = report.candidate
    lines = [f"h = {_poly_str(cand.coeffs)} over F_{cand.q}  "
             f"[N = {report.profile.N(1)}, defect {weil.defect(cand)}]"]
    for o in report.outcomes:
        if o.status in ("inapplicable",):
            continue
        if o.status == "unknown" and "reason" not in o.certificate:
            continue
        detail = json.dumps(o.certificate, sort_keys=True)
        lines.append(f"  {o.test_name}: {o.status}  {detail}")
    lines.append(f"  verdict: {report.verdict}")
    return "\n".join(lines)


def _parse_tests(arg: str | None) -> tuple[str, ...] | None:
    if arg is None:
        return None
    names = tuple(t.strip() for t in arg.split(",") if t.strip())
    for t in names:
        if t not in TEST_NAMES:
            raise ValueError(f"unknown test name: {t}")
    return names


def analyze_single(coeffs: list[int], q: int,
                   config: SieveConfig | None = None) -> SieveReport:
    h = RealWeilPoly.checked(coeffs, q)
    return sieve.run_pipeline(h, config)


def run(args, sink) -> int:
    if arith.prime_power_split(args.q) is None:
        print(f"error: q = {args.q} is not a prime power", file=sys.stderr)
        return EXIT_USAGE
    try:
        tests = _parse_tests(args.tests)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.defect is not None and args.defect < 0:
        print("error: defect must be non-negative", file=sys.stderr)
        return EXIT_USAGE

    if args.h_coeffs is not None:
        try:
            coeffs = [int(c) for c in args.h_coeffs.split(",")]
        except ValueError:
            print("error: --h expects comma-separated integers", file=sys.stderr)
            return EXIT_USAGE
        g = len(coeffs) - 1
    else:
        if args.g is None or args.g < 1:
            print("error: --g (positive) is required without --h", file=sys.stderr)
            return EXIT_USAGE
        g = args.g

    horizon = args.horizon if args.horizon else 2 * g
    if horizon < 1:
        print("error: horizon must be positive", file=sys.stderr)
        return EXIT_USAGE

    if args.points is not None and args.defect is not None:
        import math
        m = math.isqrt(4 * args.q)
        implied = g * m - (args.points - args.q - 1)
        if implied > args.defect:
            print("error: points and defect constraints are contradictory",
                  file=sys.stderr)
            return EXIT_USAGE

    config = SieveConfig(horizon=horizon, exhaustive=args.exhaustive,
                         tests=tests, effort=args.effort)

    if args.h_coeffs is not None:
        try:
            report = analyze_single(coeffs, args.q, config)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        _emit(sink, args.format, [report], summary=False)
        return EXIT_OK

    constraints = EnumConstraints(
        exact_point_count=args.points,
        max_defect=args.defect,
        require_nonneg_places_to=horizon,
    )
    reports = []
    for cand in enumerate_real_weil(args.q, g, constraints):
        reports.append(sieve.run_pipeline(cand, config))
    _emit(sink, args.format, reports, summary=True)
    return EXIT_OK


def _emit(sink, fmt: str, reports: list[SieveReport], summary: bool) -> None:
    if fmt == "jsonlines":
        for report in reports:
            sink.write(json.dumps(report_row(report), sort_keys=True,
                                  separators=(",", ":")))
            sink.write("\n")
        return
    for report in reports:
        sink.write(_text_report(report))
        sink.write("\n")
    if summary:
        counts = {sieve.ELIMINATED: 0, sieve.CONSTRAINED: 0, sieve.OPEN: 0}
        for report in reports:
            counts[report.verdict] += 1
        sink.write(f"{len(reports)} candidates: "
                   f"{counts[sieve.ELIMINATED]} eliminated, "
                   f"{counts[sieve.CONSTRAINED]} constrained, "
                   f"{counts[sieve.OPEN]} open\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.out:
            with open(args.out, "w") as sink:
                return run(args, sink)
        return run(args, sys.stdout)
    except (ArithmeticError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())

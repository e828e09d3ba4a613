"""Command-line surface: entropy reports for expressions and sample files.

Subcommands:
    entropy   full report (counts, rectangle, both entropy routes)
    aspect    length and width of a polynomial's rectangle
    derive    derivative and total polynomial
    dist      empirical distribution as exact rationals
    laws      run the exhaustive law suites

Exit codes: 0 on success, 1 on a domain error (bad sample data, undefined
quantity, law violation), 2 on usage or expression syntax errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .entropy import (
    TOLERANCE,
    categorical_entropy,
    empirical_distribution,
    shannon_entropy,
)
from .finpoly import FinPoly
from .laws import run_all
from .parsing import ParseError, parse_poly
from .rectangles import RectObj
from .samples import load_sample_csv, poly_from_sample


class UsageError(Exception):
    """Command line arguments do not form a valid request."""


def _format_real(value: float) -> str:
    return f"{value:.12g}"


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _format_real(value)
    if isinstance(value, list):
        return " ".join(str(item) for item in value)
    return str(value)


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        ready = {
            key: float(_format_real(value)) if isinstance(value, float) else value
            for key, value in report.items()
        }
        return json.dumps(ready, indent=2)
    pad = max(len(key) for key in report)
    return "\n".join(f"{key:<{pad}}  {_format_value(value)}" for key, value in report.items())


def entropy_report(p: FinPoly) -> dict:
    """All the report fields for one polynomial; undefined ones are left out."""
    rect = categorical_entropy(p)
    report = {
        "polynomial": str(p),
        "positions": p.position_count(),
        "draws": p.term_count(),
        "gamma_total": str(rect.b),
        "length": rect.a,
    }
    if rect.a >= 1:
        report["width"] = rect.width()
    report["entropy_categorical"] = rect.log_aspect_ratio()
    if p.position_count() > 0 and p.term_count() > 0:
        shannon = shannon_entropy(empirical_distribution(p))
        report["shannon_direct"] = shannon
        report["match"] = abs(shannon - report["entropy_categorical"]) <= TOLERANCE
    return report


def _load_polynomial(args) -> FinPoly:
    if args.sample is not None:
        if args.expr is not None:
            raise UsageError("give an expression or --sample, not both")
        table = load_sample_csv(args.sample, args.outcomes)
        return poly_from_sample(table)
    if args.expr is None:
        raise UsageError("give a polynomial expression or --sample <csv>")
    if getattr(args, "outcomes", None) is not None:
        raise UsageError("--outcomes only makes sense together with --sample")
    return parse_poly(args.expr)


def _cmd_entropy(args) -> str:
    return _render(entropy_report(_load_polynomial(args)), args.format)


def _cmd_aspect(args) -> str:
    p = parse_poly(args.expr)
    rect = RectObj(p.position_count(), p.section_count())
    if rect.a == 0:
        raise ValueError("aspect undefined: the zero polynomial has no positions")
    report = {"polynomial": str(p), "length": rect.a, "width": rect.width()}
    return _render(report, args.format)


def _cmd_derive(args) -> str:
    p = parse_poly(args.expr)
    report = {
        "polynomial": str(p),
        "derivative": str(p.derivative()),
        "total": str(p.total_polynomial()),
    }
    return _render(report, args.format)


def _cmd_dist(args) -> str:
    p = parse_poly(args.expr)
    dist = empirical_distribution(p)
    report = {
        "polynomial": str(p),
        "distribution": [str(prob) for prob in dist.probabilities],
    }
    return _render(report, args.format)


def _cmd_laws(args) -> str:
    results = run_all(args.max_positions, args.max_exponent)
    if args.format == "json":
        return json.dumps(
            {
                "suites": [{"name": r.name, "cases": r.cases} for r in results],
                "total_cases": sum(r.cases for r in results),
                "all_passed": True,
            },
            indent=2,
        )
    pad = max(len(r.name) for r in results)
    lines = [f"{r.name:<{pad}}  {r.cases:>7} cases  ok" for r in results]
    lines.append(f"all {len(results)} suites passed ({sum(r.cases for r in results)} cases)")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyentropy",
        description="Entropy of finite samples through polynomial functors.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("text", "json"), default="text",
                        help="output rendering (default: text)")
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("entropy", parents=[shared],
                         help="full entropy report for an expression or a sample CSV")
    cmd.add_argument("expr", nargs="?", help="polynomial expression, e.g. 'y^4 + 4y'")
    cmd.add_argument("--sample", metavar="CSV", help="sample file with header draw,outcome")
    cmd.add_argument("--outcomes", metavar="FILE", help="declared outcomes, one id per line")
    cmd.set_defaults(handler=_cmd_entropy)

    cmd = sub.add_parser("aspect", parents=[shared],
                         help="length and width of the polynomial's rectangle")
    cmd.add_argument("expr")
    cmd.set_defaults(handler=_cmd_aspect)

    cmd = sub.add_parser("derive", parents=[shared],
                         help="derivative and total polynomial")
    cmd.add_argument("expr")
    cmd.set_defaults(handler=_cmd_derive)

    cmd = sub.add_parser("dist", parents=[shared],
                         help="empirical distribution as exact rationals")
    cmd.add_argument("expr")
    cmd.set_defaults(handler=_cmd_dist)

    cmd = sub.add_parser("laws", parents=[shared],
                         help="run the exhaustive law suites")
    cmd.add_argument("--max-positions", type=int, default=3)
    cmd.add_argument("--max-exponent", type=int, default=3)
    cmd.set_defaults(handler=_cmd_laws)
    return parser


def main(argv: list[str] | None = None) -> int:
    # section counts outgrow the default int-to-decimal cap on big samples
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        return 0 if exc.code is None else 2
    try:
        output = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(output)
    return 0


def entry_point() -> None:
    sys.exit(main())

"""Command line interface.

Exit codes:
    0  success
    2  bad arguments (usage printed to stderr)
    3  unsupported field parameter d
    4  no closed form for the requested L-value
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bruinier import KReport, UnsupportedFieldError, sweep, verdict
from .characters import SUPPORTED_D, field_params
from .covolumes import covolume, default_disc_case, vol_numeric
from .exact import exact_to_float, format_decimal
from .special_values import DEFAULT_TERMS, l_numeric, l_odd_exact

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_NO_CLOSED_FORM = 4

FORMAT_ENV = "HERMK_FORMAT"
FORMATS = ("text", "json", "csv")


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fmt(x, digits: int) -> str:
    return format_decimal(exact_to_float(x, digits))


def _csv(header: list[str], row: list) -> str:
    return ",".join(header) + "\n" + ",".join(str(v) for v in row) + "\n"


def _require_squarefree(d: int) -> None:
    try:
        field_params(d)
    except ValueError as exc:
        raise _Fail(EXIT_UNSUPPORTED, str(exc)) from None


def cmd_kvalue(args) -> str:
    if args.d not in SUPPORTED_D:
        raise _Fail(EXIT_UNSUPPORTED, str(UnsupportedFieldError(args.d)))
    report = verdict(args.d, args.n, args.congruence)
    return render_report(report, args.format, args.digits)


def render_report(report: KReport, fmt: str, digits: int = 6) -> str:
    if fmt == "json":
        return report.to_json(digits) + "\n"
    if fmt == "csv":
        data = report.to_dict(digits)
        return _csv(list(data), list(data.values()))
    return report.to_text(digits) + "\n"


def cmd_lvalue(args) -> str:
    if args.k < 3 or args.k % 2 == 0:
        raise _Fail(EXIT_NO_CLOSED_FORM, f"L({args.k}): no closed form (need odd k >= 3)")
    _require_squarefree(args.d)
    lv = l_odd_exact(args.k, args.d)
    data = {"d": args.d, "k": args.k, "value": str(lv.value), "float": _fmt(lv.value, args.digits)}
    if args.verify:
        series = l_numeric(args.k, args.d, args.terms)
        exact = float(lv.value)
        data["numeric"] = series.value
        data["rel_dev"] = abs(series.value - exact) / exact
    if args.format == "json":
        data["float"] = float(data["float"])
        return json.dumps(data) + "\n"
    if args.format == "csv":
        return _csv(list(data), list(data.values()))
    lines = [str(lv.value), f"~ {data['float']}"]
    if args.verify:
        lines.append(f"series ({args.terms} terms): {data['numeric']!r}, relative deviation {data['rel_dev']:.3e}")
    return "\n".join(lines) + "\n"


def cmd_vol(args) -> str:
    _require_squarefree(args.d)
    case = args.disc_case or default_disc_case(args.d)
    try:
        c = covolume(args.lattice, args.n, args.d, case)
    except ValueError as exc:
        raise _Fail(EXIT_UNSUPPORTED, str(exc)) from None
    data = {
        "lattice": c.lattice.value,
        "n": c.n,
        "d": c.d,
        "disc_case": c.disc_case.value,
        "value": str(c.value),
        "float": _fmt(c.value, args.digits),
    }
    if args.verify:
        data["rel_dev"] = vol_numeric(c, args.terms).rel_dev
    if args.format == "json":
        data["float"] = float(data["float"])
        return json.dumps(data) + "\n"
    if args.format == "csv":
        return _csv(list(data), list(data.values()))
    lines = [f"Vol({c.lattice.value}_{c.n}), d = {c.d}, {c.disc_case.value}", str(c.value), f"~ {data['float']}"]
    if args.verify:
        lines.append(f"relative deviation from series: {data['rel_dev']:.3e}")
    return "\n".join(lines) + "\n"


def _parse_d_list(text: str) -> list[int]:
    if text == "all":
        return list(SUPPORTED_D)
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad d list {text!r}") from None


def cmd_table(args) -> str:
    bad = [d for d in args.d_list if d not in SUPPORTED_D]
    if bad:
        raise _Fail(EXIT_UNSUPPORTED, str(UnsupportedFieldError(bad[0])))
    table = sweep(args.d_list, args.n_max, args.congruence)
    if args.format == "json":
        return table.to_json(args.digits)
    if args.format == "csv":
        return table.to_csv(args.digits)
    return table.to_text(args.digits)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    if default_format not in FORMATS:
        default_format = "text"

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=default_format)
    common.add_argument("--digits", type=_positive, default=6, help="significant digits for floats")

    parser = argparse.ArgumentParser(
        prog="hermk",
        description="Bruinier invariants K for U(diag(1,...,1,-1)) over Q(sqrt(-d)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kvalue", parents=[common], help="K and the freeness verdict for one (d, n)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--congruence", action="store_true", help="also require K = n+1 mod 6 when d = 3")
    p.set_defaults(func=cmd_kvalue, min_n=2)

    p = sub.add_parser("lvalue", parents=[common], help="exact L(k, chi_D) for odd k >= 3")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="compare with the Dirichlet series")
    p.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    p.set_defaults(func=cmd_lvalue)

    p = sub.add_parser("vol", parents=[common], help="Hirzebruch-Mumford covolume of L_n or M_n")
    p.add_argument("--lattice", choices=("L", "M"), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--disc-case", choices=("MinusD", "Minus4D"), default=None)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    p.set_defaults(func=cmd_vol, min_n=1)

    p = sub.add_parser("table", parents=[common], help="verdicts over a range of (d, n)")
    p.add_argument("--d-list", type=_parse_d_list, default=list(SUPPORTED_D), help="comma separated, or 'all'")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--congruence", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n", None) is not None and args.n < args.min_n:
        parser.print_usage(sys.stderr)
        print(f"hermk: error: --n must be >= {args.min_n}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "table" and args.n_max < 2:
        parser.print_usage(sys.stderr)
        print("hermk: error: --n-max must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        out = args.func(args)
    except _Fail as exc:
        print(f"hermk: {exc}", file=sys.stderr)
        return exc.code
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: survey, rho, invphi, bounds, products, probe, squares.
Output is a single JSON value or a CSV table on stdout (or --out PATH),
byte-identical across reruns with the same arguments.  A config file of
key=value lines may supply defaults; explicit flags win.

Exit codes: 0 success, 2 invalid arguments or polynomial, 3 computation
errors (range overflow, nontotient input, and the like).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional

from .bound_lab import (
    bounds_summary,
    product_split,
    product_twisted,
)
from .case_analysis import ew_density_probe, square_divisor_count, survey, threshold_T
from .quad_poly import QuadPoly, rho
from .totient_range import inverse_totient

DEFAULT_A = 0.7604
T_FLOOR = 16.0

_CONFIG_KEYS = {
    "poly", "x", "t", "a", "delta", "bound", "d", "y", "k", "format", "out",
    "records", "allow-reducible",
}
_BOOL_FLAGS = {"records", "allow-reducible"}


def _sig12(value: float) -> float:
    return float(f"{value:.12g}")


def _poly_arg(text: str) -> QuadPoly:
    try:
        return QuadPoly.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _t_arg(text: str):
    if text.strip().lower() == "auto":
        return "auto"
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a number or 'auto'") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadtotient",
        description="Totient values of integer quadratics: surveys, root counts, "
        "inverse totients, prime products, and solved exponent constants.",
    )
    parser.add_argument(
        "--config",
        metavar="PATH",
        help="key=value lines supplying defaults for the subcommand flags",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_survey = sub.add_parser("survey", help="classify every n <= x and tally cases")
    p_survey.add_argument("--poly", type=_poly_arg, required=True, metavar="a,b,c")
    p_survey.add_argument("--x", type=_positive_int, required=True)
    p_survey.add_argument(
        "--T", type=_t_arg, default="auto", help="cutoff, or 'auto' (clamped to >= 16)"
    )
    p_survey.add_argument("--A", type=float, default=DEFAULT_A)
    p_survey.add_argument("--delta", type=float, default=0.0)
    p_survey.add_argument("--format", choices=("csv", "json"), default="json")
    p_survey.add_argument("--out", default="-", help="output path, '-' for stdout")
    p_survey.add_argument("--records", action="store_true", help="keep per-n records")
    p_survey.add_argument("--allow-reducible", action="store_true")

    p_rho = sub.add_parser("rho", help="root count of the quadratic mod k")
    p_rho.add_argument("--poly", type=_poly_arg, required=True, metavar="a,b,c")
    p_rho.add_argument("--k", type=_positive_int, required=True)
    p_rho.add_argument("--out", default="-")

    p_inv = sub.add_parser("invphi", help="all m with phi(m) = n")
    p_inv.add_argument("n", type=_positive_int)
    p_inv.add_argument("--out", default="-")

    p_bounds = sub.add_parser("bounds", help="solved exponent constants as JSON")
    p_bounds.add_argument("--out", default="-")

    p_prod = sub.add_parser("products", help="split and twisted prime products")
    p_prod.add_argument("--d", type=int, required=True)
    p_prod.add_argument("--y", type=float, required=True)
    p_prod.add_argument("--out", default="-")

    p_probe = sub.add_parser(
        "probe", help="density of n <= x with a prime p > T, p - 1 | P(n)"
    )
    p_probe.add_argument("--poly", type=_poly_arg, required=True, metavar="a,b,c")
    p_probe.add_argument("--T", type=float, required=True)
    p_probe.add_argument("--x", type=_positive_int, required=True)
    p_probe.add_argument("--out", default="-")

    p_squares = sub.add_parser(
        "squares", help="count n <= x with a square divisor of P(n) above bound"
    )
    p_squares.add_argument("--poly", type=_poly_arg, required=True, metavar="a,b,c")
    p_squares.add_argument("--x", type=_positive_int, required=True)
    p_squares.add_argument("--bound", type=_positive_int, required=True)
    p_squares.add_argument("--out", default="-")

    return parser


def _read_config(path: str) -> list[str]:
    """Translate key=value lines into argv fragments (inserted before flags)."""
    fragments: list[str] = []
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"config line is not key=value: {line!r}")
            key, _, value = line.partition("=")
            key = key.strip().lower().replace("_", "-")
            value = value.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"unknown config key: {key!r}")
            flag = "--" + ("T" if key == "t" else "A" if key == "a" else key)
            if key in _BOOL_FLAGS:
                if value.lower() in ("1", "true", "yes", "on"):
                    fragments.append(flag)
                elif value.lower() not in ("0", "false", "no", "off"):
                    raise ValueError(f"config key {key!r} expects a boolean, got {value!r}")
            else:
                fragments.extend((flag, value))
    return fragments


def _resolve_t(args: argparse.Namespace) -> float:
    if args.T == "auto":
        if args.x > math.exp(math.e):
            return max(T_FLOOR, threshold_T(args.x, args.A, args.delta))
        return T_FLOOR
    return args.T


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _json_line(value, indent: Optional[int] = None) -> str:
    if indent is None:
        return json.dumps(value, separators=(",", ":")) + "\n"
    return json.dumps(value, indent=indent) + "\n"


def _fraction_dict(frac: Fraction, count: int, total: int) -> dict:
    return {
        "count": count,
        "total": total,
        "density": f"{frac.numerator}/{frac.denominator}",
        "value": frac.numerator / frac.denominator,
    }


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # Peel --config first so its values become overridable defaults.
    if "--config" in argv:
        at = argv.index("--config")
        if at + 1 >= len(argv):
            print("error: --config needs a path", file=sys.stderr)
            return 2
        path = argv[at + 1]
        del argv[at : at + 2]
        try:
            fragments = _read_config(path)
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        if not argv:
            print("error: missing subcommand", file=sys.stderr)
            return 2
        argv = [argv[0]] + fragments + argv[1:]

    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "survey" and not args.allow_reducible and not args.poly.is_irreducible():
        print(
            f"error: {args.poly.to_text()} is reducible (square discriminant "
            f"{args.poly.discriminant()}); pass --allow-reducible to proceed",
            file=sys.stderr,
        )
        return 2

    try:
        text = _render(args)
    except (ValueError, OverflowError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _emit(text, args.out)
    return 0


def _render(args: argparse.Namespace) -> str:
    if args.command == "survey":
        t_cut = _resolve_t(args)
        keep = args.records or args.format == "csv"
        report = survey(args.poly, args.x, t_cut, args.A, keep_records=keep)
        if args.format == "csv":
            return report.to_csv()
        summary = report.summary_dict()
        if args.records:
            summary["records"] = [
                {
                    "n": rec.n,
                    "value": rec.value,
                    "case": rec.case.value,
                    "p_max": rec.p_max,
                    "v": rec.v,
                    "omega_T_pm1": rec.omega_T_pm1,
                }
                for rec in report.records
            ]
        return _json_line(summary, indent=2)

    if args.command == "rho":
        return _json_line(rho(args.poly, args.k))

    if args.command == "invphi":
        return _json_line(list(inverse_totient(args.n).preimages))

    if args.command == "bounds":
        summary = {key: _sig12(value) for key, value in bounds_summary().items()}
        return _json_line(summary, indent=2)

    if args.command == "products":
        result = {
            "d": args.d,
            "y": args.y,
            "split": product_split(args.d, args.y),
            "twisted": product_twisted(args.d, args.y),
        }
        return _json_line(result, indent=2)

    if args.command == "probe":
        frac = ew_density_probe(args.poly, args.T, args.x)
        return _json_line(
            _fraction_dict(frac, int(frac * args.x), args.x), indent=2
        )

    if args.command == "squares":
        return _json_line(square_divisor_count(args.poly, args.x, args.bound))

    raise AssertionError(f"unhandled command {args.command}")


def run() -> None:
    """Console entry point."""
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())

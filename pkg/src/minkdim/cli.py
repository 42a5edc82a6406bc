"""Command-line front end.

Subcommands:
  moran      Moran root (image dimension) for a digit set
  bounds     dimension bounds for a digit ceiling n
  verdict    bounds vs. image dimension: the preservation verdict
  eval       Minkowski function value at a rational or a periodic CF
  empirical  per-depth covering-sum estimates (domain or image side)
  construct  table of image cylinders at a given depth

Every subcommand accepts --tol, --format {text,json,csv}, --out PATH and
--budget N; the environment variable MINKDIM_BUDGET overrides the default
enumeration budget when --budget is absent.  Exit codes: 0 success, 2 usage
error, 3 budget exceeded, 4 internal tolerance failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Callable

from . import __version__
from .cf_core import (
    DEFAULT_BUDGET,
    ContinuedFraction,
    DigitSet,
    cf_from_rational,
)
from .dim_bounds import jarnik_bounds, preservation_verdict
from .empirical_dim import Side, estimate_series, estimates_to_csv, successive_differences
from .errors import BudgetExceededError, ToleranceError
from .minkowski_eval import minkowski_finite, minkowski_periodic
from .moran_solver import MIN_TOLERANCE, moran_root
from .report import (
    DimensionReport,
    bounds_to_dict,
    decimal_str,
    estimate_to_dict,
    exact_number,
    fraction_str,
    moran_to_dict,
    mpf_str,
    verdict_to_dict,
)
from .selfsimilar import enumerate_image_cylinders

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_TOLERANCE = 4

MAX_SOLVER_TOLERANCE = 1e-3


def parse_digit_spec(text: str) -> DigitSet:
    """Digit sets given as ranges and/or lists: '1..9', '1,3,5', '1,4..6'."""
    values: list[int] = []
    for token in text.split(","):
        token = token.strip()
        try:
            if ".." in token:
                a_str, b_str = token.split("..", 1)
                a, b = int(a_str), int(b_str)
                if a > b:
                    raise ValueError
                values.extend(range(a, b + 1))
            else:
                values.append(int(token))
        except ValueError:
            raise ValueError(f"bad digit token {token!r} in {text!r}") from None
    return DigitSet.from_digits(values)


def parse_depth_spec(text: str) -> list[int]:
    """Depths given like digit specs: '3', '1..6', '2,4,6'."""
    out: list[int] = []
    for token in text.split(","):
        token = token.strip()
        try:
            if ".." in token:
                a_str, b_str = token.split("..", 1)
                a, b = int(a_str), int(b_str)
                if a > b:
                    raise ValueError
                out.extend(range(a, b + 1))
            else:
                out.append(int(token))
        except ValueError:
            raise ValueError(f"bad depth token {token!r} in {text!r}") from None
    return sorted(set(out))


def parse_rational(text: str) -> tuple[int, int]:
    """Rationals as 'p/q' or a bare integer."""
    try:
        if "/" in text:
            p_str, q_str = text.split("/", 1)
            return int(p_str), int(q_str)
        return int(text), 1
    except ValueError:
        raise ValueError(f"bad rational {text!r}; expected p/q") from None


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


def parse_cf(text: str) -> ContinuedFraction:
    """Continued fractions in three forms.

    '0;2,3'        finite word
    '0;2,(1,2)'    preperiod then parenthesized repeating block
    '0;1,2,1,2,...'  trailing ellipsis: the listed digits repeat forever
    """
    s = text.strip().strip("[]").replace(" ", "")
    if not s.startswith("0;"):
        raise ValueError(f"continued fraction must start with '0;', got {text!r}")
    body = s[2:]
    try:
        if body.endswith("..."):
            word = tuple(int(t) for t in body[:-3].rstrip(",").split(","))
            return ContinuedFraction((), _primitive_root(word))
        if "(" in body:
            head, _, rest = body.partition("(")
            if not rest.endswith(")"):
                raise ValueError
            period = tuple(int(t) for t in rest[:-1].split(","))
            head = head.rstrip(",")
            preperiod = tuple(int(t) for t in head.split(",")) if head else ()
            return ContinuedFraction(preperiod, _primitive_root(period))
        return ContinuedFraction(tuple(int(t) for t in body.split(",")))
    except ValueError:
        raise ValueError(f"cannot parse continued fraction {text!r}") from None


def resolve_budget(value: int | None) -> int:
    """--budget flag, else MINKDIM_BUDGET, else the library default."""
    if value is None:
        env = os.environ.get("MINKDIM_BUDGET")
        if env is None:
            return DEFAULT_BUDGET
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"MINKDIM_BUDGET is not an integer: {env!r}") from None
    if value < 1:
        raise ValueError("budget must be a positive integer")
    return value


def _solver_tol(value: float | None, default: float) -> float:
    tol = default if value is None else value
    if not MIN_TOLERANCE <= tol <= MAX_SOLVER_TOLERANCE:
        raise ValueError(
            f"tolerance must lie in [2^-50, {MAX_SOLVER_TOLERANCE}], got {tol}"
        )
    return tol


def _csv(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _cmd_moran(args) -> tuple[DimensionReport, str, str]:
    K = parse_digit_spec(args.digits)
    tol = _solver_tol(args.tol, default=1e-12)
    root = moran_root(K, tol)
    config = {"digits": list(K.digits), "tol": tol}
    report = DimensionReport(
        "moran",
        config,
        {"digit_set": str(K), "moran_root": moran_to_dict(root)},
    )
    text = "\n".join(
        [
            f"digit set: {K}",
            f"Moran root s: {mpf_str(root.s)}",
            f"residual |f(s)-1|: {mpf_str(root.residual, 6)} "
            f"({root.iterations} evaluations)",
            f"bracket: [{mpf_str(root.bracket[0])}, {mpf_str(root.bracket[1])}]",
        ]
    )
    csv = _csv(
        ["digits", "s", "residual", "iterations"],
        [
            [
                " ".join(map(str, K.digits)),
                mpf_str(root.s),
                mpf_str(root.residual, 6),
                str(root.iterations),
            ]
        ],
    )
    return report, text, csv


def _cmd_bounds(args) -> tuple[DimensionReport, str, str]:
    bounds = jarnik_bounds(args.n)
    config = {"n": args.n}
    report = DimensionReport(
        "bounds", config, {"bounds": bounds_to_dict(bounds)}
    )
    text = "\n".join(
        [
            f"n: {bounds.n}",
            f"dimension bounds: {bounds.lower!r} <= dim <= {bounds.upper!r}",
        ]
    )
    csv = _csv(
        ["n", "lower", "upper"],
        [[str(bounds.n), repr(bounds.lower), repr(bounds.upper)]],
    )
    return report, text, csv


def _cmd_verdict(args) -> tuple[DimensionReport, str, str]:
    tol = 1e-6 if args.tol is None else args.tol
    verdict = preservation_verdict(args.n, tol)
    config = {"n": args.n, "tol": tol}
    report = DimensionReport("verdict", config, {"verdict": verdict_to_dict(verdict)})
    text = "\n".join(
        [
            f"n: {verdict.n}",
            f"dimension bounds: [{verdict.bounds.lower!r}, {verdict.bounds.upper!r}]",
            f"image dimension (Moran root): {mpf_str(verdict.image_dimension.s)}",
            f"verdict: {verdict.preserved.name}",
            f"certified gap: {verdict.gap!r} (tolerance {tol})",
        ]
    )
    csv = _csv(
        ["n", "lower", "upper", "moran_root", "verdict", "gap"],
        [
            [
                str(verdict.n),
                repr(verdict.bounds.lower),
                repr(verdict.bounds.upper),
                mpf_str(verdict.image_dimension.s),
                verdict.preserved.value,
                repr(verdict.gap),
            ]
        ],
    )
    return report, text, csv


def _cmd_eval(args) -> tuple[DimensionReport, str, str]:
    if args.rational is not None:
        p, q = parse_rational(args.rational)
        cf = cf_from_rational(p, q)
        config: dict[str, Any] = {"rational": f"{p}/{q}"}
    else:
        cf = parse_cf(args.cf)
        config = {"cf": args.cf}
    if cf.is_finite:
        value = minkowski_finite(cf).as_fraction()
    else:
        value = minkowski_periodic(cf)
    report = DimensionReport(
        "eval",
        config,
        {"continued_fraction": str(cf), "value": exact_number(value)},
    )
    text = "\n".join(
        [
            f"input: {cf}",
            f"value: {fraction_str(value)} = {decimal_str(value)}",
        ]
    )
    csv = _csv(
        ["continued_fraction", "value_exact", "value_decimal"],
        [[f'"{cf}"', fraction_str(value), decimal_str(value)]],
    )
    return report, text, csv


def _cmd_empirical(args) -> tuple[DimensionReport, str, str]:
    K = parse_digit_spec(args.digits)
    depths = parse_depth_spec(args.depths)
    side = Side(args.side)
    tol = _solver_tol(args.tol, default=1e-10)
    budget = resolve_budget(args.budget)
    series = estimate_series(K, depths, side, tol, budget)
    diffs = successive_differences(series)
    config = {
        "digits": list(K.digits),
        "depths": depths,
        "side": side.value,
        "tol": tol,
        "budget": budget,
    }
    report = DimensionReport(
        "empirical",
        config,
        {"series": [estimate_to_dict(e) for e in series], "differences": diffs},
    )
    lines = [f"digit set: {K}, side: {side.value}"]
    for e in series:
        lines.append(
            f"depth {e.depth}: s_hat = {e.s_hat!r} "
            f"({e.cylinder_count} cylinders, {e.wall_time_ms:.1f} ms)"
        )
    if diffs:
        lines.append("successive differences: " + ", ".join(repr(d) for d in diffs))
    return report, "\n".join(lines), estimates_to_csv(series)


def _cmd_construct(args) -> tuple[DimensionReport, str, str]:
    K = parse_digit_spec(args.digits)
    if args.depth < 0:
        raise ValueError("depth must be nonnegative")
    budget = resolve_budget(args.budget)
    cylinders = list(enumerate_image_cylinders(K, args.depth, budget))
    config = {"digits": list(K.digits), "depth": args.depth, "budget": budget}
    rows = []
    for cyl in cylinders:
        rows.append(
            {
                "word": list(cyl.word),
                "inf": exact_number(cyl.enclosure.lo),
                "sup": exact_number(cyl.enclosure.hi),
                "diameter": exact_number(cyl.diameter),
            }
        )
    report = DimensionReport("construct", config, {"cylinders": rows})
    lines = [f"digit set: {K}, depth: {args.depth}"]
    csv_rows = []
    for cyl in cylinders:
        word = "-".join(map(str, cyl.word))
        lines.append(
            f"word [{word}]: inf {fraction_str(cyl.enclosure.lo)}, "
            f"sup {fraction_str(cyl.enclosure.hi)}, "
            f"diameter {fraction_str(cyl.diameter)}"
        )
        csv_rows.append(
            [
                word,
                fraction_str(cyl.enclosure.lo),
                fraction_str(cyl.enclosure.hi),
                decimal_str(cyl.enclosure.lo),
                decimal_str(cyl.enclosure.hi),
                fraction_str(cyl.diameter),
                decimal_str(cyl.diameter),
            ]
        )
    csv = _csv(
        ["word", "inf_exact", "sup_exact", "inf_decimal", "sup_decimal",
         "diameter_exact", "diameter_decimal"],
        csv_rows,
    )
    return report, "\n".join(lines), csv


_HANDLERS: dict[str, Callable] = {
    "moran": _cmd_moran,
    "bounds": _cmd_bounds,
    "verdict": _cmd_verdict,
    "eval": _cmd_eval,
    "empirical": _cmd_empirical,
    "construct": _cmd_construct,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="solver tolerance")
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument("--out", default=None, help="write output to this path")
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="enumeration budget (default: MINKDIM_BUDGET or "
        f"{DEFAULT_BUDGET})",
    )

    parser = argparse.ArgumentParser(
        prog="minkdim",
        description="Hausdorff dimensions of digit-restricted continued-fraction "
        "sets and of their Minkowski images.",
    )
    parser.add_argument(
        "--version", action="version", version=f"minkdim {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moran", parents=[common], help="Moran root for a digit set")
    p.add_argument("--digits", required=True, help="digit set, e.g. 1..9 or 1,3,5")

    p = sub.add_parser("bounds", parents=[common], help="dimension bounds for n > 8")
    p.add_argument("--n", type=int, required=True, help="digit ceiling (> 8)")

    p = sub.add_parser("verdict", parents=[common], help="preservation verdict")
    p.add_argument("--n", type=int, required=True, help="digit ceiling (> 8)")

    p = sub.add_parser("eval", parents=[common], help="evaluate the Minkowski function")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--rational", help="rational argument p/q in (0, 1]")
    group.add_argument("--cf", help="continued fraction, e.g. '0;2,3' or '0;1,(1,2)'")

    p = sub.add_parser("empirical", parents=[common], help="covering-sum estimates")
    p.add_argument("--digits", required=True, help="digit set")
    p.add_argument("--depths", required=True, help="depths, e.g. 1..6 or 3")
    p.add_argument(
        "--side",
        choices=(Side.DOMAIN.value, Side.IMAGE.value),
        default=Side.DOMAIN.value,
        help="which cylinder family (default: domain)",
    )

    p = sub.add_parser("construct", parents=[common], help="image cylinder table")
    p.add_argument("--digits", required=True, help="digit set")
    p.add_argument("--depth", type=int, required=True, help="cylinder depth (>= 0)")

    return parser


def _emit(args, report: DimensionReport, text: str, csv: str) -> None:
    if args.format == "json":
        payload = report.to_json() + "\n"
    elif args.format == "csv":
        payload = csv
    else:
        payload = text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        report, text, csv = _HANDLERS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ToleranceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, report, text, csv)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

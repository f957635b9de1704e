"""Command-line interface.

Subcommands cover single-shot divergence and bound evaluations, batch
CSV processing of experiment records, sample-size planning (single pair
or a figure-ready sweep), and the numerical verification runs.

Exit codes: 0 on success, 1 when a verification fails its tolerance,
2 on usage or input errors. All reals print with 12 significant digits
and a ``.`` decimal separator regardless of locale; infinities print as
``inf``. Output CSVs use comma separators and ``\\n`` line endings with
no quoting, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

from .bounds import (
    js_welch_lower_bound_rhs,
    fixed_null_factor,
    maxmin_bayes_factor_bound,
    sample_bounds,
    welch_factor_bound,
    welch_t_binomial,
)
from .divergences import (
    binary_entropy,
    cross_entropy,
    js_divergence,
    kl_divergence,
    require_proportion,
)
from .model import ExperimentData
from .oracle import (
    ConvergenceError,
    GridSpec,
    grid_maxmin,
    map_js_welch_region,
    map_kl_quadratic_region,
    verify_convexity,
)

__all__ = ["main"]

BATCH_INPUT_HEADER = "experiment_id,r,k1,k2"
BATCH_OUTPUT_HEADER = "experiment_id,theta1,theta2,js,t_welch,maxmin_bound,welch_bound"
FIGURE_HEADER = "p,p_uplifted,bayesian_r,frequentist_r"
REGION_HEADER = "t1,t2,lhs,rhs,holds"
TOLERANCE_ENV_VAR = "ABFACTOR_VERIFY_TOLERANCE"
DEFAULT_VERIFY_TOLERANCE = 1e-6


def _fmt(value: float) -> str:
    """Format a real with 12 significant digits; infinities as inf."""
    return f"{value:.12g}"


def _proportion_arg(text: str) -> float:
    try:
        return require_proportion(float(text), "rate")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive_real_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number, got {text!r}") from None
    if not value > 0.0 or math.isinf(value):
        raise argparse.ArgumentTypeError(f"expected a positive finite real, got {text!r}")
    return value


def _write_text_file(path: str, content: str) -> None:
    """Write a fully built file in one call; nothing partial ever lands."""
    Path(path).write_text(content, encoding="utf-8", newline="")


def _cmd_divergence(args: argparse.Namespace) -> int:
    if args.measure == "entropy":
        value = binary_entropy(args.p1)
    else:
        if args.p2 is None:
            raise ValueError(f"measure {args.measure!r} requires p2")
        if args.measure == "cross":
            value = cross_entropy(args.p1, args.p2)
        elif args.measure == "kl":
            value = kl_divergence(args.p1, args.p2)
        else:
            value = js_divergence(args.p1, args.p2)
    print(_fmt(value))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    data = ExperimentData(args.r, args.k1, args.k2)
    t1 = data.theta1
    t2 = data.theta2
    lines = [
        f"theta1={_fmt(t1)}",
        f"theta2={_fmt(t2)}",
        f"js={_fmt(js_divergence(t1, t2))}",
        f"t_welch={_fmt(welch_t_binomial(data.r, t1, t2))}",
        f"maxmin_bound={_fmt(maxmin_bayes_factor_bound(data.r, t1, t2))}",
        f"welch_bound={_fmt(welch_factor_bound(data.r, t1, t2))}",
    ]
    if args.x0 is not None:
        lines.append(
            f"fixed_null_factor={_fmt(fixed_null_factor(data.r, t1, t2, args.x0))}"
        )
    print("\n".join(lines))
    return 0


def _batch_row(lineno: int, line: str, seen_ids: set[str]) -> str:
    parts = line.split(",")
    if len(parts) != 4:
        raise ValueError(
            f"line {lineno}: expected 4 comma-separated fields, got {len(parts)}"
        )
    experiment_id, r_text, k1_text, k2_text = parts
    if not experiment_id:
        raise ValueError(f"line {lineno}: experiment_id must not be empty")
    if experiment_id in seen_ids:
        raise ValueError(f"line {lineno}: duplicate experiment_id {experiment_id!r}")
    seen_ids.add(experiment_id)
    try:
        data = ExperimentData(int(r_text), int(k1_text), int(k2_text))
        t1 = data.theta1
        t2 = data.theta2
        fields = (
            js_divergence(t1, t2),
            welch_t_binomial(data.r, t1, t2),
            maxmin_bayes_factor_bound(data.r, t1, t2),
            welch_factor_bound(data.r, t1, t2),
        )
    except (TypeError, ValueError) as exc:
        raise ValueError(f"line {lineno}: {exc}") from exc
    formatted = ",".join(_fmt(value) for value in (t1, t2) + fields)
    return f"{experiment_id},{formatted}"


def _cmd_batch(args: argparse.Namespace) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    lines = text.splitlines()
    while lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != BATCH_INPUT_HEADER:
        raise ValueError(f"line 1: expected header {BATCH_INPUT_HEADER!r}")
    seen_ids: set[str] = set()
    out_rows = [
        _batch_row(lineno, line, seen_ids)
        for lineno, line in enumerate(lines[1:], start=2)
    ]
    content = "\n".join([BATCH_OUTPUT_HEADER] + out_rows) + "\n"
    _write_text_file(args.output, content)
    return 0


def _uplifted(p: float, delta: float) -> float:
    p2 = p * (1.0 + delta)
    if not 0.0 < p2 < 1.0:
        raise ValueError(
            f"uplifted rate p*(1+delta) = {p2!r} is outside (0, 1) for p={p!r}"
        )
    return p2


def _cmd_samplesize(args: argparse.Namespace) -> int:
    if args.delta == 0.0:
        raise ValueError("delta must be nonzero: equal rates admit no finite answer")
    p2 = _uplifted(args.p, args.delta)
    result = sample_bounds(args.p, p2, args.multiplier)
    print(f"p={_fmt(args.p)}")
    print(f"p_uplifted={_fmt(p2)}")
    print(f"multiplier={_fmt(args.multiplier)}")
    print(f"bayesian_r={math.ceil(result.bayesian_r)}")
    print(f"frequentist_r={math.ceil(result.frequentist_r)}")
    print(f"bayesian_r_raw={_fmt(result.bayesian_r)}")
    print(f"frequentist_r_raw={_fmt(result.frequentist_r)}")
    return 0


def _cmd_figure(args: argparse.Namespace) -> int:
    if args.delta == 0.0:
        raise ValueError("delta must be nonzero: equal rates admit no finite answer")
    if args.steps == 1:
        sweep = [args.p_start]
    else:
        last = args.steps - 1
        sweep = [
            args.p_start * (1.0 - i / last) + args.p_end * (i / last)
            for i in range(args.steps)
        ]
    rows = []
    for p in sweep:
        p2 = _uplifted(p, args.delta)
        result = sample_bounds(p, p2, args.multiplier)
        rows.append(
            ",".join(
                _fmt(value)
                for value in (p, p2, result.bayesian_r, result.frequentist_r)
            )
        )
    content = "\n".join([FIGURE_HEADER] + rows) + "\n"
    _write_text_file(args.output, content)
    return 0


def _verify_tolerance(args: argparse.Namespace) -> float:
    if args.tolerance is not None:
        return args.tolerance
    raw = os.environ.get(TOLERANCE_ENV_VAR)
    if raw is None:
        return DEFAULT_VERIFY_TOLERANCE
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"invalid {TOLERANCE_ENV_VAR} value: {raw!r}") from None
    if not value > 0.0:
        raise ValueError(f"{TOLERANCE_ENV_VAR} must be positive, got {raw!r}")
    return value


def _cmd_verify_theorem(args: argparse.Namespace) -> int:
    tolerance = _verify_tolerance(args)
    data = ExperimentData(args.r, args.k1, args.k2)
    grid = GridSpec(
        resolution=args.resolution,
        lower=0.0,
        upper=1.0,
        refine_tolerance=min(tolerance, 1e-9),
    )
    try:
        result = grid_maxmin(data, grid, max_iterations=args.max_iterations)
    except ConvergenceError as exc:
        result = exc.result
    passed = result.abs_log_gap <= tolerance
    print(f"best_null_rate={_fmt(result.best_null.p)}")
    print(f"best_alt_p={_fmt(result.best_alt.p)}")
    print(f"best_alt_q={_fmt(result.best_alt.q)}")
    print(f"factor={_fmt(result.factor)}")
    print(f"closed_form={_fmt(result.closed_form)}")
    print(f"abs_log_gap={_fmt(result.abs_log_gap)}")
    print(f"tolerance={_fmt(tolerance)}")
    print(f"result={'pass' if passed else 'fail'}")
    return 0 if passed else 1


def _cmd_verify_region(args: argparse.Namespace) -> int:
    grid = GridSpec.interior(args.resolution)
    if args.inequality == "region-kl":
        report = map_kl_quadratic_region(grid)
    else:
        report = map_js_welch_region(grid)
    rows = [
        ",".join(
            (
                _fmt(row.t1),
                _fmt(row.t2),
                _fmt(row.lhs),
                _fmt(row.rhs),
                "true" if row.holds else "false",
            )
        )
        for row in report.rows
    ]
    content = "\n".join([REGION_HEADER] + rows) + "\n"
    _write_text_file(args.output, content)
    print(f"total={report.total} violations={report.violations}")
    return 0


def _cmd_verify_convexity(args: argparse.Namespace) -> int:
    passed = verify_convexity(args.samples, args.seed)
    print(f"samples={args.samples}")
    print(f"seed={args.seed}")
    print(f"result={'pass' if passed else 'fail'}")
    return 0 if passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abfactor",
        description="Bayes factor bounds and sample sizes for binomial A/B tests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    divergence = sub.add_parser(
        "divergence", help="evaluate an information measure in nats"
    )
    divergence.add_argument(
        "measure", choices=("entropy", "cross", "kl", "js"), help="which measure"
    )
    divergence.add_argument("p1", type=_proportion_arg, help="first rate in [0, 1]")
    divergence.add_argument(
        "p2",
        type=_proportion_arg,
        nargs="?",
        default=None,
        help="second rate; ignored by entropy",
    )
    divergence.set_defaults(func=_cmd_divergence)

    bound = sub.add_parser(
        "bound", help="closed-form factor bounds for one experiment"
    )
    bound.add_argument("r", type=_positive_int_arg, help="trials per group")
    bound.add_argument("k1", type=_nonnegative_int_arg, help="successes in group 1")
    bound.add_argument("k2", type=_nonnegative_int_arg, help="successes in group 2")
    bound.add_argument(
        "--x0",
        type=_proportion_arg,
        default=None,
        help="also report the factor for the fixed null rate x0",
    )
    bound.set_defaults(func=_cmd_bound)

    batch = sub.add_parser(
        "batch", help="process a CSV of experiment records"
    )
    batch.add_argument("input", help=f"input CSV with header {BATCH_INPUT_HEADER!r}")
    batch.add_argument("output", help="output CSV path")
    batch.set_defaults(func=_cmd_batch)

    samplesize = sub.add_parser(
        "samplesize", help="trials per group needed to resolve a relative uplift"
    )
    samplesize.add_argument("p", type=_proportion_arg, help="baseline rate")
    samplesize.add_argument("delta", type=float, help="relative uplift, p2 = p*(1+delta)")
    samplesize.add_argument(
        "--multiplier",
        type=_positive_real_arg,
        default=2.0,
        help="safety factor applied to both rules (default 2)",
    )
    samplesize.set_defaults(func=_cmd_samplesize)

    figure = sub.add_parser(
        "figure", help="emit the sample-size sweep as plot-ready CSV"
    )
    figure.add_argument("output", help="output CSV path")
    figure.add_argument(
        "--p-start", type=_proportion_arg, default=0.01, help="sweep start (default 0.01)"
    )
    figure.add_argument(
        "--p-end", type=_proportion_arg, default=0.5, help="sweep end (default 0.5)"
    )
    figure.add_argument(
        "--steps",
        type=_positive_int_arg,
        default=50,
        help="rows, evenly spaced inclusive of both endpoints (default 50)",
    )
    figure.add_argument(
        "--delta", type=float, default=0.1, help="relative uplift (default 0.1)"
    )
    figure.add_argument(
        "--multiplier",
        type=_positive_real_arg,
        default=2.0,
        help="safety factor (default 2)",
    )
    figure.set_defaults(func=_cmd_figure)

    verify = sub.add_parser("verify", help="run a numerical verification")
    verify_sub = verify.add_subparsers(dest="check", required=True)

    theorem = verify_sub.add_parser(
        "theorem",
        help="grid max-min search against the closed form exp(-2 r JS)",
    )
    theorem.add_argument("r", type=_positive_int_arg, help="trials per group")
    theorem.add_argument("k1", type=_nonnegative_int_arg, help="successes in group 1")
    theorem.add_argument("k2", type=_nonnegative_int_arg, help="successes in group 2")
    theorem.add_argument(
        "--resolution",
        type=_positive_int_arg,
        default=999,
        help="null-rate grid points over [0, 1] (default 999)",
    )
    theorem.add_argument(
        "--tolerance",
        type=_positive_real_arg,
        default=None,
        help=f"log-scale acceptance gap (default 1e-6; overrides {TOLERANCE_ENV_VAR})",
    )
    theorem.add_argument(
        "--max-iterations",
        type=_nonnegative_int_arg,
        default=200,
        help="golden-section refinement budget (default 200)",
    )
    theorem.set_defaults(func=_cmd_verify_theorem)

    for name, description in (
        ("region-kl", "tabulate KL against its claimed quadratic lower bound"),
        ("region-js", "tabulate JS against the Welch comparison value"),
    ):
        region = verify_sub.add_parser(name, help=description)
        region.add_argument("output", help="output CSV path")
        region.add_argument(
            "--resolution",
            type=_positive_int_arg,
            default=99,
            help="grid points per axis, interior to (0, 1) (default 99)",
        )
        region.set_defaults(func=_cmd_verify_region, inequality=name)

    convexity = verify_sub.add_parser(
        "convexity", help="randomized convexity check of the cross-entropy"
    )
    convexity.add_argument(
        "--samples", type=_positive_int_arg, default=10000, help="draws (default 10000)"
    )
    convexity.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    convexity.set_defaults(func=_cmd_verify_convexity)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

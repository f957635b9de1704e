"""Brute-force numerical verification of the closed-form bounds.

The closed forms in :mod:`abfactor.bounds` make three claims that can be
checked by blunt computation instead of trusted:

* the best equal-rate null against the least favorable alternative
  yields exactly exp(-2 r JS(theta1, theta2)) (grid search plus local
  refinement over the null rate);
* no mixture prior beats the unit mass at the empirical rates
  (randomized sampling; the likelihood is linear in the prior, so unit
  masses are vertices of the feasible set);
* the inequality chain behind the Welch comparison holds, or fails, on
  concrete parameter regions (exhaustive tabulation).

Everything here is deterministic for fixed inputs and seed. Grid scans
run row-major; if an implementation ever partitions the work, it must
merge results back in that canonical order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .divergences import (
    cross_entropy,
    js_divergence,
    kl_divergence,
    kl_quadratic_rhs,
    require_proportion,
)
from .bounds import js_welch_lower_bound_rhs
from .model import (
    DiscretePrior,
    ExperimentData,
    ParameterPoint,
    likelihood_given_prior,
    log_likelihood_point,
    most_favorable_alternative,
)

__all__ = [
    "REGION_TOLERANCE",
    "GridSpec",
    "MaxMinResult",
    "RegionRow",
    "RegionReport",
    "ConvergenceError",
    "grid_maxmin",
    "mixture_no_improvement_check",
    "map_kl_quadratic_region",
    "map_js_welch_region",
    "verify_convexity",
]

REGION_TOLERANCE = 1e-12
"""Absolute slack, in nats, granted to an inequality before it counts as
violated. Below plausible accumulated rounding for these expressions,
above representation noise."""

_GOLDEN_RATIO_CONJUGATE = (math.sqrt(5.0) - 1.0) / 2.0
_REFINE_X_ATOL = 1e-10


@dataclass(frozen=True, slots=True)
class GridSpec:
    """Axis layout and convergence threshold for the numerical searches.

    ``resolution`` is the number of grid points per axis, spaced evenly
    from ``lower`` to ``upper`` inclusive. ``refine_tolerance`` is the
    log-scale agreement demanded of the refined max-min search.
    """

    resolution: int
    lower: float
    upper: float
    refine_tolerance: float = 1e-9

    def __post_init__(self) -> None:
        if not isinstance(self.resolution, int):
            raise TypeError(f"resolution must be an integer, got {self.resolution!r}")
        if self.resolution < 2:
            raise ValueError(f"resolution must be at least 2, got {self.resolution}")
        require_proportion(self.lower, "lower")
        require_proportion(self.upper, "upper")
        if not self.lower < self.upper:
            raise ValueError(
                f"lower must be strictly below upper, got [{self.lower!r}, {self.upper!r}]"
            )
        if not self.refine_tolerance > 0.0:
            raise ValueError(
                f"refine_tolerance must be positive, got {self.refine_tolerance!r}"
            )

    @classmethod
    def interior(cls, resolution: int, refine_tolerance: float = 1e-9) -> "GridSpec":
        """Grid over [1/(n+1), n/(n+1)]: evenly spaced and clear of 0 and 1.

        This is the default layout for region maps, where the endpoint
        rates would make the tabulated expressions singular.
        """
        n = resolution
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"resolution must be an integer >= 2, got {n!r}")
        return cls(n, 1.0 / (n + 1), n / (n + 1.0), refine_tolerance)

    def axis(self) -> list[float]:
        """The grid points, endpoint-exact: axis[0] == lower, axis[-1] == upper."""
        last = self.resolution - 1
        points = []
        for i in range(self.resolution):
            t = i / last
            points.append(self.lower * (1.0 - t) + self.upper * t)
        return points


@dataclass(frozen=True, slots=True)
class MaxMinResult:
    """Outcome of the numerical max-min search next to the closed form.

    ``factor`` is the numerically best achievable Bayes factor (null side
    searched, alternative side the analytic unit mass); ``closed_form``
    is exp(-2 r JS); ``abs_log_gap`` is their disagreement in log scale.
    """

    best_null: ParameterPoint
    best_alt: ParameterPoint
    factor: float
    closed_form: float
    abs_log_gap: float

    def __post_init__(self) -> None:
        if self.best_null.p != self.best_null.q:
            raise ValueError(f"best_null must have equal rates, got {self.best_null!r}")


@dataclass(frozen=True, slots=True)
class RegionRow:
    """One tabulated cell: the two rates, both sides, and the verdict."""

    t1: float
    t2: float
    lhs: float
    rhs: float
    holds: bool

    def __post_init__(self) -> None:
        if self.holds != (self.lhs >= self.rhs - REGION_TOLERANCE):
            raise ValueError(
                f"holds flag is inconsistent with lhs={self.lhs!r}, rhs={self.rhs!r}"
            )


@dataclass(frozen=True, slots=True)
class RegionReport:
    """Exhaustive tabulation of an inequality over a two-axis grid."""

    rows: tuple[RegionRow, ...]
    total: int
    violations: int

    def __post_init__(self) -> None:
        if self.total != len(self.rows):
            raise ValueError("total must equal the number of rows")
        observed = sum(1 for row in self.rows if not row.holds)
        if self.violations != observed:
            raise ValueError(
                f"violations count {self.violations} disagrees with rows ({observed})"
            )


class ConvergenceError(RuntimeError):
    """Refinement ran out of budget before meeting the log-scale tolerance.

    The partial outcome is attached as ``result`` so callers can still
    report what the search found.
    """

    def __init__(self, message: str, result: MaxMinResult):
        super().__init__(message)
        self.result = result


def grid_maxmin(
    data: ExperimentData,
    grid: GridSpec,
    max_iterations: int = 200,
) -> MaxMinResult:
    """Search for the best equal-rate null and compare with exp(-2 r JS).

    The alternative side is not searched: by linearity the least
    favorable alternative is the unit mass at the empirical rates, so
    the search reduces to maximizing x0 -> -r (KL(t1,x0) + KL(t2,x0))
    over the null rate. A coarse scan over ``grid.axis()`` brackets the
    peak and golden-section steps refine it; the objective is concave
    (cross-entropy is convex in its second argument), so unimodal
    refinement is sound. The best evaluation ever seen is kept, which
    preserves exact maxima that happen to sit on grid points.

    ``max_iterations`` bounds the number of refinement steps (0 disables
    refinement). Raises :class:`ConvergenceError`, with the partial
    result attached, when the refined log gap still exceeds
    ``grid.refine_tolerance``.
    """
    t1 = data.theta1
    t2 = data.theta2
    midpoint = data.rate_midpoint
    if not grid.lower <= midpoint <= grid.upper:
        raise ValueError(
            f"grid [{grid.lower!r}, {grid.upper!r}] does not cover the "
            f"empirical midpoint {midpoint!r}"
        )

    r = data.r

    def objective(x0: float) -> float:
        return -(r * (kl_divergence(t1, x0) + kl_divergence(t2, x0)))

    axis = grid.axis()
    best_x = axis[0]
    best_f = -math.inf
    best_index = 0
    for index, x0 in enumerate(axis):
        value = objective(x0)
        if value > best_f:
            best_f = value
            best_x = x0
            best_index = index

    lower = axis[best_index - 1] if best_index > 0 else axis[0]
    upper = axis[best_index + 1] if best_index + 1 < len(axis) else axis[-1]

    if max_iterations > 0 and upper > lower:
        a, b = lower, upper
        span = b - a
        c = b - _GOLDEN_RATIO_CONJUGATE * span
        d = a + _GOLDEN_RATIO_CONJUGATE * span
        fc = objective(c)
        fd = objective(d)
        for x, value in ((c, fc), (d, fd)):
            if value > best_f:
                best_f, best_x = value, x
        for _ in range(max_iterations):
            if b - a <= _REFINE_X_ATOL:
                break
            if fc >= fd:
                b, d, fd = d, c, fc
                c = b - _GOLDEN_RATIO_CONJUGATE * (b - a)
                fc = objective(c)
                if fc > best_f:
                    best_f, best_x = fc, c
            else:
                a, c, fc = c, d, fd
                d = a + _GOLDEN_RATIO_CONJUGATE * (b - a)
                fd = objective(d)
                if fd > best_f:
                    best_f, best_x = fd, d

    closed_log = -(2.0 * r * js_divergence(t1, t2))
    gap = abs(best_f - closed_log)
    result = MaxMinResult(
        best_null=ParameterPoint(best_x, best_x),
        best_alt=most_favorable_alternative(data),
        factor=math.exp(best_f),
        closed_form=math.exp(closed_log),
        abs_log_gap=gap,
    )
    if gap > grid.refine_tolerance:
        raise ConvergenceError(
            f"max-min refinement did not reach tolerance "
            f"{grid.refine_tolerance:g}: log gap {gap:.6g} "
            f"(resolution {grid.resolution}, {max_iterations} refinement steps)",
            result,
        )
    return result


def mixture_no_improvement_check(
    data: ExperimentData,
    grid: GridSpec,
    trials: int,
    seed: int = 0,
) -> bool:
    """Randomized probe that no mixture prior beats the unit-mass optimum.

    Samples ``trials`` priors with random finite supports (1 to 5 points,
    drawn uniformly from the grid's rectangle) and random normalized
    weights, and checks each against the point likelihood at the
    empirical rates, with 1e-12 log-scale slack. Deterministic for a
    fixed seed.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    rng = np.random.default_rng(seed)
    ceiling = log_likelihood_point(data, most_favorable_alternative(data))
    for _ in range(trials):
        size = int(rng.integers(1, 6))
        raw_points = rng.uniform(grid.lower, grid.upper, size=(size, 2))
        raw_weights = rng.uniform(0.0, 1.0, size=size)
        weights = raw_weights / raw_weights.sum()
        prior = DiscretePrior(
            tuple(ParameterPoint(float(p), float(q)) for p, q in raw_points),
            tuple(float(w) for w in weights),
        )
        if likelihood_given_prior(data, prior) > ceiling + 1e-12:
            return False
    return True


def _require_interior_grid(grid: GridSpec) -> None:
    if grid.lower <= 0.0 or grid.upper >= 1.0:
        raise ValueError(
            f"region grid must be interior to (0, 1), got "
            f"[{grid.lower!r}, {grid.upper!r}]"
        )


def _tabulate(grid: GridSpec, lhs_rhs) -> RegionReport:
    axis = grid.axis()
    rows = []
    violations = 0
    for t1 in axis:
        for t2 in axis:
            lhs, rhs = lhs_rhs(t1, t2)
            holds = lhs >= rhs - REGION_TOLERANCE
            if not holds:
                violations += 1
            rows.append(RegionRow(t1, t2, lhs, rhs, holds))
    return RegionReport(rows=tuple(rows), total=len(rows), violations=violations)


def map_kl_quadratic_region(grid: GridSpec) -> RegionReport:
    """Tabulate KL(t1, t2) against the quadratic value (t1-t2)^2/(2 t1 (1-t1)).

    The quadratic expression is a claimed lower bound on the divergence.
    It fails for well-separated rates, for example near (0.1, 0.9), and
    the report records such rows as violations instead of suppressing
    them. The grid must be interior to (0, 1): the right-hand side
    divides by t1 (1 - t1).
    """
    _require_interior_grid(grid)
    return _tabulate(
        grid,
        lambda t1, t2: (kl_divergence(t1, t2), kl_quadratic_rhs(t1, t2)),
    )


def map_js_welch_region(grid: GridSpec) -> RegionReport:
    """Tabulate JS(t1, t2) against t_Welch^2 / (4r), which is r-free.

    Rows with t1 == t2 hold trivially (both sides are exactly zero).
    Near-boundary pairs such as (0.1, 0.2) sit within a few parts in a
    thousand of equality and are recorded at full precision either way.
    Output is symmetric under swapping (t1, t2): both sides are.
    """
    _require_interior_grid(grid)
    return _tabulate(
        grid,
        lambda t1, t2: (js_divergence(t1, t2), js_welch_lower_bound_rhs(1, t1, t2)),
    )


def verify_convexity(samples: int, seed: int = 0) -> bool:
    """Randomized check that x -> cross_entropy(p, x) is convex.

    For each sample, draws p, x1, x2 and a mixing weight and tests the
    convexity inequality with 1e-10 slack, then draws an interior x and
    tests that the central second difference with step 1e-4 is at least
    -1e-6. Returns False at the first failure. Deterministic for a fixed
    seed.
    """
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    rng = np.random.default_rng(seed)
    step = 1e-4
    for _ in range(samples):
        p = float(rng.uniform())
        x1 = float(rng.uniform())
        x2 = float(rng.uniform())
        lam = float(rng.uniform())
        mixed = lam * x1 + (1.0 - lam) * x2
        lhs = cross_entropy(p, mixed)
        rhs = lam * cross_entropy(p, x1) + (1.0 - lam) * cross_entropy(p, x2)
        if not lhs <= rhs + 1e-10:
            return False
        x = float(rng.uniform(step, 1.0 - step))
        second_difference = (
            cross_entropy(p, x + step)
            - 2.0 * cross_entropy(p, x)
            + cross_entropy(p, x - step)
        ) / (step * step)
        if not second_difference >= -1e-6:
            return False
    return True

"""Closed-form Bayes factor bounds, the Welch statistic, and sample sizes.

The headline quantity is the max-min Bayes factor for observed rates
(t1, t2) out of r trials per group: the best factor any equal-rate null
can achieve against the least favorable alternative is

    exp(-2 r JS(t1, t2)).

Fixing the null rate at x0 instead gives exp(-r KL(t1,x0) - r KL(t2,x0)),
which is largest at the midpoint x0 = (t1 + t2) / 2 where it recovers the
JS form. The Welch statistic for two proportions links the same quantity
to frequentist planning: exp(-t^2 / 2) approximates the factor, and the
identity JS >= t^2 / (4r) is probed empirically by the oracle module
rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .divergences import (
    Proportion,
    js_divergence,
    kl_divergence,
    require_proportion,
)

__all__ = [
    "SampleBoundResult",
    "maxmin_bayes_factor_bound",
    "fixed_null_factor",
    "welch_t_general",
    "welch_t_binomial",
    "welch_factor_bound",
    "js_welch_lower_bound_rhs",
    "sample_bound_bayesian",
    "sample_bound_frequentist",
    "sample_bounds",
]


def _require_trials(value: int, name: str = "r") -> int:
    if not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise ValueError(f"{name} must be a positive trial count, got {value}")
    return value


def _require_positive(value: float, name: str) -> float:
    if not value > 0.0 or math.isinf(value):
        raise ValueError(f"{name} must be a positive finite real, got {value!r}")
    return value


def maxmin_bayes_factor_bound(r: int, t1: Proportion, t2: Proportion) -> float:
    """Best-case Bayes factor exp(-2 r JS(t1, t2)) for equal-rate nulls.

    Lies in (0, 1] and equals 1 exactly when t1 == t2.
    """
    _require_trials(r)
    return math.exp(-(2.0 * r * js_divergence(t1, t2)))


def fixed_null_factor(
    r: int, t1: Proportion, t2: Proportion, x0: Proportion
) -> float:
    """Bayes factor exp(-r KL(t1, x0) - r KL(t2, x0)) for the null (x0, x0).

    Never exceeds ``maxmin_bayes_factor_bound(r, t1, t2)``; equality holds
    at the midpoint x0 = (t1 + t2) / 2. Returns 0.0 when the null is
    incompatible with an observed rate (infinite divergence).
    """
    _require_trials(r)
    total = kl_divergence(t1, x0) + kl_divergence(t2, x0)
    if math.isinf(total):
        return 0.0
    return math.exp(-(r * total))


def welch_t_general(
    mu1: float,
    mu2: float,
    var1: float,
    var2: float,
    r1: int,
    r2: int,
) -> float:
    """Welch's two-sample statistic (mu1 - mu2) / sqrt(s1^2/r1 + s2^2/r2).

    Signed and antisymmetric under swapping the groups. Rejects zero
    combined variance: the statistic is undefined for degenerate data.
    """
    _require_trials(r1, "r1")
    _require_trials(r2, "r2")
    for name, value in (("var1", var1), ("var2", var2)):
        if not value >= 0.0:
            raise ValueError(f"{name} must be nonnegative, got {value!r}")
    squared_se = var1 / r1 + var2 / r2
    if squared_se == 0.0:
        raise ValueError("combined variance is zero: degenerate data")
    return (mu1 - mu2) / math.sqrt(squared_se)


def welch_t_binomial(r: int, t1: Proportion, t2: Proportion) -> float:
    """Welch statistic for two observed proportions with r trials each.

    Specializes the general statistic with plug-in variances t(1-t):

        sqrt(r) * (t1 - t2) / sqrt(t1(1-t1) + t2(1-t2))

    The magnitude grows as sqrt(r) for fixed rates, and quadrupling r
    doubles the value bitwise. Rejects rate pairs where both groups are
    degenerate (zero combined variance).
    """
    _require_trials(r)
    require_proportion(t1, "t1")
    require_proportion(t2, "t2")
    variance_sum = t1 * (1.0 - t1) + t2 * (1.0 - t2)
    if variance_sum == 0.0:
        raise ValueError(
            f"both rates are degenerate (t1={t1!r}, t2={t2!r}): "
            "the Welch statistic is undefined"
        )
    return math.sqrt(r) * (t1 - t2) / math.sqrt(variance_sum)


def welch_factor_bound(r: int, t1: Proportion, t2: Proportion) -> float:
    """Gaussian-style factor approximation exp(-t^2 / 2) from the Welch t."""
    t = welch_t_binomial(r, t1, t2)
    return math.exp(-0.5 * t * t)


def js_welch_lower_bound_rhs(r: int, t1: Proportion, t2: Proportion) -> float:
    """The value t_Welch^2 / (4r), which simplifies to be r-free.

    Writing out the statistic, r cancels:

        (t1 - t2)^2 / (4 (t1(1-t1) + t2(1-t2))).

    The trial count is accepted for signature symmetry with the other
    bound operations and validated, but does not enter the arithmetic,
    so r-independence is exact by construction. Whether JS(t1, t2)
    dominates this value everywhere is a question for the region mapper;
    it does not hold on all of the unit square.
    """
    _require_trials(r)
    require_proportion(t1, "t1")
    require_proportion(t2, "t2")
    variance_sum = t1 * (1.0 - t1) + t2 * (1.0 - t2)
    if variance_sum == 0.0:
        raise ValueError(
            f"both rates are degenerate (t1={t1!r}, t2={t2!r}): "
            "the comparison value is undefined"
        )
    diff = t1 - t2
    return diff * diff / (4.0 * variance_sum)


def sample_bound_bayesian(
    p1: Proportion, p2: Proportion, multiplier: float
) -> float:
    """Trials per group needed to separate p1 from p2 by Bayes factor decay.

    Returns multiplier / (2 JS(p1, p2)), unrounded; rounding a trial count
    up to an integer is a presentation concern. Equal rates admit no
    finite answer and are rejected.
    """
    require_proportion(p1, "p1")
    require_proportion(p2, "p2")
    _require_positive(multiplier, "multiplier")
    if p1 == p2:
        raise ValueError(f"rates are equal (p1 == p2 == {p1!r}): no finite sample size")
    return multiplier / (2.0 * js_divergence(p1, p2))


def sample_bound_frequentist(
    p1: Proportion, p2: Proportion, multiplier: float
) -> float:
    """Trials per group for the Welch rule of thumb t >> 1.

    Returns multiplier * 2 (p1(1-p1) + p2(1-p2)) / (p1 - p2)^2. Equal
    rates are rejected; a degenerate pair such as (0, 1) has zero
    variance and yields 0.
    """
    require_proportion(p1, "p1")
    require_proportion(p2, "p2")
    _require_positive(multiplier, "multiplier")
    if p1 == p2:
        raise ValueError(f"rates are equal (p1 == p2 == {p1!r}): no finite sample size")
    diff = p1 - p2
    variance_sum = p1 * (1.0 - p1) + p2 * (1.0 - p2)
    return multiplier * 2.0 * variance_sum / (diff * diff)


@dataclass(frozen=True, slots=True)
class SampleBoundResult:
    """Both sample-size requirements for one rate pair, with the multiplier."""

    bayesian_r: float
    frequentist_r: float
    multiplier: float


def sample_bounds(
    p1: Proportion, p2: Proportion, multiplier: float
) -> SampleBoundResult:
    """Evaluate both sample-size rules at once."""
    return SampleBoundResult(
        bayesian_r=sample_bound_bayesian(p1, p2, multiplier),
        frequentist_r=sample_bound_frequentist(p1, p2, multiplier),
        multiplier=multiplier,
    )

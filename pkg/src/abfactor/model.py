"""Likelihoods and exact Bayes factors for two-group binomial data.

An experiment observes k1 successes out of r trials in group 1 and k2
out of r in group 2. Hypotheses are finitely supported priors over rate
pairs (p, q); a point hypothesis is a unit mass. Likelihoods are stored
unnormalized, in log scale: the binomial coefficients are a common
constant that cancels from every exposed ratio, and log scale keeps
large r from underflowing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .divergences import cross_entropy, require_proportion

__all__ = [
    "ExperimentData",
    "ParameterPoint",
    "DiscretePrior",
    "log_likelihood_point",
    "likelihood_given_prior",
    "bayes_factor_exact",
    "most_favorable_alternative",
    "most_favorable_null",
]

_WEIGHT_SUM_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class ExperimentData:
    """Per-group trial count and success counts of one A/B experiment."""

    r: int
    k1: int
    k2: int

    def __post_init__(self) -> None:
        for name, value in (("r", self.r), ("k1", self.k1), ("k2", self.k2)):
            if not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")
        if self.r < 1:
            raise ValueError(f"r must be a positive trial count, got {self.r}")
        for name, value in (("k1", self.k1), ("k2", self.k2)):
            if not 0 <= value <= self.r:
                raise ValueError(
                    f"{name} must lie in [0, r] = [0, {self.r}], got {value}"
                )

    @property
    def theta1(self) -> float:
        """Empirical success rate k1 / r, rounded once from the exact ratio."""
        return float(Fraction(self.k1, self.r))

    @property
    def theta2(self) -> float:
        """Empirical success rate k2 / r, rounded once from the exact ratio."""
        return float(Fraction(self.k2, self.r))

    @property
    def rate_midpoint(self) -> float:
        """(theta1 + theta2) / 2 computed as the exact rational (k1+k2)/(2r)."""
        return float(Fraction(self.k1 + self.k2, 2 * self.r))


@dataclass(frozen=True, slots=True)
class ParameterPoint:
    """A rate pair (p, q): group-1 and group-2 success probabilities."""

    p: float
    q: float

    def __post_init__(self) -> None:
        require_proportion(self.p, "p")
        require_proportion(self.q, "q")


@dataclass(frozen=True, slots=True)
class DiscretePrior:
    """A finitely supported prior over rate pairs.

    Weights must be nonnegative and sum to 1 within 1e-12; support points
    must be distinct. Continuous priors are out of scope: the optima this
    package verifies are attained at unit masses, and likelihood is
    linear in the prior, so finite supports lose nothing.
    """

    support: tuple[ParameterPoint, ...]
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "support", tuple(self.support))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if len(self.support) == 0:
            raise ValueError("prior support must not be empty")
        if len(self.support) != len(self.weights):
            raise ValueError(
                f"support and weights lengths differ: "
                f"{len(self.support)} vs {len(self.weights)}"
            )
        for point in self.support:
            if not isinstance(point, ParameterPoint):
                raise TypeError(f"support entries must be ParameterPoint, got {point!r}")
        if len(set(self.support)) != len(self.support):
            raise ValueError("support points must be distinct")
        for w in self.weights:
            if not w >= 0.0:
                raise ValueError(f"weights must be nonnegative, got {w!r}")
        total = math.fsum(self.weights)
        if abs(total - 1.0) > _WEIGHT_SUM_TOLERANCE:
            raise ValueError(f"weights must sum to 1, got {total!r}")

    @classmethod
    def point_mass(cls, p: float, q: float) -> "DiscretePrior":
        """Unit mass at the rate pair (p, q)."""
        return cls((ParameterPoint(p, q),), (1.0,))

    @classmethod
    def from_points(
        cls,
        points: Sequence[tuple[float, float]],
        weights: Sequence[float],
    ) -> "DiscretePrior":
        """Build a prior from bare (p, q) tuples and matching weights."""
        return cls(tuple(ParameterPoint(p, q) for p, q in points), tuple(weights))


def log_likelihood_point(data: ExperimentData, point: ParameterPoint) -> float:
    """Log of the unnormalized likelihood of ``data`` at one rate pair.

    Equals -r * (H(theta1, p) + H(theta2, q)) with H the binary
    cross-entropy: p^k1 (1-p)^(r-k1) = exp(-r H(theta1, p)) and likewise
    for the second group. Returns -inf when the point gives probability
    zero to an observed outcome. For fixed data the value is maximized at
    the empirical rates (theta1, theta2).
    """
    ce1 = cross_entropy(data.theta1, point.p)
    ce2 = cross_entropy(data.theta2, point.q)
    return -(data.r * (ce1 + ce2))


def likelihood_given_prior(data: ExperimentData, prior: DiscretePrior) -> float:
    """Log of the prior-weighted likelihood sum_j w_j Pr[data | point_j].

    Accumulated with log-sum-exp so that large r cannot underflow: the
    result is max_j L_j + ln(sum_j w_j exp(L_j - max_j L_j)). A unit-mass
    prior reproduces ``log_likelihood_point`` bitwise. Returns -inf when
    every supported point is incompatible with the data.
    """
    terms = []
    peak = -math.inf
    for point, weight in zip(prior.support, prior.weights):
        if weight == 0.0:
            continue
        value = log_likelihood_point(data, point)
        terms.append((weight, value))
        if value > peak:
            peak = value
    if peak == -math.inf:
        return -math.inf
    acc = 0.0
    for weight, value in terms:
        acc += weight * math.exp(value - peak)
    return peak + math.log(acc)


def bayes_factor_exact(
    data: ExperimentData,
    null_prior: DiscretePrior,
    alt_prior: DiscretePrior,
) -> float:
    """Bayes factor Pr[data | null] / Pr[data | alternative].

    Both likelihoods are unnormalized by the same constant, which cancels.
    Returns 0.0 when the null is incompatible with the data, and rejects
    an alternative with zero likelihood (the ratio would divide by zero).
    """
    log_alt = likelihood_given_prior(data, alt_prior)
    if log_alt == -math.inf:
        raise ValueError(
            f"alternative prior assigns zero likelihood to the data: {alt_prior!r}"
        )
    log_null = likelihood_given_prior(data, null_prior)
    if log_null == -math.inf:
        return 0.0
    try:
        return math.exp(log_null - log_alt)
    except OverflowError:
        return math.inf


def most_favorable_alternative(data: ExperimentData) -> ParameterPoint:
    """The rate pair maximizing the likelihood: the empirical rates.

    Because the likelihood is linear in the prior, the unit mass at this
    point also maximizes ``likelihood_given_prior`` over all priors.
    """
    return ParameterPoint(data.theta1, data.theta2)


def most_favorable_null(data: ExperimentData) -> ParameterPoint:
    """The best equal-rate pair (m, m) with m the empirical rate midpoint."""
    mid = data.rate_midpoint
    return ParameterPoint(mid, mid)

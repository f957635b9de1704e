"""Information measures for Bernoulli distributions.

All quantities are in nats (natural logarithm). Success probabilities
live in the closed unit interval; the degenerate rates 0 and 1 are legal
everywhere and follow the usual conventions:

* 0 * ln 0 is taken to be 0, so entropies of degenerate distributions
  vanish.
* Divergences between distributions with mismatched support are
  ``math.inf``, never an exception. Infinities compare and serialize
  like any other float.

Results are returned exactly as computed, without clamping: a value that
is mathematically zero may carry rounding dust of order 1e-16, and
callers that compare against theoretical bounds should allow for it.
"""

from __future__ import annotations

import math

__all__ = [
    "Proportion",
    "require_proportion",
    "binary_entropy",
    "cross_entropy",
    "kl_divergence",
    "js_divergence",
    "kl_quadratic_rhs",
]

Proportion = float
"""A success rate in [0, 1]; a plain float, validated at entry points."""


def require_proportion(value: float, name: str = "value") -> float:
    """Return ``value`` after checking it is a real number in [0, 1].

    Raises ValueError for anything outside the interval, including NaN.
    """
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def cross_entropy(p: Proportion, q: Proportion) -> float:
    """Binary cross-entropy H(p, q) = -p ln q - (1-p) ln(1-q), in nats.

    By the Gibbs inequality H(p, q) >= H(p), with equality exactly at
    q = p. Returns ``math.inf`` when q places zero probability on an
    outcome that p gives positive mass (q in {0, 1} with the matching
    p-mass nonzero).
    """
    require_proportion(p, "p")
    require_proportion(q, "q")
    total = 0.0
    if p > 0.0:
        if q == 0.0:
            return math.inf
        total -= p * math.log(q)
    if p < 1.0:
        if q == 1.0:
            return math.inf
        total -= (1.0 - p) * math.log(1.0 - q)
    return total


def binary_entropy(p: Proportion) -> float:
    """Shannon entropy H(p) = -p ln p - (1-p) ln(1-p) of a Bernoulli(p).

    Computed as ``cross_entropy(p, p)`` so that the identity
    ``kl_divergence(p, p) == 0.0`` holds bitwise, not merely to rounding.
    """
    return cross_entropy(p, p)


def kl_divergence(p: Proportion, q: Proportion) -> float:
    """Kullback-Leibler divergence KL(p, q) = H(p, q) - H(p), in nats.

    Nonnegative, zero iff p == q, and ``math.inf`` on support mismatch.
    """
    return cross_entropy(p, q) - binary_entropy(p)


def js_divergence(p: Proportion, q: Proportion) -> float:
    """Jensen-Shannon divergence JS(p, q) = H(m) - (H(p) + H(q)) / 2.

    Here m = (p + q) / 2 is the midpoint rate. Symmetric in its
    arguments (bitwise, since every step commutes), zero iff p == q, and
    at most ln 2, attained by disjoint supports such as (0, 1). Always
    finite: the midpoint of two proportions is degenerate only when both
    arguments are the same endpoint, and then JS is exactly zero.
    """
    require_proportion(p, "p")
    require_proportion(q, "q")
    m = 0.5 * (p + q)
    return binary_entropy(m) - 0.5 * (binary_entropy(p) + binary_entropy(q))


def kl_quadratic_rhs(theta: Proportion, p: Proportion) -> float:
    """Quadratic comparison value (theta - p)^2 / (2 theta (1 - theta)).

    This is the right-hand side of a claimed quadratic lower bound on
    ``kl_divergence(theta, p)``. The bound is not true everywhere, so
    this function only evaluates the expression; the oracle's region
    mapper tabulates where the divergence actually dominates it.

    ``theta`` must be interior to (0, 1); the expression divides by the
    variance factor theta (1 - theta).
    """
    require_proportion(theta, "theta")
    require_proportion(p, "p")
    if theta == 0.0 or theta == 1.0:
        raise ValueError(f"theta must be interior to (0, 1), got {theta!r}")
    diff = theta - p
    return diff * diff / (2.0 * theta * (1.0 - theta))

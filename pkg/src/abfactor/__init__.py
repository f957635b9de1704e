"""Bayes factor bounds and sample-size planning for binomial A/B tests.

The package is organized in four layers:

* :mod:`abfactor.divergences` - entropy, cross-entropy, KL and JS for
  Bernoulli distributions, in nats;
* :mod:`abfactor.model` - exact likelihoods and Bayes factors for
  two-group count data under finitely supported priors;
* :mod:`abfactor.bounds` - the closed-form factor bounds, the Welch
  statistic for proportions, and both sample-size rules;
* :mod:`abfactor.oracle` - brute-force numerical verification of the
  closed forms and empirical maps of where the inequality chain holds.

The ``abfactor`` command line (see :mod:`abfactor.cli`) exposes all of
it for scripting.
"""

from .divergences import (
    Proportion,
    binary_entropy,
    cross_entropy,
    js_divergence,
    kl_divergence,
    kl_quadratic_rhs,
    require_proportion,
)
from .model import (
    DiscretePrior,
    ExperimentData,
    ParameterPoint,
    bayes_factor_exact,
    likelihood_given_prior,
    log_likelihood_point,
    most_favorable_alternative,
    most_favorable_null,
)
from .bounds import (
    SampleBoundResult,
    fixed_null_factor,
    js_welch_lower_bound_rhs,
    maxmin_bayes_factor_bound,
    sample_bound_bayesian,
    sample_bound_frequentist,
    sample_bounds,
    welch_factor_bound,
    welch_t_binomial,
    welch_t_general,
)
from .oracle import (
    REGION_TOLERANCE,
    ConvergenceError,
    GridSpec,
    MaxMinResult,
    RegionReport,
    RegionRow,
    grid_maxmin,
    map_js_welch_region,
    map_kl_quadratic_region,
    mixture_no_improvement_check,
    verify_convexity,
)

__version__ = "0.1.0"

__all__ = [
    "Proportion",
    "require_proportion",
    "binary_entropy",
    "cross_entropy",
    "kl_divergence",
    "js_divergence",
    "kl_quadratic_rhs",
    "ExperimentData",
    "ParameterPoint",
    "DiscretePrior",
    "log_likelihood_point",
    "likelihood_given_prior",
    "bayes_factor_exact",
    "most_favorable_alternative",
    "most_favorable_null",
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
    "__version__",
]

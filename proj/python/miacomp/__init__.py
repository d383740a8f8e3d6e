"""Coverage, transmission-time and rate analysis for cooperative PPP downlinks."""

from ._core import (
    NetworkParams,
    ccdf,
    ccdf_curve,
    diversity_window,
    estimate_ccdf,
    estimate_ps_rate,
    hyp_f,
    hyp_f_deriv,
    hyp_h,
    log_grid,
    outage_asymptote,
    rate,
    rate_gain,
    scenarios,
    sir_ccdf,
    success_prob,
)

__all__ = [
    "NetworkParams",
    "ccdf",
    "ccdf_curve",
    "diversity_window",
    "estimate_ccdf",
    "estimate_ps_rate",
    "hyp_f",
    "hyp_f_deriv",
    "hyp_h",
    "log_grid",
    "outage_asymptote",
    "rate",
    "rate_gain",
    "scenarios",
    "sir_ccdf",
    "success_prob",
]

__version__ = "0.1.0"

"""Outage probability of reflecting-surface assisted links.

Thin wrapper over the C++ core. SNRs in the call signatures are in dB.
"""

from ._core import (
    MCEstimate,
    Scenario,
    SystemConfig,
    bessel_k0,
    channel_threshold,
    chernoff_outage,
    clt_outage,
    db_to_linear,
    erfc,
    laplace_d,
    laplace_g,
    linear_to_db,
    log_cdf_h1,
    log_upper_gamma_int,
    mc_curve,
    mc_outage,
    rate_function,
    saddlepoint_leading_outage,
    saddlepoint_outage,
)

__all__ = [
    "MCEstimate",
    "Scenario",
    "SystemConfig",
    "bessel_k0",
    "channel_threshold",
    "chernoff_outage",
    "clt_outage",
    "db_to_linear",
    "erfc",
    "laplace_d",
    "laplace_g",
    "linear_to_db",
    "log_cdf_h1",
    "log_upper_gamma_int",
    "mc_curve",
    "mc_outage",
    "rate_function",
    "saddlepoint_leading_outage",
    "saddlepoint_outage",
]

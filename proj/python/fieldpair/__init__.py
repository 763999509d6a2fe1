"""Field-particle model of EPR-correlated spin-1/2 pairs."""

from ._fieldpair import (
    BELL_BOUND,
    TSIRELSON_BOUND,
    Axis,
    alpha_conditional,
    antipode,
    average_full_dot,
    chsh,
    consistency_residual,
    correlation,
    invariant_checks,
    joint_distribution,
    joint_via_conditional,
    marginal,
    measure_alpha,
    measure_hemisphere,
    measure_rebasis,
    midpoint_axis,
    naive_correlation,
    run_cli,
    run_experiment,
)

__all__ = [
    "BELL_BOUND",
    "TSIRELSON_BOUND",
    "Axis",
    "alpha_conditional",
    "antipode",
    "average_full_dot",
    "chsh",
    "consistency_residual",
    "correlation",
    "invariant_checks",
    "joint_distribution",
    "joint_via_conditional",
    "marginal",
    "measure_alpha",
    "measure_hemisphere",
    "measure_rebasis",
    "midpoint_axis",
    "naive_correlation",
    "run_cli",
    "run_experiment",
]

"""Certified deviation bounds for coherently perturbed quantum evolutions.

The compiled core exposes the dense linear algebra, the paired Schrodinger
integrator, the analytic deviation bounds, and the continuous-time search
robustness helpers. See the project README for the matching CLI.
"""

from evobound._core import (
    EnvelopeNorm,
    EvolutionTrace,
    GroverKind,
    GroverModel,
    HermitianOperator,
    PerturbationSpec,
    RobustnessReport,
    RobustnessRow,
    bound_constant,
    bound_general,
    bound_general_closed,
    bound_linear,
    bound_sinusoidal,
    bound_sinusoidal_period_sum,
    build_grover,
    c_factor,
    default_steps,
    discretization_tolerance,
    embed_pauli_y,
    evolve_pair,
    gamma_tolerance,
    operator_norm,
    pauli_y,
    pointwise_inequality_residual,
    robustness_sweep,
    run_fuzz,
    success_lower_bound,
    success_lower_bound_constant,
    success_lower_bound_linearized,
    success_probability,
    unitary_step,
)

__version__ = "0.1.0"

__all__ = [
    "EnvelopeNorm",
    "EvolutionTrace",
    "GroverKind",
    "GroverModel",
    "HermitianOperator",
    "PerturbationSpec",
    "RobustnessReport",
    "RobustnessRow",
    "bound_constant",
    "bound_general",
    "bound_general_closed",
    "bound_linear",
    "bound_sinusoidal",
    "bound_sinusoidal_period_sum",
    "build_grover",
    "c_factor",
    "default_steps",
    "discretization_tolerance",
    "embed_pauli_y",
    "evolve_pair",
    "gamma_tolerance",
    "operator_norm",
    "pauli_y",
    "pointwise_inequality_residual",
    "robustness_sweep",
    "run_fuzz",
    "success_lower_bound",
    "success_lower_bound_constant",
    "success_lower_bound_linearized",
    "success_probability",
    "unitary_step",
]

from .extrapolation import extrapolate_to_zero, fit_error_order
from .schemas import (
    EPS_CEILING,
    HYPOTHESIS_MESSAGE,
    IntegerExponentStrategy,
    LimitExperiment,
    LimitReport,
    LimitRow,
    halving_schedule,
    validate_schedule,
)
from .verifier import (
    per_term_limit_check,
    per_term_limit_value,
    run_limit_scan,
    scaled_difference,
    scaled_experiment,
    theorem_rhs,
)

__all__ = [
    "EPS_CEILING",
    "HYPOTHESIS_MESSAGE",
    "IntegerExponentStrategy",
    "LimitExperiment",
    "LimitReport",
    "LimitRow",
    "extrapolate_to_zero",
    "fit_error_order",
    "halving_schedule",
    "per_term_limit_check",
    "per_term_limit_value",
    "run_limit_scan",
    "scaled_difference",
    "scaled_experiment",
    "theorem_rhs",
]

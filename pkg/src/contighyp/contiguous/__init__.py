from .algebra import (
    ContiguousStep,
    ExpansionEvaluation,
    apply_step,
    eval_shifted,
    evaluate_expansion,
    literal_remainder_discrepancy,
    remainder_closed_form,
    remainder_equality_check,
    step_residual,
    symmetric_difference,
    telescope,
    telescoped_difference,
    term_value,
)
from .schemas import (
    Branch,
    ShiftedParams,
    SymmetricDiffParams,
    TelescopeExpansion,
    TelescopeTerm,
)

__all__ = [
    "Branch",
    "ContiguousStep",
    "ExpansionEvaluation",
    "ShiftedParams",
    "SymmetricDiffParams",
    "TelescopeExpansion",
    "TelescopeTerm",
    "apply_step",
    "eval_shifted",
    "evaluate_expansion",
    "literal_remainder_discrepancy",
    "remainder_closed_form",
    "remainder_equality_check",
    "step_residual",
    "symmetric_difference",
    "telescope",
    "telescoped_difference",
    "term_value",
]

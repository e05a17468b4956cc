from contighyp.api import ExperimentRouter
from contighyp.contiguous import Branch, SymmetricDiffParams, symmetric_difference, telescope
from contighyp.hyp2f1 import EvalMethod, EvalResult, Hyp2F1Params, evaluate, hyp2f1
from contighyp.kernel import PrecisionContext
from contighyp.limits import LimitExperiment, LimitReport, run_limit_scan, theorem_rhs

__all__ = [
    "Branch",
    "EvalMethod",
    "EvalResult",
    "ExperimentRouter",
    "Hyp2F1Params",
    "LimitExperiment",
    "LimitReport",
    "PrecisionContext",
    "SymmetricDiffParams",
    "evaluate",
    "hyp2f1",
    "run_limit_scan",
    "symmetric_difference",
    "telescope",
    "theorem_rhs",
]

from .connection import eval_near_one, leading_coeff_z1
from .engine import DIRECT_SERIES_MAX_Z, evaluate, hyp2f1
from .schemas import EvalMethod, EvalResult, Hyp2F1Params
from .series import SeriesSum, eval_series, sum_series

__all__ = [
    "DIRECT_SERIES_MAX_Z",
    "EvalMethod",
    "EvalResult",
    "Hyp2F1Params",
    "SeriesSum",
    "eval_near_one",
    "eval_series",
    "evaluate",
    "hyp2f1",
    "leading_coeff_z1",
    "sum_series",
]

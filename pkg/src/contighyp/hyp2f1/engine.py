"""
Method dispatch for 2F1 evaluations on z in [0, 1).

z <= 1/2 uses the direct series; z > 1/2 uses the connection formula unless
c - a - b is an integer, in which case the direct series runs with a raised term
cap.
"""

from typing import Any

import mpmath
import structlog

from contighyp.hyp2f1.connection import eval_near_one
from contighyp.hyp2f1.schemas import EvalResult, Hyp2F1Params
from contighyp.hyp2f1.series import eval_series
from contighyp.kernel import PrecisionContext, is_near_integer

logger = structlog.get_logger(__name__)

DIRECT_SERIES_MAX_Z = mpmath.mpf(0.5)
RAISED_TERM_CAP_FACTOR = 10


def hyp2f1(p: Hyp2F1Params, ctx: PrecisionContext) -> EvalResult:
    """
    Evaluate 2F1(a, b; c; z) on the numerically stable path for ``p.z``.
    """
    if p.z <= DIRECT_SERIES_MAX_Z:
        return eval_series(p, ctx)
    with ctx.workspace():
        logarithmic = is_near_integer(p.c - p.a - p.b, ctx.tol_rel)
    if not logarithmic:
        return eval_near_one(p, ctx)
    logger.info("logarithmic_case_direct_series", z=float(p.z))
    return eval_series(p, ctx.with_term_cap(ctx.term_cap * RAISED_TERM_CAP_FACTOR))


def evaluate(a: Any, b: Any, c: Any, z: Any, ctx: PrecisionContext) -> EvalResult:
    """Convert raw inputs and dispatch."""
    return hyp2f1(Hyp2F1Params.create(a, b, c, z, ctx), ctx)

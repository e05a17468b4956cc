"""
Evaluation near z = 1 through the two-term connection formula.

For non-integer ``e = c - a - b``:

    F(a, b; c; z) = G(c)G(e)/(G(c-a)G(c-b)) * F(a, b; 1-e; 1-z)
                  + G(c)G(-e)/(G(a)G(b)) * (1-z)**e * F(c-a, c-b; 1+e; 1-z)

Both inner series run at 1 - z < 1/2. The second gamma factor is the leading
z -> 1 coefficient when Re(a + b - c) > 0.
"""

from dataclasses import dataclass
from typing import Any

import mpmath
import structlog

from contighyp.exceptions import DomainError, LogarithmicCaseError, PrecisionExhaustedError
from contighyp.hyp2f1.schemas import EvalMethod, EvalResult, Hyp2F1Params
from contighyp.hyp2f1.series import SeriesSum, cancellation_digits, sum_series
from contighyp.kernel import (
    PrecisionContext,
    gamma_ratio,
    is_near_integer,
    reciprocal_gamma_ratio,
    to_complex,
)

logger = structlog.get_logger(__name__)

HALF = 0.5


@dataclass(frozen=True)
class _ConnectionParts:
    regular: mpmath.mpc
    singular: mpmath.mpc
    regular_sum: SeriesSum
    singular_sum: SeriesSum

    @property
    def value(self) -> mpmath.mpc:
        return self.regular + self.singular

    def lost_digits(self) -> int:
        outer = cancellation_digits(max(abs(self.regular), abs(self.singular)), self.value)
        return max(outer, self.regular_sum.lost_digits(), self.singular_sum.lost_digits())


def _connection_parts(p: Hyp2F1Params, ctx: PrecisionContext) -> _ConnectionParts:
    with ctx.workspace():
        a, b, c = p.a, p.b, p.c
        w = 1 - p.z
        e = c - a - b
        regular_sum = sum_series(a, b, 1 - e, w, ctx)
        singular_sum = sum_series(c - a, c - b, 1 + e, w, ctx)
        regular_weight = reciprocal_gamma_ratio([c, e], [c - a, c - b], ctx)
        singular_weight = reciprocal_gamma_ratio([c, -e], [a, b], ctx)
        return _ConnectionParts(
            regular=regular_weight * regular_sum.value,
            singular=singular_weight * mpmath.power(w, e) * singular_sum.value,
            regular_sum=regular_sum,
            singular_sum=singular_sum,
        )


def eval_near_one(p: Hyp2F1Params, ctx: PrecisionContext) -> EvalResult:
    """
    Evaluate 2F1(a, b; c; z) for 1/2 < z < 1 by the connection formula.

    Args:
        p: Validated parameters with 1 - z < 1/2
        ctx: Precision context

    Returns:
        EvalResult: ``method`` is ``EvalMethod.NEAR_ONE_CONNECTION``

    Raises:
        DomainError: If 1 - z >= 1/2
        LogarithmicCaseError: If c - a - b is within ``tol_rel`` of an integer
        NonConvergenceError: If an inner series hits the term cap
        PrecisionExhaustedError: If cancellation cannot be absorbed
    """
    p.validate(ctx)
    p = p.canonical()
    with ctx.workspace():
        if 1 - p.z >= HALF:
            msg = f"connection formula needs 1 - z < 1/2, got z={mpmath.nstr(p.z, 15)}"
            raise DomainError(msg)
        if is_near_integer(p.c - p.a - p.b, ctx.tol_rel):
            msg = "c - a - b is an integer: logarithmic connection case is not supported"
            raise LogarithmicCaseError(msg)

    current = ctx
    while True:
        parts = _connection_parts(p, current)
        with current.workspace():
            lost = parts.lost_digits()
        if lost <= current.cancellation_budget:
            break
        logger.debug("connection_widened", lost_digits=lost, extra_digits=current.extra_digits)
        current = ctx.widened(lost - ctx.cancellation_budget + ctx.guard)

    with current.workspace():
        value = parts.value
        scale = abs(value)
        if scale == 0:
            est_rel_error = current.series_tol
        else:
            rounding = mpmath.mpf(10) ** (3 - current.working_dps)
            weighted = abs(parts.regular) * (
                parts.regular_sum.rel_error(current) + rounding
            ) + abs(parts.singular) * (parts.singular_sum.rel_error(current) + rounding)
            est_rel_error = max(current.series_tol, weighted / scale)
    if est_rel_error > ctx.tol_rel:
        msg = f"connection error estimate {mpmath.nstr(est_rel_error, 5)} exceeds tolerance"
        raise PrecisionExhaustedError(msg)
    logger.debug(
        "connection_converged",
        terms=parts.regular_sum.terms + parts.singular_sum.terms,
        lost_digits=lost,
    )
    return EvalResult(
        value=value,
        est_rel_error=est_rel_error,
        terms_used=parts.regular_sum.terms + parts.singular_sum.terms,
        method=EvalMethod.NEAR_ONE_CONNECTION,
    )


def leading_coeff_z1(a: Any, b: Any, c: Any, ctx: PrecisionContext) -> mpmath.mpc:
    """
    Coefficient K with F(a, b; c; z) ~ K (1 - z)**(c - a - b) as z -> 1-.

    Returns:
        mpmath.mpc: G(c) G(a+b-c) / (G(a) G(b))

    Raises:
        DomainError: If Re(a + b - c) <= 0
        PoleError: If c, a or b sits on a gamma pole
    """
    with ctx.workspace():
        a, b, c = to_complex(a), to_complex(b), to_complex(c)
        excess = a + b - c
        if mpmath.re(excess) <= 0:
            msg = "leading z->1 coefficient needs Re(a + b - c) > 0"
            raise DomainError(msg)
        return gamma_ratio([c, excess], [a, b], ctx)

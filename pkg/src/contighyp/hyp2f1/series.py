"""
Direct summation of the Gauss hypergeometric series.

Terms are generated by the ratio
``t_{n+1} / t_n = (a+n)(b+n) / ((c+n)(n+1)) * z`` and summed until the geometric
tail bound ``|t_n| rho / (1 - rho)`` drops below the context's stopping
tolerance, with ``rho`` the largest ratio seen over the last five terms (never
less than z, the limiting ratio).
"""

from collections import deque
from dataclasses import dataclass

import mpmath
import structlog

from contighyp.exceptions import NonConvergenceError, PrecisionExhaustedError
from contighyp.hyp2f1.schemas import EvalMethod, EvalResult, Hyp2F1Params
from contighyp.kernel import PrecisionContext

logger = structlog.get_logger(__name__)

RATIO_WINDOW = 5


@dataclass(frozen=True)
class SeriesSum:
    """
    Raw partial sum of one series.

    Attributes:
        value (mpmath.mpc): The partial sum
        terms (int): Number of terms summed
        tail_bound (mpmath.mpf): Estimated magnitude of the neglected tail
        peak (mpmath.mpf): Largest term magnitude met while summing
    """

    value: mpmath.mpc
    terms: int
    tail_bound: mpmath.mpf
    peak: mpmath.mpf

    def lost_digits(self) -> int:
        """Decimal digits lost to cancellation between the terms."""
        return cancellation_digits(self.peak, self.value)

    def rel_error(self, ctx: PrecisionContext) -> mpmath.mpf:
        if self.value == 0:
            return ctx.series_tol
        scale = abs(self.value)
        rounding = self.terms * mpmath.mpf(10) ** (-ctx.working_dps) * self.peak
        return max(ctx.series_tol, (self.tail_bound + rounding) / scale)


def cancellation_digits(peak: mpmath.mpf, value: mpmath.mpc) -> int:
    if value == 0 or peak == 0:
        return 0
    return max(0, int(mpmath.ceil(mpmath.log10(peak / abs(value)))))


def sum_series(
    a: mpmath.mpc, b: mpmath.mpc, c: mpmath.mpc, z: mpmath.mpf, ctx: PrecisionContext
) -> SeriesSum:
    """
    Sum 2F1(a, b; c; z) term by term. Must run inside ``ctx.workspace()``.

    Raises:
        NonConvergenceError: If ``ctx.term_cap`` terms do not meet the tail bound
    """
    term = mpmath.mpc(1)
    total = mpmath.mpc(1)
    peak = mpmath.mpf(1)
    if z == 0:
        return SeriesSum(total, 1, mpmath.mpf(0), peak)

    ratios: deque[mpmath.mpf] = deque(maxlen=RATIO_WINDOW)
    abs_z = abs(z)
    n = 0
    while n + 1 < ctx.term_cap:
        factor = (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        n += 1
        term *= factor
        if term == 0:
            # an upper parameter hit a non-positive integer: the series terminates
            return SeriesSum(total, n, mpmath.mpf(0), peak)
        total += term
        magnitude = abs(term)
        peak = max(peak, magnitude)
        ratios.append(abs(factor))
        if len(ratios) < RATIO_WINDOW:
            continue
        rho = max(*ratios, abs_z)
        if rho < 1:
            tail = magnitude * rho / (1 - rho)
            if tail <= ctx.series_tol * abs(total):
                return SeriesSum(total, n + 1, tail, peak)

    msg = f"series did not converge within term_cap={ctx.term_cap} terms"
    raise NonConvergenceError(msg)


def eval_series(p: Hyp2F1Params, ctx: PrecisionContext) -> EvalResult:
    """
    Evaluate 2F1(a, b; c; z) from its defining power series.

    The sum is repeated with more internal digits whenever cancellation between
    terms eats into the guard digits.

    Args:
        p: Validated parameters, z in [0, 1)
        ctx: Precision context

    Returns:
        EvalResult: ``method`` is ``EvalMethod.DIRECT_SERIES``

    Raises:
        NonConvergenceError: If the term cap is reached first
        PrecisionExhaustedError: If the accuracy contract cannot be met
        PoleError: If c is a non-positive integer
    """
    p.validate(ctx)
    p = p.canonical()
    current = ctx
    while True:
        with current.workspace():
            summed = sum_series(p.a, p.b, p.c, p.z, current)
        lost = summed.lost_digits()
        if lost <= current.cancellation_budget:
            break
        logger.debug("series_widened", lost_digits=lost, extra_digits=current.extra_digits)
        current = ctx.widened(lost - ctx.cancellation_budget + ctx.guard)

    with current.workspace():
        est_rel_error = summed.rel_error(current)
    if est_rel_error > ctx.tol_rel:
        msg = f"direct series error estimate {mpmath.nstr(est_rel_error, 5)} exceeds tolerance"
        raise PrecisionExhaustedError(msg)
    logger.debug("series_converged", terms=summed.terms, lost_digits=lost)
    return EvalResult(
        value=summed.value,
        est_rel_error=est_rel_error,
        terms_used=summed.terms,
        method=EvalMethod.DIRECT_SERIES,
    )

"""
Gamma-family functions at configurable precision.

Log-gamma is evaluated by ``mpmath.loggamma`` (argument reduction plus Stirling
series, principal branch); this module adds pole detection at the context's
tolerance, the Pochhammer product and stable gamma ratios.
"""

from collections.abc import Sequence
from typing import Any

import mpmath
import structlog

from contighyp.exceptions import DomainError, GammaOverflowError, PoleError
from contighyp.kernel.context import PrecisionContext
from contighyp.kernel.numbers import ensure_finite, is_near_nonpositive_integer, to_complex

logger = structlog.get_logger(__name__)

# Largest decimal exponent a gamma ratio may produce.
MAX_DECIMAL_EXPONENT = 100_000


def check_gamma_argument(z: mpmath.mpc, ctx: PrecisionContext, what: str = "z") -> None:
    """
    Raise ``PoleError`` when ``z`` lies within ``tol_rel`` of a non-positive integer.
    """
    if is_near_nonpositive_integer(z, ctx.tol_rel):
        msg = f"{what}={mpmath.nstr(z, 15)} is a pole of the gamma function"
        raise PoleError(msg)


def log_gamma(z: Any, ctx: PrecisionContext) -> mpmath.mpc:
    """
    Principal-branch log-gamma.

    Args:
        z: Argument, any value ``mpmath.mpc`` accepts
        ctx: Precision context

    Returns:
        mpmath.mpc: log(Gamma(z)) with relative error below ``ctx.tol_rel``

    Raises:
        PoleError: If ``z`` is within ``ctx.tol_rel`` of a non-positive integer
    """
    with ctx.workspace():
        z = to_complex(z)
        check_gamma_argument(z, ctx)
        result = mpmath.mpc(mpmath.loggamma(z))
        ensure_finite(result, "log_gamma")
        return result


def pochhammer(a: Any, n: int, ctx: PrecisionContext) -> mpmath.mpc:
    """
    Rising factorial ``(a)_n = a (a+1) ... (a+n-1)`` with ``(a)_0 = 1``.
    """
    if n < 0:
        msg = f"pochhammer order must be non-negative, got {n}"
        raise DomainError(msg)
    with ctx.workspace():
        a = to_complex(a)
        if n == 0:
            return mpmath.mpc(1)
        return mpmath.mpc(mpmath.fprod(a + k for k in range(n)))


def gamma_ratio(num: Sequence[Any], den: Sequence[Any], ctx: PrecisionContext) -> mpmath.mpc:
    """
    Evaluate ``prod Gamma(num) / prod Gamma(den)`` through log-gamma sums.

    Raises:
        PoleError: If any argument is at a pole
        GammaOverflowError: If the result magnitude exceeds 10**MAX_DECIMAL_EXPONENT
    """
    with ctx.workspace():
        total = mpmath.fsum(log_gamma(x, ctx) for x in num) - mpmath.fsum(
            log_gamma(x, ctx) for x in den
        )
        if mpmath.re(total) > MAX_DECIMAL_EXPONENT * mpmath.ln(10):
            logger.warning("gamma_ratio_overflow", log_magnitude=float(mpmath.re(total)))
            msg = f"gamma ratio exceeds 1e{MAX_DECIMAL_EXPONENT}"
            raise GammaOverflowError(msg)
        return mpmath.mpc(mpmath.exp(total))


def reciprocal_gamma_ratio(
    num: Sequence[Any], den: Sequence[Any], ctx: PrecisionContext
) -> mpmath.mpc:
    """
    Like ``gamma_ratio`` but a denominator pole yields an exact zero (1/Gamma vanishes there).
    """
    with ctx.workspace():
        if any(is_near_nonpositive_integer(to_complex(x), ctx.tol_rel) for x in den):
            return mpmath.mpc(0)
        return gamma_ratio(num, den, ctx)

"""
Extended-precision number helpers.

``CComplex`` is the complex type every module computes with. Conversions from
strings honour the precision that is active when they run, so literals should be
converted inside ``PrecisionContext.workspace()``.
"""

from typing import Any

import mpmath

from contighyp.exceptions import PrecisionExhaustedError

type CComplex = mpmath.mpc
type Real = mpmath.mpf


def to_complex(value: Any) -> mpmath.mpc:
    result = mpmath.mpc(value)
    ensure_finite(result)
    return result


def to_real(value: Any) -> mpmath.mpf:
    result = mpmath.mpf(value)
    ensure_finite(result)
    return result


def ensure_finite(value: Any, what: str = "value") -> None:
    """Raise if ``value`` has a NaN or infinite component."""
    parts = (value.real, value.imag) if isinstance(value, mpmath.mpc) else (value,)
    if any(mpmath.isnan(p) or mpmath.isinf(p) for p in parts):
        msg = f"{what} is not finite: {value}"
        raise PrecisionExhaustedError(msg)


def nearest_integer(value: mpmath.mpc | mpmath.mpf) -> int:
    return int(mpmath.nint(mpmath.re(value)))


def distance_to_integer(value: mpmath.mpc | mpmath.mpf) -> mpmath.mpf:
    return abs(value - nearest_integer(value))


def is_near_integer(value: mpmath.mpc | mpmath.mpf, tol: mpmath.mpf) -> bool:
    return distance_to_integer(value) <= tol


def is_near_nonpositive_integer(value: mpmath.mpc | mpmath.mpf, tol: mpmath.mpf) -> bool:
    return nearest_integer(value) <= 0 and is_near_integer(value, tol)


def format_number(value: mpmath.mpf | float, digits: int) -> str:
    """Scientific notation with ``digits`` significant figures."""
    with mpmath.workdps(digits + 5):
        return mpmath.nstr(
            mpmath.mpf(value), digits, min_fixed=1, max_fixed=0, show_zero_exponent=True
        )

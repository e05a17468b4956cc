from .context import MIN_DIGITS, PrecisionContext
from .gamma import (
    MAX_DECIMAL_EXPONENT,
    check_gamma_argument,
    gamma_ratio,
    log_gamma,
    pochhammer,
    reciprocal_gamma_ratio,
)
from .numbers import (
    CComplex,
    Real,
    distance_to_integer,
    ensure_finite,
    format_number,
    is_near_integer,
    is_near_nonpositive_integer,
    nearest_integer,
    to_complex,
    to_real,
)

__all__ = [
    "MAX_DECIMAL_EXPONENT",
    "MIN_DIGITS",
    "CComplex",
    "PrecisionContext",
    "Real",
    "check_gamma_argument",
    "distance_to_integer",
    "ensure_finite",
    "format_number",
    "gamma_ratio",
    "is_near_integer",
    "is_near_nonpositive_integer",
    "log_gamma",
    "nearest_integer",
    "pochhammer",
    "reciprocal_gamma_ratio",
    "to_complex",
    "to_real",
]

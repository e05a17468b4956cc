"""
Schema Definitions for Gauss hypergeometric evaluations

This module defines the inputs and outputs of the evaluation engine: the
parameter set of one 2F1(a, b; c; z) evaluation, the evaluation method and the
result record carrying the error estimate and the number of terms summed.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

import mpmath

from contighyp.exceptions import DomainError
from contighyp.kernel import PrecisionContext, check_gamma_argument, to_complex, to_real


class EvalMethod(str, Enum):
    """
    Evaluation path taken by the engine.

    Attributes:
        DIRECT_SERIES: Partial sums of the defining power series in z
        NEAR_ONE_CONNECTION: Two-term connection formula in powers of 1 - z
    """

    DIRECT_SERIES = "DirectSeries"
    NEAR_ONE_CONNECTION = "NearOneConnection"


@dataclass(frozen=True)
class Hyp2F1Params:
    """
    Parameters of one evaluation of 2F1(a, b; c; z).

    Attributes:
        a (mpmath.mpc): First upper parameter
        b (mpmath.mpc): Second upper parameter
        c (mpmath.mpc): Lower parameter, never a non-positive integer
        z (mpmath.mpf): Argument on the real segment [0, 1)
    """

    a: mpmath.mpc
    b: mpmath.mpc
    c: mpmath.mpc
    z: mpmath.mpf

    def __post_init__(self) -> None:
        if not 0 <= self.z < 1:
            msg = f"z must lie in [0, 1), got {mpmath.nstr(self.z, 15)}"
            raise DomainError(msg)

    @classmethod
    def create(cls, a: Any, b: Any, c: Any, z: Any, ctx: PrecisionContext) -> "Hyp2F1Params":
        """
        Convert and validate raw inputs at the precision of ``ctx``.

        Raises:
            DomainError: If z is outside [0, 1)
            PoleError: If c is a non-positive integer
        """
        with ctx.workspace():
            params = cls(a=to_complex(a), b=to_complex(b), c=to_complex(c), z=to_real(z))
        params.validate(ctx)
        return params

    def validate(self, ctx: PrecisionContext) -> None:
        with ctx.workspace():
            check_gamma_argument(self.c, ctx, what="c")

    def canonical(self) -> "Hyp2F1Params":
        """The same function with the upper parameters in a fixed order."""
        if (self.b.real, self.b.imag) < (self.a.real, self.a.imag):
            return Hyp2F1Params(a=self.b, b=self.a, c=self.c, z=self.z)
        return self


@dataclass(frozen=True)
class EvalResult:
    """
    Outcome of an engine evaluation.

    Attributes:
        value (mpmath.mpc): The function value
        est_rel_error (mpmath.mpf): Estimated relative error of ``value``
        terms_used (int): Series terms summed (all inner series for the connection path)
        method (EvalMethod): Evaluation path
    """

    value: mpmath.mpc
    est_rel_error: mpmath.mpf
    terms_used: int
    method: EvalMethod

"""
Schema Definitions for contiguous functions

This module defines the shifted-function notation F_{alpha,beta,gamma}, the pieces
of a telescoping expansion and the parameter set of the symmetric difference
studied near z = 1.

F_{alpha,beta,gamma}(z) denotes 2F1(a + alpha, b + beta; c + gamma; z) over a base
triple (a, b, c) with natural shifts.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Any

import mpmath

from contighyp.exceptions import DomainError
from contighyp.hyp2f1 import Hyp2F1Params
from contighyp.kernel import (
    PrecisionContext,
    check_gamma_argument,
    is_near_integer,
    nearest_integer,
    to_complex,
)


class Branch(str, Enum):
    """
    Which weighted function of the symmetric difference is expanded.

    Attributes:
        FIRST: (a)_alpha (b)_beta F_{alpha,beta,0}
        SECOND: (a)_beta (b)_alpha F_{beta,alpha,0}, alpha and beta exchanged
    """

    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class ShiftedParams:
    """
    Base parameters plus natural shifts.

    Attributes:
        a (mpmath.mpc): Base first upper parameter
        b (mpmath.mpc): Base second upper parameter
        c (mpmath.mpc): Base lower parameter
        alpha (int): Shift of a
        beta (int): Shift of b
        gamma (int): Shift of c
    """

    a: mpmath.mpc
    b: mpmath.mpc
    c: mpmath.mpc
    alpha: int = 0
    beta: int = 0
    gamma: int = 0

    def __post_init__(self) -> None:
        if min(self.alpha, self.beta, self.gamma) < 0:
            msg = (
                f"shifts must be natural numbers, got "
                f"({self.alpha}, {self.beta}, {self.gamma})"
            )
            raise DomainError(msg)

    def shifted(self, alpha: int = 0, beta: int = 0, gamma: int = 0) -> "ShiftedParams":
        """The same base with the shifts moved by the given amounts."""
        return replace(
            self, alpha=self.alpha + alpha, beta=self.beta + beta, gamma=self.gamma + gamma
        )

    def upper(self) -> tuple[mpmath.mpc, mpmath.mpc, mpmath.mpc]:
        """(a + alpha, b + beta, c + gamma); call inside a workspace."""
        return self.a + self.alpha, self.b + self.beta, self.c + self.gamma

    def at(self, z: Any, ctx: PrecisionContext) -> Hyp2F1Params:
        with ctx.workspace():
            a, b, c = self.upper()
        return Hyp2F1Params.create(a, b, c, z, ctx)

    def label(self) -> str:
        return f"F_{{{self.alpha},{self.beta},{self.gamma}}}"


@dataclass(frozen=True)
class TelescopeTerm:
    """
    One weighted piece ``z**z_power / denominator * weight * F_shifted(z)``.

    Attributes:
        index (int): Position i in the expansion (k for the remainder)
        z_power (int): Exponent of z
        denominator (mpmath.mpc): (c)_i
        weight (mpmath.mpc): Pochhammer weight, e.g. (a)_alpha (b)_{beta+i}
        shifted (ShiftedParams): The contiguous function multiplied by the coefficient
    """

    index: int
    z_power: int
    denominator: mpmath.mpc
    weight: mpmath.mpc
    shifted: ShiftedParams

    def coefficient(self, z: Any, ctx: PrecisionContext) -> mpmath.mpc:
        with ctx.workspace():
            return mpmath.mpf(z) ** self.z_power / self.denominator * self.weight


@dataclass(frozen=True)
class TelescopeExpansion:
    """
    ``lhs_weight * lhs`` rewritten as ``sum(terms) + remainder``.

    Attributes:
        branch (Branch): Which side of the symmetric difference was expanded
        lhs_weight (mpmath.mpc): (a)_alpha (b)_beta, or (a)_beta (b)_alpha for SECOND
        lhs (ShiftedParams): F_{alpha,beta,0}, or F_{beta,alpha,0} for SECOND
        terms (tuple[TelescopeTerm, ...]): The k lowered pieces, i = 0 .. k-1
        remainder (TelescopeTerm): The last raised piece, index k
    """

    branch: Branch
    lhs_weight: mpmath.mpc
    lhs: ShiftedParams
    terms: tuple[TelescopeTerm, ...]
    remainder: TelescopeTerm

    def remainder_coeff(self, z: Any, ctx: PrecisionContext) -> mpmath.mpc:
        return self.remainder.coefficient(z, ctx)


@dataclass(frozen=True)
class SymmetricDiffParams:
    """
    Hypotheses of the symmetric difference D(z).

    Attributes:
        a (mpmath.mpc): First base parameter
        b (mpmath.mpc): Second base parameter, a - b a natural number
        c (mpmath.mpc): Lower parameter
        alpha (int): First shift
        beta (int): Second shift
        k (int): a - b
    """

    a: mpmath.mpc
    b: mpmath.mpc
    c: mpmath.mpc
    alpha: int
    beta: int
    k: int

    @classmethod
    def create(
        cls, a: Any, b: Any, c: Any, alpha: int, beta: int, ctx: PrecisionContext
    ) -> "SymmetricDiffParams":
        """
        Convert and validate raw inputs.

        Raises:
            DomainError: If a - b is not a real natural number or a shift is negative
            PoleError: If a, b or c is a non-positive integer
        """
        if min(alpha, beta) < 0:
            msg = f"alpha and beta must be natural numbers, got ({alpha}, {beta})"
            raise DomainError(msg)
        with ctx.workspace():
            a, b, c = to_complex(a), to_complex(b), to_complex(c)
            difference = a - b
            k = nearest_integer(difference)
            if k < 0 or not is_near_integer(difference, ctx.tol_rel):
                msg = f"a - b must be a real natural number, got {mpmath.nstr(difference, 15)}"
                raise DomainError(msg)
            check_gamma_argument(a, ctx, what="a")
            check_gamma_argument(b, ctx, what="b")
            check_gamma_argument(c, ctx, what="c")
        return cls(a=a, b=b, c=c, alpha=alpha, beta=beta, k=k)

    def exponent(self, ctx: PrecisionContext) -> mpmath.mpc:
        """s = a + b + alpha + beta - c - 1."""
        with ctx.workspace():
            return self.a + self.b + self.alpha + self.beta - self.c - 1

    def shifts(self, branch: Branch) -> tuple[int, int]:
        """(lowered shift, raised shift) for ``branch``."""
        if branch is Branch.FIRST:
            return self.alpha, self.beta
        return self.beta, self.alpha

    def with_c(self, c: mpmath.mpc) -> "SymmetricDiffParams":
        return replace(self, c=c)

    def is_degenerate(self) -> bool:
        """True when (a - b)(alpha - beta) = 0, so D vanishes identically."""
        return self.k == 0 or self.alpha == self.beta

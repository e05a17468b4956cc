"""
Schema Definitions for limit experiments

A limit experiment scales the symmetric difference by (1 - z)**s, drives
z = 1 - eps along a decreasing eps schedule and extrapolates to eps = 0. The
report keeps every scaled value so the convergence can be inspected afterwards.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import mpmath

from contighyp.contiguous import SymmetricDiffParams
from contighyp.exceptions import DomainError
from contighyp.kernel import PrecisionContext, to_real

HYPOTHESIS_MESSAGE = "hypothesis Re(a+b+alpha+beta-c-1) > 0 violated"
# every eps must stay below this so that z = 1 - eps lies on the connection side
EPS_CEILING = 0.5


class IntegerExponentStrategy(str, Enum):
    """
    Handling of an exponent s that sits on an integer.

    Attributes:
        PERTURB: Shift c by a small real offset and mark the run advisory
        DIRECT: Keep the parameters; the engine falls back to the direct series
    """

    PERTURB = "perturb"
    DIRECT = "direct"


def halving_schedule(eps_max: Any, eps_min: Any) -> tuple[mpmath.mpf, ...]:
    """eps_max, eps_max/2, ... down to the last value not below eps_min."""
    with mpmath.workdps(30):
        top, bottom = to_real(eps_max), to_real(eps_min)
        if not 0 < bottom < top:
            msg = "schedule needs 0 < eps_min < eps_max"
            raise DomainError(msg)
        schedule: list[mpmath.mpf] = []
        current = top
        while current >= bottom * (1 - mpmath.mpf(10) ** -12):
            schedule.append(current)
            current = current / 2
        return tuple(schedule)


def validate_schedule(eps_schedule: Sequence[mpmath.mpf]) -> None:
    if not eps_schedule:
        msg = "eps schedule must not be empty"
        raise DomainError(msg)
    if eps_schedule[0] >= EPS_CEILING:
        msg = "eps schedule values must stay below 1/2"
        raise DomainError(msg)
    if eps_schedule[-1] <= 0:
        msg = "eps schedule values must be positive"
        raise DomainError(msg)
    if any(later >= earlier for earlier, later in zip(eps_schedule, eps_schedule[1:])):
        msg = "eps schedule must be strictly decreasing"
        raise DomainError(msg)


@dataclass(frozen=True)
class LimitExperiment:
    """
    One run of the z -> 1 limit of the scaled symmetric difference.

    Attributes:
        params (SymmetricDiffParams): Parameters of D(z)
        eps_schedule (tuple[mpmath.mpf, ...]): Strictly decreasing, all below 1/2
        ctx (PrecisionContext): Working precision
        extrapolation_points (int): Trailing schedule points fed to the extrapolation
        log_term (bool): Add an eps*log(eps) basis function
        integer_s_threshold (float): Distance below which s counts as an integer
        integer_s_offset (float): Real offset added to c by the PERTURB strategy
        integer_s_strategy (IntegerExponentStrategy): Handling of integer s
    """

    params: SymmetricDiffParams
    eps_schedule: tuple[mpmath.mpf, ...]
    ctx: PrecisionContext
    extrapolation_points: int = 6
    log_term: bool = False
    integer_s_threshold: float = 1e-6
    integer_s_offset: float = 1e-3
    integer_s_strategy: IntegerExponentStrategy = IntegerExponentStrategy.PERTURB

    def __post_init__(self) -> None:
        validate_schedule(self.eps_schedule)
        if self.extrapolation_points < 1:
            msg = "extrapolation_points must be positive"
            raise DomainError(msg)
        if mpmath.re(self.s) <= 0:
            raise DomainError(HYPOTHESIS_MESSAGE)

    @property
    def s(self) -> mpmath.mpc:
        return self.params.exponent(self.ctx)


@dataclass(frozen=True)
class LimitRow:
    """
    One schedule point.

    Attributes:
        eps (mpmath.mpf): Distance 1 - z
        value (mpmath.mpc): Scaled value L(eps)
        running_extrapolant (mpmath.mpc): Extrapolation over the points so far
        est_error (mpmath.mpf): |L(eps) - running_extrapolant|
    """

    eps: mpmath.mpf
    value: mpmath.mpc
    running_extrapolant: mpmath.mpc
    est_error: mpmath.mpf


@dataclass(frozen=True)
class LimitReport:
    """
    Outcome of a limit scan.

    ``rel_err`` equals ``abs_err`` when the expected limit is zero; convergence is
    then judged against ``abs_tol`` for the extrapolant and every scaled value.

    Attributes:
        rows (tuple[LimitRow, ...]): Scaled values in schedule order
        extrapolated (mpmath.mpc): Limit estimate at eps = 0
        rhs (mpmath.mpc): Closed-form limit
        abs_err (mpmath.mpf): |extrapolated - rhs|
        rel_err (mpmath.mpf): abs_err / |rhs|
        converged (bool): Whether the target was met
        target_rel_err (float): Requested relative error
        abs_tol (mpmath.mpf): Absolute tolerance used when rhs = 0
        fitted_order (mpmath.mpf | None): Empirical order of the eps correction
        advisory (bool): True when c was perturbed away from an integer exponent
        notes (tuple[str, ...]): Diagnostics
    """

    rows: tuple[LimitRow, ...]
    extrapolated: mpmath.mpc
    rhs: mpmath.mpc
    abs_err: mpmath.mpf
    rel_err: mpmath.mpf
    converged: bool
    target_rel_err: float
    abs_tol: mpmath.mpf
    fitted_order: mpmath.mpf | None = None
    advisory: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def scaled_values(self) -> list[tuple[mpmath.mpf, mpmath.mpc]]:
        return [(row.eps, row.value) for row in self.rows]

"""
Numerical verification of the z -> 1 limit of the symmetric difference.

With s = a + b + alpha + beta - c - 1 and Re(s) > 0,

    (1 - z)**s * D(z) -> G(c) G(s) / (G(a) G(b)) * (a - b) * (alpha - beta)

and every lowered telescoping term contributes (a + alpha - 1) (resp.
a + beta - 1) times G(c) G(s) / (G(a) G(b)) to that limit. This module scans
z = 1 - eps along a schedule, extrapolates to eps = 0 and compares with the
closed forms.
"""

from collections.abc import Callable, Sequence
from dataclasses import replace
from typing import Any

import mpmath
import structlog

from contighyp.contiguous import (
    Branch,
    SymmetricDiffParams,
    symmetric_difference,
    telescope,
    term_value,
)
from contighyp.exceptions import DomainError
from contighyp.kernel import (
    PrecisionContext,
    gamma_ratio,
    is_near_integer,
    is_near_nonpositive_integer,
    to_real,
)
from contighyp.limits.extrapolation import extrapolate_to_zero, fit_error_order
from contighyp.limits.schemas import (
    EPS_CEILING,
    HYPOTHESIS_MESSAGE,
    IntegerExponentStrategy,
    LimitExperiment,
    LimitReport,
    LimitRow,
    validate_schedule,
)

logger = structlog.get_logger(__name__)


def _check_hypothesis(p: SymmetricDiffParams, ctx: PrecisionContext) -> mpmath.mpc:
    s = p.exponent(ctx)
    if mpmath.re(s) <= 0:
        raise DomainError(HYPOTHESIS_MESSAGE)
    return s


def theorem_rhs(p: SymmetricDiffParams, ctx: PrecisionContext) -> mpmath.mpc:
    """
    G(c) / (G(a) G(b)) * G(s) * (a - b) * (alpha - beta).

    Raises:
        DomainError: If Re(s) <= 0
        PoleError: If a, b or c sits on a gamma pole
    """
    with ctx.workspace():
        s = _check_hypothesis(p, ctx)
        factor = (p.a - p.b) * (p.alpha - p.beta)
        return gamma_ratio([p.c, s], [p.a, p.b], ctx) * factor


def per_term_limit_value(
    p: SymmetricDiffParams, which: Branch, ctx: PrecisionContext
) -> mpmath.mpc:
    """
    Limit of eps**s times any lowered telescoping term of ``which``.

    Returns (a + alpha - 1) G(c) G(s) / (G(a) G(b)) for FIRST and the same with
    beta for SECOND; the value does not depend on the term index.

    Raises:
        DomainError: If Re(s) <= 0 or the lowered upper parameter is a non-positive integer
    """
    lowered_shift, _ = p.shifts(which)
    with ctx.workspace():
        s = _check_hypothesis(p, ctx)
        lowered_a = p.a + lowered_shift - 1
        if is_near_nonpositive_integer(lowered_a, ctx.tol_rel):
            msg = "per-term limits need a + shift - 1 off the non-positive integers"
            raise DomainError(msg)
        return lowered_a * gamma_ratio([p.c, s], [p.a, p.b], ctx)


def scaled_difference(p: SymmetricDiffParams, eps: Any, ctx: PrecisionContext) -> mpmath.mpc:
    """
    L(eps) = eps**s * D(1 - eps), principal branch of eps**s.

    Raises:
        DomainError: If eps is outside (0, 1/2)
        PrecisionExhaustedError: Propagated from ``symmetric_difference``
    """
    with ctx.workspace():
        eps = to_real(eps)
        if not 0 < eps < EPS_CEILING:
            msg = f"eps must lie in (0, 1/2), got {mpmath.nstr(eps, 15)}"
            raise DomainError(msg)
        s = p.exponent(ctx)
        z = 1 - eps
    difference = symmetric_difference(p, z, ctx)
    with ctx.workspace():
        return mpmath.power(eps, s) * difference


def _resolve_integer_exponent(
    p: SymmetricDiffParams,
    ctx: PrecisionContext,
    *,
    threshold: float,
    offset: float,
    strategy: IntegerExponentStrategy,
) -> tuple[SymmetricDiffParams, bool, tuple[str, ...]]:
    with ctx.workspace():
        s = p.exponent(ctx)
        if not is_near_integer(s, mpmath.mpf(threshold)):
            return p, False, ()
        if strategy is IntegerExponentStrategy.DIRECT:
            note = "integer exponent: inner evaluations fall back to the direct series"
            return p, False, (note,)
        perturbed = p.with_c(p.c + mpmath.mpf(offset))
    logger.info("integer_exponent_perturbed", offset=offset)
    note = f"integer exponent: c perturbed by {offset}, result is advisory"
    return perturbed, True, (note,)


def _scan(
    sample: Callable[[mpmath.mpf], mpmath.mpc],
    eps_schedule: Sequence[mpmath.mpf],
    expected: mpmath.mpc,
    ctx: PrecisionContext,
    *,
    target_rel_err: float,
    points: int,
    log_term: bool,
    advisory: bool,
    notes: tuple[str, ...],
) -> LimitReport:
    rows: list[LimitRow] = []
    values: list[mpmath.mpc] = []
    for j, eps in enumerate(eps_schedule):
        value = sample(eps)
        values.append(value)
        start = max(0, j + 1 - points)
        with ctx.workspace():
            running = extrapolate_to_zero(
                eps_schedule[start : j + 1], values[start:], log_term=log_term
            )
            rows.append(LimitRow(eps, value, running, abs(value - running)))
        logger.debug("limit_point", eps=float(eps), value=complex(value))

    with ctx.workspace():
        extrapolated = rows[-1].running_extrapolant
        abs_err = abs(extrapolated - expected)
        abs_tol = mpmath.mpf(10) ** (-(ctx.digits // 2))
        if expected == 0:
            rel_err = abs_err
            converged = abs_err <= abs_tol and all(abs(v) <= abs_tol for v in values)
        else:
            rel_err = abs_err / abs(expected)
            converged = rel_err <= target_rel_err
        fitted_order = fit_error_order(eps_schedule, values)

    if not converged:
        notes = (*notes, f"not converged: rel_err={mpmath.nstr(rel_err, 5)}")
        logger.warning("limit_not_converged", rel_err=float(rel_err), target=target_rel_err)
    return LimitReport(
        rows=tuple(rows),
        extrapolated=extrapolated,
        rhs=expected,
        abs_err=abs_err,
        rel_err=rel_err,
        converged=converged,
        target_rel_err=target_rel_err,
        abs_tol=abs_tol,
        fitted_order=fitted_order,
        advisory=advisory,
        notes=notes,
    )


def run_limit_scan(e: LimitExperiment, target_rel_err: float) -> LimitReport:
    """
    Scan L(eps) over the schedule, extrapolate to eps = 0 and compare with ``theorem_rhs``.

    A run that misses the target comes back with ``converged = False`` and a note;
    it never raises for that reason.
    """
    params, advisory, notes = _resolve_integer_exponent(
        e.params,
        e.ctx,
        threshold=e.integer_s_threshold,
        offset=e.integer_s_offset,
        strategy=e.integer_s_strategy,
    )
    rhs = theorem_rhs(params, e.ctx)
    report = _scan(
        lambda eps: scaled_difference(params, eps, e.ctx),
        e.eps_schedule,
        rhs,
        e.ctx,
        target_rel_err=target_rel_err,
        points=e.extrapolation_points,
        log_term=e.log_term,
        advisory=advisory,
        notes=notes,
    )
    logger.info(
        "limit_scan_finished",
        converged=report.converged,
        rel_err=float(report.rel_err),
        points=len(report.rows),
    )
    return report


def per_term_limit_check(  # noqa: PLR0913
    p: SymmetricDiffParams,
    i: int,
    which: Branch,
    eps_schedule: Sequence[mpmath.mpf],
    ctx: PrecisionContext,
    *,
    target_rel_err: float = 1e-6,
    extrapolation_points: int = 6,
    log_term: bool = False,
    integer_s_threshold: float = 1e-6,
    integer_s_offset: float = 1e-3,
    integer_s_strategy: IntegerExponentStrategy = IntegerExponentStrategy.PERTURB,
) -> LimitReport:
    """
    Verify eps**s * term_i(1 - eps) -> ``per_term_limit_value(p, which)``.

    Raises:
        DomainError: If i is outside [0, k-1] or the hypotheses fail
    """
    if not 0 <= i < p.k:
        msg = f"term index must lie in [0, {p.k - 1}], got {i}"
        raise DomainError(msg)
    schedule = tuple(eps_schedule)
    validate_schedule(schedule)
    params, advisory, notes = _resolve_integer_exponent(
        p,
        ctx,
        threshold=integer_s_threshold,
        offset=integer_s_offset,
        strategy=integer_s_strategy,
    )
    expected = per_term_limit_value(params, which, ctx)
    term = telescope(params, which, ctx).terms[i]
    s = params.exponent(ctx)

    def sample(eps: mpmath.mpf) -> mpmath.mpc:
        with ctx.workspace():
            z = 1 - eps
        value = term_value(term, z, ctx)
        with ctx.workspace():
            return mpmath.power(eps, s) * value

    return _scan(
        sample,
        schedule,
        expected,
        ctx,
        target_rel_err=target_rel_err,
        points=extrapolation_points,
        log_term=log_term,
        advisory=advisory,
        notes=(*notes, f"term {i} of the {which.value} branch"),
    )


def scaled_experiment(e: LimitExperiment, factor: Any) -> LimitExperiment:
    """The same experiment with every eps multiplied by ``factor`` in (0, 1)."""
    with e.ctx.workspace():
        scale = to_real(factor)
        if not 0 < scale < 1:
            msg = "schedule scale factor must lie in (0, 1)"
            raise DomainError(msg)
        schedule = tuple(eps * scale for eps in e.eps_schedule)
    return replace(e, eps_schedule=schedule)

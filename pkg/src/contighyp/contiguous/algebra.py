"""
Contiguous-relation machinery.

The single identity used throughout is

    F_{alpha,beta,gamma} = F_{alpha-1,beta,gamma}
                           + (b+beta)/(c+gamma) * z * F_{alpha,beta+1,gamma+1}

Iterating it k = a - b times on (a)_alpha (b)_beta F_{alpha,beta,0} gives the
telescoping expansion whose remainders coincide for both branches of the
symmetric difference, so D(z) reduces to the sum of the lowered terms.

Example:
    ```python
    ctx = PrecisionContext()
    d = SymmetricDiffParams.create(3, 1, 1.5, 2, 0, ctx)
    expansion = telescope(d, Branch.FIRST, ctx)
    evaluation = evaluate_expansion(expansion, 0.5, ctx)
    ```
"""

from dataclasses import dataclass, replace
from typing import Any, NamedTuple

import mpmath
import structlog

from contighyp.contiguous.schemas import (
    Branch,
    ShiftedParams,
    SymmetricDiffParams,
    TelescopeExpansion,
    TelescopeTerm,
)
from contighyp.exceptions import DomainError, PrecisionExhaustedError, ShiftUnderflowError
from contighyp.hyp2f1 import Hyp2F1Params, hyp2f1
from contighyp.kernel import PrecisionContext, gamma_ratio, pochhammer, to_real

logger = structlog.get_logger(__name__)


class ContiguousStep(NamedTuple):
    lowered: ShiftedParams
    raised: ShiftedParams
    raised_coeff: mpmath.mpc


@dataclass(frozen=True)
class ExpansionEvaluation:
    """
    Numerical check of a telescoping expansion at one z.

    Attributes:
        z (mpmath.mpf): Evaluation point
        term_values (tuple[mpmath.mpc, ...]): Value of each weighted term
        remainder_value (mpmath.mpc): Value of the weighted remainder
        total (mpmath.mpc): Left-to-right sum of terms and remainder
        lhs (mpmath.mpc): Value of the expanded left side
        residual (mpmath.mpf): |lhs - total|
    """

    z: mpmath.mpf
    term_values: tuple[mpmath.mpc, ...]
    remainder_value: mpmath.mpc
    total: mpmath.mpc
    lhs: mpmath.mpc
    residual: mpmath.mpf

    @property
    def relative_residual(self) -> mpmath.mpf:
        scale = abs(self.lhs)
        return self.residual / scale if scale else self.residual


def eval_shifted(s: ShiftedParams, z: Any, ctx: PrecisionContext) -> mpmath.mpc:
    """F_{alpha,beta,gamma}(z) = 2F1(a+alpha, b+beta; c+gamma; z)."""
    return hyp2f1(s.at(z, ctx), ctx).value


def _lowered(s: ShiftedParams, ctx: PrecisionContext) -> ShiftedParams:
    if s.alpha >= 1:
        return s.shifted(alpha=-1)
    # F_{-1,beta,gamma} over (a, b, c) is F_{0,beta,gamma} over (a - 1, b, c)
    with ctx.workspace():
        return replace(s, a=s.a - 1)


def apply_step(s: ShiftedParams, z: Any, ctx: PrecisionContext) -> ContiguousStep:
    """
    Split F_{alpha,beta,gamma} into F_{alpha-1,beta,gamma} and F_{alpha,beta+1,gamma+1}.

    Returns:
        ContiguousStep: lowered, raised and the coefficient (b+beta) z / (c+gamma)

    Raises:
        ShiftUnderflowError: If ``s.alpha`` is 0
    """
    if s.alpha == 0:
        msg = f"ShiftUnderflow: the contiguous step needs alpha >= 1, got {s.label()}"
        raise ShiftUnderflowError(msg)
    with ctx.workspace():
        coeff = (s.b + s.beta) * to_real(z) / (s.c + s.gamma)
    return ContiguousStep(_lowered(s, ctx), s.shifted(beta=1, gamma=1), coeff)


def step_residual(s: ShiftedParams, z: Any, ctx: PrecisionContext) -> mpmath.mpf:
    """
    Relative residual |F(s) - F(lowered) - coeff F(raised)| / |F(s)| of the step identity.
    """
    step = apply_step(s, z, ctx)
    whole = eval_shifted(s, z, ctx)
    lowered = eval_shifted(step.lowered, z, ctx)
    raised = eval_shifted(step.raised, z, ctx)
    with ctx.workspace():
        residual = abs(whole - lowered - step.raised_coeff * raised)
        scale = abs(whole)
        return residual / scale if scale else residual


def telescope(d: SymmetricDiffParams, which: Branch, ctx: PrecisionContext) -> TelescopeExpansion:
    """
    Iterate the contiguous step k = a - b times on one branch.

    For FIRST, (a)_alpha (b)_beta F_{alpha,beta,0} becomes
    sum_{i<k} z^i/(c)_i (a)_alpha (b)_{beta+i} F_{alpha-1,beta+i,i}
    plus z^k/(c)_k (a)_alpha (b)_{beta+k} F_{alpha,beta+k,k}; SECOND exchanges
    alpha and beta. With k = 0 the expansion is empty and the remainder is the
    whole left side.
    """
    lowered_shift, raised_shift = d.shifts(which)
    lhs = ShiftedParams(d.a, d.b, d.c, lowered_shift, raised_shift, 0)
    with ctx.workspace():
        a_weight = pochhammer(d.a, lowered_shift, ctx)
        lhs_weight = a_weight * pochhammer(d.b, raised_shift, ctx)

    terms: list[TelescopeTerm] = []
    current = lhs
    for i in range(d.k):
        with ctx.workspace():
            weight = a_weight * pochhammer(d.b, raised_shift + i, ctx)
            denominator = pochhammer(d.c, i, ctx)
        terms.append(TelescopeTerm(i, i, denominator, weight, _lowered(current, ctx)))
        current = current.shifted(beta=1, gamma=1)

    with ctx.workspace():
        remainder = TelescopeTerm(
            index=d.k,
            z_power=d.k,
            denominator=pochhammer(d.c, d.k, ctx),
            weight=a_weight * pochhammer(d.b, raised_shift + d.k, ctx),
            shifted=current,
        )
    logger.debug("telescope", branch=which.value, k=d.k, terms=len(terms))
    return TelescopeExpansion(
        branch=which,
        lhs_weight=lhs_weight,
        lhs=lhs,
        terms=tuple(terms),
        remainder=remainder,
    )


def term_value(term: TelescopeTerm, z: Any, ctx: PrecisionContext) -> mpmath.mpc:
    coefficient = term.coefficient(z, ctx)
    value = eval_shifted(term.shifted, z, ctx)
    with ctx.workspace():
        return coefficient * value


def evaluate_expansion(
    expansion: TelescopeExpansion, z: Any, ctx: PrecisionContext
) -> ExpansionEvaluation:
    """Evaluate every piece of ``expansion`` at z and sum left to right."""
    term_values = tuple(term_value(term, z, ctx) for term in expansion.terms)
    remainder_value = term_value(expansion.remainder, z, ctx)
    lhs_value = eval_shifted(expansion.lhs, z, ctx)
    with ctx.workspace():
        total = mpmath.mpc(0)
        for value in (*term_values, remainder_value):
            total += value
        lhs = expansion.lhs_weight * lhs_value
        return ExpansionEvaluation(
            z=to_real(z),
            term_values=term_values,
            remainder_value=remainder_value,
            total=total,
            lhs=lhs,
            residual=abs(lhs - total),
        )


def remainder_equality_check(d: SymmetricDiffParams, z: Any, ctx: PrecisionContext) -> mpmath.mpf:
    """
    |remainder(FIRST) - remainder(SECOND)| at z.

    Both remainders equal G(a+alpha) G(a+beta) / (G(a) G(b)) z^k/(c)_k
    F(a+alpha, a+beta; c+k; z) when k = a - b.

    Raises:
        DomainError: If k = 0
    """
    if d.k < 1:
        msg = "remainder equality needs a - b >= 1"
        raise DomainError(msg)
    first = term_value(telescope(d, Branch.FIRST, ctx).remainder, z, ctx)
    second = term_value(telescope(d, Branch.SECOND, ctx).remainder, z, ctx)
    with ctx.workspace():
        return abs(first - second)


def remainder_closed_form(d: SymmetricDiffParams, ctx: PrecisionContext) -> mpmath.mpc:
    """G(a+alpha) G(a+beta) / (G(a) G(b)), the shared remainder weight."""
    with ctx.workspace():
        return gamma_ratio([d.a + d.alpha, d.a + d.beta], [d.a, d.b], ctx)


def literal_remainder_discrepancy(
    d: SymmetricDiffParams, z: Any, ctx: PrecisionContext
) -> mpmath.mpf:
    """
    |F(a+alpha, a+beta; c+k; z) - F(a+alpha, a+beta; k; z)|.

    The second function reads the remainder's lower parameter as a - b instead of
    the c + (a - b) the recursion produces; a non-zero value shows the two
    readings differ.
    """
    if d.k < 1:
        msg = "remainder comparison needs a - b >= 1"
        raise DomainError(msg)
    with ctx.workspace():
        upper = (d.a + d.alpha, d.a + d.beta)
        recursion = hyp2f1(Hyp2F1Params.create(*upper, d.c + d.k, z, ctx), ctx).value
        literal = hyp2f1(Hyp2F1Params.create(*upper, d.k, z, ctx), ctx).value
        return abs(recursion - literal)


def cancellation_guard(z: mpmath.mpf) -> int:
    """Extra digits that absorb the one order of cancellation in D near z = 1."""
    one_minus = 1 - z
    if one_minus >= 1:
        return 1
    return int(mpmath.ceil(mpmath.log10(1 / one_minus))) + 1


def symmetric_difference(d: SymmetricDiffParams, z: Any, ctx: PrecisionContext) -> mpmath.mpc:
    """
    The symmetric difference

        D(z) = (a)_alpha (b)_beta F(a+alpha, b+beta; c; z)
               - (a)_beta (b)_alpha F(a+beta, b+alpha; c; z)

    Both functions are evaluated with enough extra digits that the absolute error
    stays below ``tol_rel * max(|term|) * (1 - z)``.

    Raises:
        PrecisionExhaustedError: If the error estimate misses that bound
    """
    with ctx.workspace():
        z = to_real(z)
        guard = cancellation_guard(z)
    inner = ctx.raised(guard)
    with inner.workspace():
        first_weight = pochhammer(d.a, d.alpha, inner) * pochhammer(d.b, d.beta, inner)
        second_weight = pochhammer(d.a, d.beta, inner) * pochhammer(d.b, d.alpha, inner)
        first_params = Hyp2F1Params.create(d.a + d.alpha, d.b + d.beta, d.c, z, inner)
        second_params = Hyp2F1Params.create(d.a + d.beta, d.b + d.alpha, d.c, z, inner)
    first = hyp2f1(first_params, inner)
    second = hyp2f1(second_params, inner)

    with inner.workspace():
        first_term = first_weight * first.value
        second_term = second_weight * second.value
        difference = first_term - second_term
        abs_error = abs(first_term) * first.est_rel_error + abs(second_term) * second.est_rel_error
        bound = ctx.tol_rel * max(abs(first_term), abs(second_term)) * (1 - z)
    if abs_error > bound:
        logger.warning("symmetric_difference_inaccurate", guard=guard, z=float(z))
        msg = f"guard of {guard} digits cannot meet the cancellation contract at z={float(z)}"
        raise PrecisionExhaustedError(msg)
    return difference


def telescoped_difference(d: SymmetricDiffParams, z: Any, ctx: PrecisionContext) -> mpmath.mpc:
    """D(z) as sum_i (term_i(FIRST) - term_i(SECOND)); the remainders cancel."""
    first = telescope(d, Branch.FIRST, ctx)
    second = telescope(d, Branch.SECOND, ctx)
    pairs = [
        (term_value(left, z, ctx), term_value(right, z, ctx))
        for left, right in zip(first.terms, second.terms, strict=True)
    ]
    with ctx.workspace():
        total = mpmath.mpc(0)
        for left, right in pairs:
            total += left - right
        return total

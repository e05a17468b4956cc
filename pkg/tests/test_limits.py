import mpmath
import pytest

from contighyp.cli import parse_complex
from contighyp.contiguous import Branch, SymmetricDiffParams
from contighyp.exceptions import DomainError
from contighyp.kernel import PrecisionContext
from contighyp.limits import (
    HYPOTHESIS_MESSAGE,
    IntegerExponentStrategy,
    LimitExperiment,
    extrapolate_to_zero,
    fit_error_order,
    halving_schedule,
    per_term_limit_check,
    per_term_limit_value,
    run_limit_scan,
    scaled_difference,
    scaled_experiment,
    theorem_rhs,
    validate_schedule,
)

SCHEDULE = halving_schedule(2.0**-4, 2.0**-22)


def _params(
    a: str, b: str, c: str, alpha: int, beta: int, ctx: PrecisionContext
) -> SymmetricDiffParams:
    a_, b_, c_ = (parse_complex(text).value(ctx) for text in (a, b, c))
    return SymmetricDiffParams.create(a_, b_, c_, alpha, beta, ctx)


def test_theorem_rhs_closed_form(
    theorem_params: SymmetricDiffParams, ctx: PrecisionContext, theorem_limit: mpmath.mpf
) -> None:
    rhs = theorem_rhs(theorem_params, ctx)
    with ctx.workspace():
        assert abs(rhs - theorem_limit) < mpmath.mpf("1e-35")


def test_limit_scan_reaches_closed_form(
    theorem_params: SymmetricDiffParams, ctx: PrecisionContext, theorem_limit: mpmath.mpf
) -> None:
    report = run_limit_scan(LimitExperiment(theorem_params, SCHEDULE, ctx), 1e-6)
    assert report.converged
    assert report.rel_err <= 1e-6
    assert len(report.rows) == 19
    assert not report.advisory
    with ctx.workspace():
        assert abs(report.extrapolated - theorem_limit) <= 1e-6 * theorem_limit
    assert report.fitted_order is not None
    assert report.fitted_order == pytest.approx(1, abs=0.1)


@pytest.mark.parametrize(
    ("a", "b", "c", "alpha", "beta"),
    [
        ("2.5", "0.5", "1.25", 1, 0),
        ("1.75", "0.75", "0.6", 0, 2),
        ("4", "1", "2.3", 1, 3),
        ("3.2", "1.2", "1.5+0.5i", 1, 0),
        ("2.25+0.5i", "0.25+0.5i", "1.1", 3, 1),
    ],
)
def test_limit_scan_parameter_sets(
    ctx: PrecisionContext, a: str, b: str, c: str, alpha: int, beta: int
) -> None:
    params = _params(a, b, c, alpha, beta, ctx)
    report = run_limit_scan(LimitExperiment(params, SCHEDULE, ctx), 1e-6)
    assert report.converged, report.notes
    rhs = theorem_rhs(params, ctx)
    with ctx.workspace():
        assert abs(report.extrapolated - rhs) <= 1e-6 * abs(rhs)


@pytest.mark.parametrize(
    ("a", "b", "alpha", "beta"),
    [("3", "1", 2, 2), ("2.5", "2.5", 3, 1)],
)
def test_degenerate_difference_scans_to_zero(
    ctx: PrecisionContext, a: str, b: str, alpha: int, beta: int
) -> None:
    params = _params(a, b, "1.5", alpha, beta, ctx)
    assert params.is_degenerate()
    report = run_limit_scan(LimitExperiment(params, SCHEDULE, ctx), 1e-6)
    assert report.rhs == 0
    assert report.converged
    assert report.rel_err == report.abs_err
    assert all(abs(row.value) < mpmath.mpf("1e-30") for row in report.rows)
    assert report.fitted_order is None


def test_hypothesis_violation(ctx: PrecisionContext) -> None:
    params = SymmetricDiffParams.create(2, 1, 3, 1, 0, ctx)
    with pytest.raises(DomainError, match="hypothesis"):
        theorem_rhs(params, ctx)
    with pytest.raises(DomainError, match="hypothesis"):
        LimitExperiment(params, SCHEDULE, ctx)
    assert "Re(a+b+alpha+beta-c-1) > 0" in HYPOTHESIS_MESSAGE


def test_scaled_difference_rejects_eps(
    theorem_params: SymmetricDiffParams, ctx: PrecisionContext
) -> None:
    for eps in ("0.5", "0", "-0.01"):
        with pytest.raises(DomainError, match="eps must lie"):
            scaled_difference(theorem_params, eps, ctx)


@pytest.mark.parametrize("which", [Branch.FIRST, Branch.SECOND])
@pytest.mark.parametrize(
    ("a", "b", "c", "alpha", "beta"), [("3", "1", "1.5", 2, 0), ("2.5", "0.5", "1.25", 1, 0)]
)
def test_per_term_limits_do_not_depend_on_index(  # noqa: PLR0913
    ctx: PrecisionContext, which: Branch, a: str, b: str, c: str, alpha: int, beta: int
) -> None:
    params = _params(a, b, c, alpha, beta, ctx)
    assert params.k == 2
    expected = per_term_limit_value(params, which, ctx)
    for i in range(params.k):
        report = per_term_limit_check(params, i, which, SCHEDULE, ctx)
        assert report.rhs == expected
        assert report.rel_err <= 1e-5
        assert f"term {i} of the {which.value} branch" in report.notes


def test_per_term_limits_sum_to_theorem(
    theorem_params: SymmetricDiffParams, ctx: PrecisionContext
) -> None:
    first = per_term_limit_value(theorem_params, Branch.FIRST, ctx)
    second = per_term_limit_value(theorem_params, Branch.SECOND, ctx)
    rhs = theorem_rhs(theorem_params, ctx)
    with ctx.workspace():
        total = theorem_params.k * (first - second)
        assert abs(total - rhs) < ctx.tol_rel * abs(rhs)
        assert abs(first - 2 * second) < ctx.tol_rel * abs(first)


def test_per_term_index_out_of_range(
    theorem_params: SymmetricDiffParams, ctx: PrecisionContext
) -> None:
    with pytest.raises(DomainError, match="term index"):
        per_term_limit_check(theorem_params, 2, Branch.FIRST, SCHEDULE, ctx)
    with pytest.raises(DomainError, match="term index"):
        per_term_limit_check(theorem_params, -1, Branch.FIRST, SCHEDULE, ctx)


def test_integer_exponent_is_perturbed(loose_ctx: PrecisionContext) -> None:
    ctx = loose_ctx
    params = SymmetricDiffParams.create(3, 1, 2, 1, 0, ctx)
    schedule = halving_schedule(2.0**-4, 2.0**-16)
    experiment = LimitExperiment(
        params, schedule, ctx, integer_s_strategy=IntegerExponentStrategy.PERTURB
    )
    report = run_limit_scan(experiment, 1e-6)
    assert report.advisory
    assert any("advisory" in note for note in report.notes)
    with ctx.workspace():
        assert abs(report.rhs - 1) < mpmath.mpf("1e-2")
        assert report.rel_err < mpmath.mpf("1e-2")


def test_extrapolation_recovers_polynomial_limit() -> None:
    with mpmath.workdps(40):
        eps = [mpmath.mpf("0.1") / 2**j for j in range(4)]
        values = [3 + 2 * e - e**2 + e**3 for e in eps]
        assert abs(extrapolate_to_zero(eps, values) - 3) < mpmath.mpf("1e-30")
        assert extrapolate_to_zero(eps[:1], values[:1]) == values[0]
        with pytest.raises(ValueError, match="matching"):
            extrapolate_to_zero(eps, values[:2])


def test_extrapolation_with_log_term() -> None:
    with mpmath.workdps(40):
        eps = [mpmath.mpf("0.01") / 2**j for j in range(5)]
        values = [1 + e * mpmath.log(e / eps[0]) + e**2 for e in eps]
        limit = extrapolate_to_zero(eps, values, log_term=True)
        assert abs(limit - 1) < mpmath.mpf("1e-30")


def test_fitted_order() -> None:
    with mpmath.workdps(40):
        eps = [mpmath.mpf("0.1") / 2**j for j in range(8)]
        linear = fit_error_order(eps, [1 + e for e in eps])
        quadratic = fit_error_order(eps, [1 + e**2 for e in eps])
        assert linear is not None
        assert quadratic is not None
        assert abs(linear - 1) < mpmath.mpf("1e-20")
        assert abs(quadratic - 2) < mpmath.mpf("1e-20")
        assert fit_error_order(eps, [mpmath.mpf(1)] * len(eps)) is None


def test_halving_schedule() -> None:
    assert len(SCHEDULE) == 19
    assert SCHEDULE[0] == mpmath.mpf(2) ** -4
    assert SCHEDULE[-1] == mpmath.mpf(2) ** -22
    with pytest.raises(DomainError):
        halving_schedule(0.1, 0.2)


@pytest.mark.parametrize(
    ("schedule", "message"),
    [
        ((), "empty"),
        ((mpmath.mpf("0.5"), mpmath.mpf("0.1")), "below 1/2"),
        ((mpmath.mpf("0.1"), mpmath.mpf("0.2")), "decreasing"),
        ((mpmath.mpf("0.1"), mpmath.mpf(0)), "positive"),
    ],
)
def test_validate_schedule(schedule: tuple[mpmath.mpf, ...], message: str) -> None:
    with pytest.raises(DomainError, match=message):
        validate_schedule(schedule)


def test_scaled_experiment(theorem_params: SymmetricDiffParams, ctx: PrecisionContext) -> None:
    experiment = LimitExperiment(theorem_params, SCHEDULE, ctx)
    halved = scaled_experiment(experiment, "0.5")
    assert halved.eps_schedule[0] == SCHEDULE[1]
    assert len(halved.eps_schedule) == len(SCHEDULE)
    with pytest.raises(DomainError, match="scale factor"):
        scaled_experiment(experiment, 2)


def test_scaled_schedule_keeps_the_limit(
    theorem_params: SymmetricDiffParams, ctx: PrecisionContext
) -> None:
    experiment = LimitExperiment(theorem_params, SCHEDULE, ctx)
    base = run_limit_scan(experiment, 1e-6)
    scaled = run_limit_scan(scaled_experiment(experiment, "0.7"), 1e-6)
    assert scaled.converged
    assert len(scaled.rows) == len(base.rows)
    with ctx.workspace():
        gap = abs(scaled.extrapolated - base.extrapolated)
        assert gap < mpmath.mpf("1e-12") * abs(base.extrapolated)

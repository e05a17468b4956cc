import mpmath
import pytest

from contighyp.exceptions import (
    DomainError,
    GammaOverflowError,
    PoleError,
    PrecisionExhaustedError,
)
from contighyp.kernel import (
    PrecisionContext,
    format_number,
    gamma_ratio,
    is_near_nonpositive_integer,
    log_gamma,
    pochhammer,
    reciprocal_gamma_ratio,
    to_real,
)


def test_context_rejects_low_precision() -> None:
    with pytest.raises(DomainError, match="at least 30"):
        PrecisionContext(digits=20)


def test_context_rejects_precision_above_ceiling() -> None:
    with pytest.raises(PrecisionExhaustedError):
        PrecisionContext(digits=100, max_digits=110)


def test_context_tolerances(ctx: PrecisionContext) -> None:
    with ctx.workspace():
        assert ctx.tol_rel == mpmath.mpf(10) ** -55
        assert ctx.series_tol == mpmath.mpf(10) ** -65
    assert ctx.working_dps == 80
    assert ctx.cancellation_budget == 15


def test_workspace_restores_precision(ctx: PrecisionContext) -> None:
    before = mpmath.mp.dps
    with ctx.workspace():
        assert mpmath.mp.dps == 80
    assert mpmath.mp.dps == before


def test_raised_and_widened(ctx: PrecisionContext) -> None:
    assert ctx.raised(7).digits == 67
    assert ctx.raised(7).extra_digits == 20
    assert ctx.widened(7).digits == 60
    assert ctx.widened(7).extra_digits == 27
    with pytest.raises(PrecisionExhaustedError):
        ctx.widened(5000)


def test_log_gamma_of_five(ctx: PrecisionContext) -> None:
    value = log_gamma(5, ctx)
    with ctx.workspace():
        assert abs(value - mpmath.log(24)) < ctx.tol_rel


def test_log_gamma_special_values(ctx: PrecisionContext) -> None:
    one = log_gamma(1, ctx)
    half = log_gamma("0.5", ctx)
    with ctx.workspace():
        assert abs(one) < ctx.tol_rel
        expected = mpmath.log(mpmath.sqrt(mpmath.pi))
        assert abs(half - expected) < ctx.tol_rel * abs(expected)


@pytest.mark.parametrize(
    ("re", "im"), [("2", "3"), ("0.3", "-1.7"), ("4.5", "0"), ("-2.5", "0.25")]
)
def test_log_gamma_follows_recurrence(ctx: PrecisionContext, re: str, im: str) -> None:
    with ctx.workspace():
        z = mpmath.mpc(re, im)
    current = log_gamma(z, ctx)
    with ctx.workspace():
        following = log_gamma(z + 1, ctx)
        lhs = mpmath.exp(following)
        rhs = z * mpmath.exp(current)
        assert abs(lhs - rhs) <= 10 * ctx.tol_rel * abs(lhs)


def test_log_gamma_pole(ctx: PrecisionContext) -> None:
    with pytest.raises(PoleError, match="pole"):
        log_gamma(-3, ctx)
    with pytest.raises(PoleError):
        log_gamma(0, ctx)


def test_log_gamma_matches_library_off_axis(ctx: PrecisionContext) -> None:
    z = mpmath.mpc("0.3", "2.7")
    value = log_gamma(z, ctx)
    with ctx.workspace():
        expected = mpmath.gamma(z)
        assert abs(mpmath.exp(value) - expected) < ctx.tol_rel * abs(expected)


def test_pochhammer_half_integer(ctx: PrecisionContext) -> None:
    value = pochhammer("0.5", 3, ctx)
    with ctx.workspace():
        assert abs(value - mpmath.mpf("1.875")) < ctx.tol_rel


def test_pochhammer_splits_into_products(ctx: PrecisionContext) -> None:
    assert pochhammer(3, 2, ctx) * pochhammer(5, 3, ctx) == pochhammer(3, 5, ctx)
    a = mpmath.mpc("1.25", "-0.5")
    whole = pochhammer(a, 7, ctx)
    with ctx.workspace():
        split = pochhammer(a, 3, ctx) * pochhammer(a + 3, 4, ctx)
        assert abs(split - whole) <= ctx.tol_rel * abs(whole)


def test_pochhammer_order_zero_and_negative(ctx: PrecisionContext) -> None:
    assert pochhammer(-4, 0, ctx) == 1
    assert pochhammer(-2, 3, ctx) == 0
    with pytest.raises(DomainError):
        pochhammer(1, -1, ctx)


def test_pochhammer_matches_gamma_ratio(ctx: PrecisionContext) -> None:
    a = mpmath.mpc("1.25", "-0.5")
    value = pochhammer(a, 6, ctx)
    ratio = gamma_ratio([a + 6], [a], ctx)
    with ctx.workspace():
        assert abs(value - ratio) < 10 * ctx.tol_rel * abs(value)


def test_gamma_ratio_half_integers(ctx: PrecisionContext) -> None:
    value = gamma_ratio(["1.5", "3.5"], [3], ctx)
    with ctx.workspace():
        expected = mpmath.mpf("0.9375") * mpmath.pi / 2
        assert abs(value - expected) < ctx.tol_rel * expected
    assert format_number(value.real, 11).startswith("1.4726215564")


def test_gamma_ratio_overflow(ctx: PrecisionContext) -> None:
    with pytest.raises(GammaOverflowError):
        gamma_ratio([10**6], [], ctx)
    with pytest.raises(OverflowError):
        gamma_ratio([10**6], [1], ctx)


def test_gamma_ratio_pole(ctx: PrecisionContext) -> None:
    with pytest.raises(PoleError):
        gamma_ratio([1], [-2], ctx)


def test_reciprocal_gamma_ratio_vanishes_at_denominator_pole(ctx: PrecisionContext) -> None:
    assert reciprocal_gamma_ratio([1.5], [-2], ctx) == 0
    with ctx.workspace():
        assert abs(reciprocal_gamma_ratio([2], [1], ctx) - 1) < ctx.tol_rel


def test_near_pole_detection(ctx: PrecisionContext) -> None:
    with ctx.workspace():
        tiny, small = mpmath.mpf(10) ** -70, mpmath.mpf(10) ** -40
        assert is_near_nonpositive_integer(-2 + tiny, ctx.tol_rel)
        assert not is_near_nonpositive_integer(-2 + small, ctx.tol_rel)
        assert not is_near_nonpositive_integer(mpmath.mpf(3), ctx.tol_rel)


def test_to_real_rejects_nan() -> None:
    with pytest.raises(PrecisionExhaustedError):
        to_real(mpmath.nan)


def test_format_number_is_scientific() -> None:
    assert format_number(0.5, 5) == "5.0e-1"
    assert format_number(1, 3) == "1.0e+0"

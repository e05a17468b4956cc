"""
Built-in property suites behind ``contighyp selftest``.

Each suite draws its parameter sets from a seeded ``random.Random`` and reports
one ``CheckResult`` per case. Parameters are drawn as short decimal strings so the
same seed reproduces the same extended-precision inputs at any digits setting.
"""

import random
from collections.abc import Callable
from dataclasses import dataclass

import mpmath
import structlog

from contighyp.cli.config import RunConfig
from contighyp.cli.reports import NumberFormatter, Report
from contighyp.contiguous import (
    Branch,
    ShiftedParams,
    SymmetricDiffParams,
    evaluate_expansion,
    step_residual,
    telescope,
    term_value,
)
from contighyp.hyp2f1 import Hyp2F1Params, eval_near_one, eval_series, evaluate
from contighyp.kernel import PrecisionContext, distance_to_integer, to_complex, to_real

logger = structlog.get_logger(__name__)

CLOSED_FORM_GRID = ("0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9")
TELESCOPE_POINTS = ("0.3", "0.6", "0.9")
SUITES = ("closed-form", "step-identity", "telescoping", "remainder", "cross-method")
# cross-method draws skip c - a - b this close to an integer (logarithmic case)
INTEGER_EXPONENT_MARGIN = 0.05


@dataclass(frozen=True)
class CheckResult:
    suite: str
    case: str
    metric: mpmath.mpf
    threshold: mpmath.mpf

    @property
    def passed(self) -> bool:
        return self.metric <= self.threshold


def _draw(rng: random.Random, low: float, high: float) -> str:
    return f"{rng.uniform(low, high):.3f}"


def _relative(value: mpmath.mpc, reference: mpmath.mpc) -> mpmath.mpf:
    scale = abs(reference)
    return abs(value - reference) / scale if scale else abs(value - reference)


def closed_form_checks(ctx: PrecisionContext) -> list[CheckResult]:
    """Engine against elementary closed forms on z = 0.1, ..., 0.9."""
    threshold = 100 * ctx.tol_rel
    oracles: list[tuple[str, tuple[str, str, str], Callable[[mpmath.mpf], mpmath.mpf], bool]] = [
        ("F(1,1;2;z)", ("1", "1", "2"), lambda z: -mpmath.log(1 - z) / z, False),
        ("F(2.5,1.5;1.5;z)", ("2.5", "1.5", "1.5"), lambda z: (1 - z) ** mpmath.mpf(-2.5), False),
        ("F(1/2,1/2;3/2;z^2)", ("0.5", "0.5", "1.5"), lambda z: mpmath.asin(z) / z, True),
    ]
    results: list[CheckResult] = []
    for name, (a, b, c), closed_form, squared in oracles:
        for point in CLOSED_FORM_GRID:
            with ctx.workspace():
                z = to_real(point)
                argument = z * z if squared else z
                expected = closed_form(z)
            value = evaluate(a, b, c, argument, ctx).value
            with ctx.workspace():
                metric = _relative(value, expected)
            results.append(CheckResult("closed-form", f"{name} z={point}", metric, threshold))
    return results


def step_identity_checks(
    ctx: PrecisionContext, rng: random.Random, cases: int
) -> list[CheckResult]:
    """The contiguous step on random parameters with z in (0, 0.95)."""
    threshold = 100 * ctx.tol_rel
    results: list[CheckResult] = []
    for _ in range(cases):
        a, b, c = _draw(rng, 0.1, 5), _draw(rng, 0.1, 5), _draw(rng, 0.5, 5)
        alpha, beta, gamma = rng.randint(1, 4), rng.randint(0, 4), rng.randint(0, 4)
        z = _draw(rng, 0.01, 0.95)
        with ctx.workspace():
            params = ShiftedParams(to_complex(a), to_complex(b), to_complex(c), alpha, beta, gamma)
        metric = step_residual(params, z, ctx)
        case = f"({a},{b},{c}) {params.label()} z={z}"
        results.append(CheckResult("step-identity", case, metric, threshold))
    return results


def _symmetric_draw(
    ctx: PrecisionContext, rng: random.Random, k: int
) -> tuple[SymmetricDiffParams, str]:
    b = round(rng.uniform(0.1, 4), 3)
    a, c = f"{b + k:.3f}", _draw(rng, 0.5, 5)
    alpha, beta = rng.randint(0, 4), rng.randint(0, 4)
    params = SymmetricDiffParams.create(a, f"{b:.3f}", c, alpha, beta, ctx)
    return params, f"({a},{b:.3f},{c}) alpha={alpha} beta={beta}"


def telescoping_checks(
    ctx: PrecisionContext, rng: random.Random, cases: int
) -> list[CheckResult]:
    """Left side minus the full expansion for k = 1, ..., 4."""
    threshold = 100 * ctx.tol_rel
    results: list[CheckResult] = []
    for index in range(cases):
        params, case = _symmetric_draw(ctx, rng, index % 4 + 1)
        which = Branch.FIRST if index % 2 == 0 else Branch.SECOND
        expansion = telescope(params, which, ctx)
        for z in TELESCOPE_POINTS:
            metric = evaluate_expansion(expansion, z, ctx).relative_residual
            label = f"{case} {which.value} z={z}"
            results.append(CheckResult("telescoping", label, metric, threshold))
    return results


def remainder_checks(
    ctx: PrecisionContext, rng: random.Random, cases: int
) -> list[CheckResult]:
    """Remainders of both branches agree when k = a - b is 1, 2 or 3."""
    threshold = 100 * ctx.tol_rel
    results: list[CheckResult] = []
    for index in range(cases):
        params, case = _symmetric_draw(ctx, rng, index % 3 + 1)
        z = _draw(rng, 0.01, 0.95)
        first = term_value(telescope(params, Branch.FIRST, ctx).remainder, z, ctx)
        second = term_value(telescope(params, Branch.SECOND, ctx).remainder, z, ctx)
        with ctx.workspace():
            metric = abs(first - second) / max(abs(first), abs(second), 1)
        results.append(CheckResult("remainder", f"{case} z={z}", metric, threshold))
    return results


def cross_method_checks(
    ctx: PrecisionContext, rng: random.Random, cases: int
) -> list[CheckResult]:
    """Direct series against the connection formula for z in (0.5, 0.99)."""
    results: list[CheckResult] = []
    while len(results) < cases:
        a, b, c = _draw(rng, 0.1, 3), _draw(rng, 0.1, 3), _draw(rng, 0.5, 4)
        z = _draw(rng, 0.51, 0.99)
        params = Hyp2F1Params.create(a, b, c, z, ctx)
        with ctx.workspace():
            if distance_to_integer(params.c - params.a - params.b) < INTEGER_EXPONENT_MARGIN:
                continue
        direct = eval_series(params, ctx)
        near_one = eval_near_one(params, ctx)
        with ctx.workspace():
            metric = _relative(near_one.value, direct.value)
            threshold = direct.est_rel_error + near_one.est_rel_error
        results.append(CheckResult("cross-method", f"({a},{b},{c}) z={z}", metric, threshold))
    return results


def run_checks(ctx: PrecisionContext, seed: int, cases: int) -> list[CheckResult]:
    rng = random.Random(seed)
    results = closed_form_checks(ctx)
    results += step_identity_checks(ctx, rng, cases)
    results += telescoping_checks(ctx, rng, cases)
    results += remainder_checks(ctx, rng, cases)
    results += cross_method_checks(ctx, rng, cases)
    return results


def run_selftest(config: RunConfig, cases: int) -> Report:
    """Run every suite and tabulate the outcome; ``status`` is ok iff all checks pass."""
    ctx = config.precision()
    fmt = NumberFormatter(config.digits)
    results = run_checks(ctx, config.seed, cases)
    report = Report(
        command="selftest",
        config={**config.echo(), "cases": str(cases)},
        columns=("suite", "case", "metric", "threshold", "passed"),
    )
    for index, result in enumerate(results):
        report.add_row(
            result.suite,
            result.case,
            fmt.real(result.metric),
            fmt.real(result.threshold),
            str(result.passed).lower(),
        )
        if not result.passed:
            report.mark_failure(index)
    failures = sum(not result.passed for result in results)
    for suite in SUITES:
        suite_results = [result for result in results if result.suite == suite]
        report.summary[suite] = f"{sum(r.passed for r in suite_results)}/{len(suite_results)}"
    report.summary["failures"] = str(failures)
    report.summary["status"] = "ok" if failures == 0 else "failed"
    logger.info("selftest_finished", checks=len(results), failures=failures)
    return report

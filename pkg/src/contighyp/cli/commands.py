"""
Command-line front end.

Subcommands build a ``Report`` and exit with a code that depends only on that
report: 0 when its status is ok and 1 otherwise. Invalid inputs exit with 2 and
exhausted numerical resources (term cap, precision) with 3.

Example:
    ```
    contighyp eval 1 1 2 0.5
    contighyp identity-check 3 1 1.5 --shifts 2 0 0
    contighyp telescope 3 1 1.5 0.5 --alpha 2 --beta 0
    contighyp limit-scan 3 1 1.5 --alpha 2 --beta 0 --format csv --out scan.csv
    ```
"""

import functools
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
import mpmath
import structlog
from pydantic import ValidationError

from contighyp.cli.config import COMPLEX, REAL, ComplexLiteral, RunConfig
from contighyp.cli.reports import NumberFormatter, Report, emit
from contighyp.cli.selftest import run_selftest
from contighyp.contiguous import (
    Branch,
    ShiftedParams,
    SymmetricDiffParams,
    evaluate_expansion,
    literal_remainder_discrepancy,
    remainder_closed_form,
    step_residual,
    telescope,
)
from contighyp.exceptions import InvalidParameterError, NumericalResourceError
from contighyp.hyp2f1 import Hyp2F1Params, hyp2f1
from contighyp.kernel import to_real
from contighyp.limits import (
    LimitExperiment,
    LimitReport,
    per_term_limit_check,
    run_limit_scan,
)
from contighyp.settings import settings

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_NUMERIC_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_EXHAUSTED = 3

DEFAULT_Z_GRID = ("0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9")


def exit_code(report: Report) -> int:
    return EXIT_OK if report.summary.get("status") == "ok" else EXIT_NUMERIC_FAILURE


def _status(passed: bool) -> str:  # noqa: FBT001
    return "ok" if passed else "failed"


def eval_report(
    a: ComplexLiteral, b: ComplexLiteral, c: ComplexLiteral, z: str, config: RunConfig
) -> Report:
    """2F1(a, b; c; z) with its method, term count and error estimate."""
    ctx = config.precision()
    fmt = NumberFormatter(config.digits)
    params = Hyp2F1Params.create(a.value(ctx), b.value(ctx), c.value(ctx), z, ctx)
    result = hyp2f1(params, ctx)
    report = Report(
        command="eval",
        config={**config.echo(), "a": str(a), "b": str(b), "c": str(c), "z": z},
        columns=("re", "im", "method", "terms", "est_rel_error"),
    )
    report.add_row(
        *fmt.parts(result.value),
        result.method.value,
        str(result.terms_used),
        fmt.real(result.est_rel_error),
    )
    report.summary["status"] = "ok"
    return report


def identity_report(  # noqa: PLR0913
    a: ComplexLiteral,
    b: ComplexLiteral,
    c: ComplexLiteral,
    shifts: tuple[int, int, int],
    grid: tuple[str, ...],
    config: RunConfig,
) -> Report:
    """Relative residual of the contiguous step at every z of ``grid``."""
    ctx = config.precision()
    fmt = NumberFormatter(config.digits)
    base = ShiftedParams(a.value(ctx), b.value(ctx), c.value(ctx), *shifts)
    threshold = 100 * ctx.tol_rel
    report = Report(
        command="identity-check",
        config={
            **config.echo(),
            "a": str(a),
            "b": str(b),
            "c": str(c),
            "shifts": " ".join(map(str, shifts)),
        },
        columns=("z", "residual", "passed"),
    )
    for index, z in enumerate(grid):
        residual = step_residual(base, z, ctx)
        passed = residual <= threshold
        report.add_row(fmt.real(z), fmt.real(residual), str(passed).lower())
        if not passed:
            report.mark_failure(index)
    report.summary["threshold"] = fmt.real(threshold)
    report.summary["status"] = _status(report.failure is None)
    return report


def _coefficient_form(index: int) -> str:
    if index == 0:
        return "1"
    if index == 1:
        return "z/c"
    factors = "".join(f"(c+{j})" for j in range(1, index))
    return f"z^{index}/(c{factors})"


def telescope_report(  # noqa: PLR0913
    params: tuple[ComplexLiteral, ComplexLiteral, ComplexLiteral],
    z: str,
    alpha: int,
    beta: int,
    which: Branch,
    config: RunConfig,
) -> Report:
    """Every term of one telescoping branch, its remainder, the sum and the left side."""
    ctx = config.precision()
    fmt = NumberFormatter(config.digits)
    a, b, c = params
    d = SymmetricDiffParams.create(a.value(ctx), b.value(ctx), c.value(ctx), alpha, beta, ctx)
    expansion = telescope(d, which, ctx)
    evaluation = evaluate_expansion(expansion, z, ctx)
    threshold = 100 * ctx.tol_rel
    report = Report(
        command="telescope",
        config={
            **config.echo(),
            "a": str(a),
            "b": str(b),
            "c": str(c),
            "z": z,
            "alpha": str(alpha),
            "beta": str(beta),
            "which": which.value,
        },
        columns=(
            "index",
            "form",
            "coefficient_re",
            "coefficient_im",
            "weight_re",
            "weight_im",
            "shifted",
            "value_re",
            "value_im",
        ),
    )
    pieces = [*zip(expansion.terms, evaluation.term_values, strict=True)]
    pieces.append((expansion.remainder, evaluation.remainder_value))
    for term, value in pieces:
        with ctx.workspace():
            coefficient = mpmath.power(to_real(z), term.z_power) / term.denominator
        index = "remainder" if term is expansion.remainder else str(term.index)
        report.add_row(
            index,
            _coefficient_form(term.z_power),
            *fmt.parts(coefficient),
            *fmt.parts(term.weight),
            term.shifted.label(),
            *fmt.parts(value),
        )

    passed = evaluation.relative_residual <= threshold
    sum_re, sum_im = fmt.parts(evaluation.total)
    lhs_re, lhs_im = fmt.parts(evaluation.lhs)
    closed_re, closed_im = fmt.parts(remainder_closed_form(d, ctx))
    report.summary.update(
        {
            "k": str(d.k),
            "sum_re": sum_re,
            "sum_im": sum_im,
            "lhs_re": lhs_re,
            "lhs_im": lhs_im,
            "residual": fmt.real(evaluation.residual),
            "relative_residual": fmt.real(evaluation.relative_residual),
            "threshold": fmt.real(threshold),
            "remainder_weight_re": closed_re,
            "remainder_weight_im": closed_im,
        }
    )
    if d.k >= 1:
        discrepancy = literal_remainder_discrepancy(d, z, ctx)
        report.summary["literal_remainder_discrepancy"] = fmt.real(discrepancy)
    report.summary["status"] = _status(passed)
    return report


def _limit_summary(report: Report, result: LimitReport, fmt: NumberFormatter) -> None:
    for row in result.rows:
        report.add_row(
            fmt.real(row.eps),
            *fmt.parts(row.value),
            *fmt.parts(row.running_extrapolant),
            fmt.real(row.est_error),
        )
    extrapolated_re, extrapolated_im = fmt.parts(result.extrapolated)
    rhs_re, rhs_im = fmt.parts(result.rhs)
    report.summary.update(
        {
            "extrapolated_re": extrapolated_re,
            "extrapolated_im": extrapolated_im,
            "rhs_re": rhs_re,
            "rhs_im": rhs_im,
            "abs_err": fmt.real(result.abs_err),
            "rel_err": fmt.real(result.rel_err),
            "abs_tol": fmt.real(result.abs_tol),
            "fitted_order": "none"
            if result.fitted_order is None
            else fmt.real(result.fitted_order),
            "advisory": str(result.advisory).lower(),
            "converged": str(result.converged).lower(),
            "notes": "; ".join(result.notes),
            "status": _status(result.converged),
        }
    )


def limit_scan_report(  # noqa: PLR0913
    params: tuple[ComplexLiteral, ComplexLiteral, ComplexLiteral],
    alpha: int,
    beta: int,
    config: RunConfig,
    *,
    term: int | None = None,
    which: Branch = Branch.FIRST,
) -> Report:
    """
    The scaled symmetric difference along the eps schedule and its extrapolated limit.

    With ``term`` set, the scan follows that lowered telescoping term of ``which``
    instead and compares with the per-term limit.
    """
    ctx = config.precision()
    fmt = NumberFormatter(config.digits)
    a, b, c = params
    d = SymmetricDiffParams.create(a.value(ctx), b.value(ctx), c.value(ctx), alpha, beta, ctx)
    echo = {
        **config.echo(),
        "a": str(a),
        "b": str(b),
        "c": str(c),
        "alpha": str(alpha),
        "beta": str(beta),
        "points": str(config.extrapolation_points),
        "log_term": str(config.log_term).lower(),
    }
    if term is None:
        experiment = LimitExperiment(
            params=d,
            eps_schedule=config.eps_schedule(),
            ctx=ctx,
            extrapolation_points=config.extrapolation_points,
            log_term=config.log_term,
            integer_s_threshold=settings.integer_s_threshold,
            integer_s_offset=settings.integer_s_offset,
            integer_s_strategy=config.integer_s_strategy,
        )
        result = run_limit_scan(experiment, config.target_rel_err)
    else:
        echo |= {"term": str(term), "which": which.value}
        result = per_term_limit_check(
            d,
            term,
            which,
            config.eps_schedule(),
            ctx,
            target_rel_err=config.target_rel_err,
            extrapolation_points=config.extrapolation_points,
            log_term=config.log_term,
            integer_s_threshold=settings.integer_s_threshold,
            integer_s_offset=settings.integer_s_offset,
            integer_s_strategy=config.integer_s_strategy,
        )
    report = Report(
        command="limit-scan",
        config=echo,
        columns=(
            "eps",
            "re_value",
            "im_value",
            "re_extrapolant",
            "im_extrapolant",
            "est_error",
        ),
    )
    _limit_summary(report, result, fmt)
    return report


def run_options[F: Callable[..., Any]](func: F) -> F:
    """Flags shared by every subcommand; unset flags fall back to the settings."""
    options = [
        click.option("--digits", type=int, default=None, help="Decimal digits of precision"),
        click.option("--term-cap", type=int, default=None, help="Maximum series terms"),
        click.option("--eps-min", type=float, default=None, help="Smallest schedule eps"),
        click.option("--eps-max", type=float, default=None, help="Largest schedule eps"),
        click.option(
            "--target-rel-err", type=float, default=None, help="Limit-scan target relative error"
        ),
        click.option(
            "--format",
            "output_format",
            type=click.Choice(["csv", "json", "pretty"]),
            default=None,
            help="Report format",
        ),
        click.option("--seed", type=int, default=None, help="Seed for randomized suites"),
        click.option(
            "--out",
            type=click.Path(dir_okay=False, writable=True, path_type=Path),
            default=None,
            help="Write the report to this file instead of stdout",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def reports_errors[F: Callable[..., Any]](func: F) -> F:
    """Map contighyp exceptions onto exit codes 2 and 3."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except ValidationError as e:
            errors = "; ".join(str(error["msg"]) for error in e.errors())
            raise click.UsageError(errors) from e
        except InvalidParameterError as e:
            logger.exception("invalid_parameters", error=str(e))
            click.echo(f"error: {e}", err=True)
            click.get_current_context().exit(EXIT_INVALID_INPUT)
        except NumericalResourceError as e:
            logger.exception("numerical_resources_exhausted", error=str(e))
            click.echo(f"error: {e}", err=True)
            click.get_current_context().exit(EXIT_RESOURCE_EXHAUSTED)

    return wrapper  # pyright: ignore [reportReturnType]


def _finish(report: Report, config: RunConfig, out: Path | None) -> None:
    emit(report, config.output_format, out)
    click.get_current_context().exit(exit_code(report))


@click.group()
@click.version_option(package_name="contighyp")
def main() -> None:
    """Configurable-precision experiments on contiguous Gauss hypergeometric functions."""


@main.command("eval")
@click.argument("a", type=COMPLEX)
@click.argument("b", type=COMPLEX)
@click.argument("c", type=COMPLEX)
@click.argument("z", type=REAL)
@run_options
@reports_errors
def eval_command(
    a: ComplexLiteral,
    b: ComplexLiteral,
    c: ComplexLiteral,
    z: str,
    out: Path | None,
    **options: Any,
) -> None:
    """Evaluate 2F1(A, B; C; Z) for 0 <= Z < 1."""
    config = RunConfig.from_options(**options)
    _finish(eval_report(a, b, c, z, config), config, out)


@main.command("identity-check")
@click.argument("a", type=COMPLEX)
@click.argument("b", type=COMPLEX)
@click.argument("c", type=COMPLEX)
@click.option(
    "--shifts",
    nargs=3,
    type=int,
    default=(1, 0, 0),
    show_default=True,
    help="alpha beta gamma",
)
@click.option("--z", "grid", type=REAL, multiple=True, help="Grid point (repeatable)")
@run_options
@reports_errors
def identity_check_command(  # noqa: PLR0913
    a: ComplexLiteral,
    b: ComplexLiteral,
    c: ComplexLiteral,
    shifts: tuple[int, int, int],
    grid: tuple[str, ...],
    out: Path | None,
    **options: Any,
) -> None:
    """Check the contiguous step identity for shifts ALPHA BETA GAMMA on a grid of z."""
    config = RunConfig.from_options(**options)
    report = identity_report(a, b, c, shifts, grid or DEFAULT_Z_GRID, config)
    _finish(report, config, out)


@main.command("telescope")
@click.argument("a", type=COMPLEX)
@click.argument("b", type=COMPLEX)
@click.argument("c", type=COMPLEX)
@click.argument("z", type=REAL)
@click.option("--alpha", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--beta", type=click.IntRange(min=0), default=0, show_default=True)
@click.option(
    "--which", type=click.Choice([b.value for b in Branch]), default="first", show_default=True
)
@run_options
@reports_errors
def telescope_command(  # noqa: PLR0913
    a: ComplexLiteral,
    b: ComplexLiteral,
    c: ComplexLiteral,
    z: str,
    alpha: int,
    beta: int,
    which: str,
    out: Path | None,
    **options: Any,
) -> None:
    """Expand one branch of the symmetric difference by k = A - B contiguous steps."""
    config = RunConfig.from_options(**options)
    report = telescope_report((a, b, c), z, alpha, beta, Branch(which), config)
    _finish(report, config, out)


@main.command("limit-scan")
@click.argument("a", type=COMPLEX)
@click.argument("b", type=COMPLEX)
@click.argument("c", type=COMPLEX)
@click.option("--alpha", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--beta", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--points", "extrapolation_points", type=int, default=None)
@click.option("--log-term/--no-log-term", default=None, help="Add an eps*log(eps) basis term")
@click.option(
    "--integer-s-strategy", type=click.Choice(["perturb", "direct"]), default=None
)
@click.option("--term", type=click.IntRange(min=0), default=None, help="Scan one lowered term")
@click.option(
    "--which", type=click.Choice([b.value for b in Branch]), default="first", show_default=True
)
@run_options
@reports_errors
def limit_scan_command(  # noqa: PLR0913
    a: ComplexLiteral,
    b: ComplexLiteral,
    c: ComplexLiteral,
    alpha: int,
    beta: int,
    term: int | None,
    which: str,
    out: Path | None,
    **options: Any,
) -> None:
    """Scale D(z) by (1-z)**s, drive z -> 1 and compare the limit with its closed form."""
    config = RunConfig.from_options(**options)
    report = limit_scan_report(
        (a, b, c), alpha, beta, config, term=term, which=Branch(which)
    )
    _finish(report, config, out)


@main.command("selftest")
@click.option("--cases", type=click.IntRange(min=1), default=10, show_default=True)
@run_options
@reports_errors
def selftest_command(cases: int, out: Path | None, **options: Any) -> None:
    """Run the closed-form, identity, telescoping, remainder and cross-method suites."""
    config = RunConfig.from_options(**options)
    _finish(run_selftest(config, cases), config, out)

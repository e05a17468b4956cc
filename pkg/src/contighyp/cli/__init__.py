from .commands import (
    EXIT_INVALID_INPUT,
    EXIT_NUMERIC_FAILURE,
    EXIT_OK,
    EXIT_RESOURCE_EXHAUSTED,
    eval_report,
    exit_code,
    identity_report,
    limit_scan_report,
    main,
    telescope_report,
)
from .config import ComplexLiteral, RunConfig, parse_complex, parse_real
from .reports import NumberFormatter, Report, parse_csv, render
from .selftest import CheckResult, run_checks, run_selftest

__all__ = [
    "EXIT_INVALID_INPUT",
    "EXIT_NUMERIC_FAILURE",
    "EXIT_OK",
    "EXIT_RESOURCE_EXHAUSTED",
    "CheckResult",
    "ComplexLiteral",
    "NumberFormatter",
    "Report",
    "RunConfig",
    "eval_report",
    "exit_code",
    "identity_report",
    "limit_scan_report",
    "main",
    "parse_complex",
    "parse_csv",
    "parse_real",
    "render",
    "run_checks",
    "run_selftest",
    "telescope_report",
]

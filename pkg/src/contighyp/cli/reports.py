"""
Report rendering for the command line and the HTTP surface.

A ``Report`` is a table of string cells plus the config echo and a summary. All
numerals are formatted before they reach the report, so the CSV, JSON and pretty
renderings carry exactly the same text and a CSV file parses back into an equal
report.

CSV layout:

    # command=limit-scan
    # digits=60
    eps,re_value,...
    6.25e-2,...
    # result: extrapolated_re=...
    # result: converged=true
"""

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal

import click
import mpmath

from contighyp.kernel import format_number

type OutputFormat = Literal["csv", "json", "pretty"]

_RESULT_PREFIX = "# result:"
_FAILURE_PREFIX = "# first failure:"


@dataclass
class Report:
    """
    Tabular outcome of one subcommand.

    Attributes:
        command (str): Subcommand name
        config (dict[str, str]): Echo of the run configuration
        columns (tuple[str, ...]): Column names
        rows (list[tuple[str, ...]]): Formatted cells, one tuple per row
        summary (dict[str, str]): Final result fields
        failure (int | None): Index of the first failing row, if any
    """

    command: str
    config: dict[str, str]
    columns: tuple[str, ...]
    rows: list[tuple[str, ...]] = field(default_factory=list)
    summary: dict[str, str] = field(default_factory=dict)
    failure: int | None = None

    def add_row(self, *cells: str) -> None:
        if len(cells) != len(self.columns):
            msg = f"row has {len(cells)} cells, expected {len(self.columns)}"
            raise ValueError(msg)
        self.rows.append(cells)

    def mark_failure(self, index: int) -> None:
        if self.failure is None:
            self.failure = index

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "config": dict(self.config),
            "columns": list(self.columns),
            "rows": [dict(zip(self.columns, row, strict=True)) for row in self.rows],
            "summary": dict(self.summary),
            "first_failure": self.failure,
        }


class NumberFormatter:
    """Formats extended-precision values with ``digits`` significant figures."""

    def __init__(self, digits: int) -> None:
        self.digits = digits

    def real(self, value: Any) -> str:
        return format_number(value, self.digits)

    def parts(self, value: Any) -> tuple[str, str]:
        """Real and imaginary part of ``value``."""
        with mpmath.workdps(self.digits + 5):
            number = mpmath.mpc(value)
        return self.real(number.real), self.real(number.imag)


def render_csv(report: Report) -> str:
    buffer = io.StringIO()
    buffer.write(f"# command={report.command}\n")
    for key, value in report.config.items():
        buffer.write(f"# {key}={value}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(report.columns)
    writer.writerows(report.rows)
    if report.failure is not None:
        buffer.write(f"{_FAILURE_PREFIX} {report.failure}\n")
    for key, value in report.summary.items():
        buffer.write(f"{_RESULT_PREFIX} {key}={value}\n")
    return buffer.getvalue()


def parse_csv(text: str) -> Report:
    """Read a report back from its CSV rendering."""
    config: dict[str, str] = {}
    summary: dict[str, str] = {}
    command = ""
    failure: int | None = None
    data: list[str] = []
    for line in text.splitlines():
        if line.startswith(_RESULT_PREFIX):
            key, _, value = line.removeprefix(_RESULT_PREFIX).strip().partition("=")
            summary[key] = value
        elif line.startswith(_FAILURE_PREFIX):
            failure = int(line.removeprefix(_FAILURE_PREFIX))
        elif line.startswith("# "):
            key, _, value = line[2:].partition("=")
            if key == "command":
                command = value
            else:
                config[key] = value
        else:
            data.append(line)
    records = list(csv.reader(data))
    if not records:
        msg = "CSV report has no header row"
        raise ValueError(msg)
    return Report(
        command=command,
        config=config,
        columns=tuple(records[0]),
        rows=[tuple(record) for record in records[1:]],
        summary=summary,
        failure=failure,
    )


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def render_pretty(report: Report) -> str:
    widths = [len(name) for name in report.columns]
    for row in report.rows:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row, strict=True)]
    lines = [f"{report.command}: " + ", ".join(f"{k}={v}" for k, v in report.config.items())]
    header = zip(report.columns, widths, strict=True)
    lines.append("  ".join(name.ljust(width) for name, width in header))
    for index, row in enumerate(report.rows):
        line = "  ".join(cell.ljust(width) for cell, width in zip(row, widths, strict=True))
        if index == report.failure:
            line = click.style(f"{line}  <-- first failure", fg="red", bold=True)
        lines.append(line)
    lines.extend(f"{key} = {value}" for key, value in report.summary.items())
    return "\n".join(lines) + "\n"


def render(report: Report, output_format: OutputFormat) -> str:
    match output_format:
        case "csv":
            return render_csv(report)
        case "json":
            return render_json(report)
        case "pretty":
            return render_pretty(report)


def emit(report: Report, output_format: OutputFormat, out: Path | None = None) -> None:
    """Write the rendered report to ``out`` or stdout."""
    text = render(report, output_format)
    if out is None:
        click.echo(text, nl=False)
        return
    out.write_text(click.unstyle(text), encoding="utf-8")

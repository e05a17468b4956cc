"""
Run configuration and argument parsing for the command line.

``RunConfig`` validates the flags shared by every subcommand and falls back to
the process settings for anything not given. Complex parameters are passed as
decimal literals ("x", "xi", "x+yi" or "x-yi") and only converted to
extended-precision numbers once the working precision is known.
"""

import re
from typing import Any, Literal, NamedTuple, Self

import click
import mpmath
from pydantic import BaseModel, ConfigDict, Field, model_validator

from contighyp.kernel import MIN_DIGITS, PrecisionContext
from contighyp.limits import EPS_CEILING, IntegerExponentStrategy, halving_schedule
from contighyp.settings import settings

_REAL = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_UNSIGNED = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_ONLY = re.compile(rf"^(?P<re>{_REAL})$")
_IMAG_ONLY = re.compile(rf"^(?P<im>{_REAL})i$")
_FULL = re.compile(rf"^(?P<re>{_REAL})(?P<sign>[+-])(?P<im>{_UNSIGNED})i$")


class ComplexLiteral(NamedTuple):
    """A parsed complex literal, kept as decimal text until a precision is chosen."""

    real: str
    imag: str

    def value(self, ctx: PrecisionContext) -> mpmath.mpc:
        with ctx.workspace():
            return mpmath.mpc(mpmath.mpf(self.real), mpmath.mpf(self.imag))

    def __str__(self) -> str:
        if self.imag == "0":
            return self.real
        sign = "" if self.imag.startswith("-") else "+"
        return f"{self.real}{sign}{self.imag}i"


def parse_complex(text: str) -> ComplexLiteral:
    """
    Parse "x", "xi", "x+yi" or "x-yi" with decimal reals x and y.

    Raises:
        ValueError: If ``text`` does not follow the grammar
    """
    literal = text.strip().replace(" ", "")
    if match := _REAL_ONLY.match(literal):
        return ComplexLiteral(match["re"], "0")
    if match := _IMAG_ONLY.match(literal):
        return ComplexLiteral("0", match["im"])
    if match := _FULL.match(literal):
        imag = match["im"] if match["sign"] == "+" else f"-{match['im']}"
        return ComplexLiteral(match["re"], imag)
    msg = f"{text!r} is not a complex literal of the form x, xi, x+yi or x-yi"
    raise ValueError(msg)


def parse_real(text: str) -> str:
    """Validate a decimal real literal and return it unchanged."""
    literal = text.strip()
    if not _REAL_ONLY.match(literal):
        msg = f"{text!r} is not a decimal real literal"
        raise ValueError(msg)
    return literal


class ComplexParamType(click.ParamType):
    name = "complex"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> ComplexLiteral:
        if isinstance(value, ComplexLiteral):
            return value
        try:
            return parse_complex(str(value))
        except ValueError as e:
            self.fail(str(e), param, ctx)


class RealParamType(click.ParamType):
    name = "real"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> str:
        try:
            return parse_real(str(value))
        except ValueError as e:
            self.fail(str(e), param, ctx)


COMPLEX = ComplexParamType()
REAL = RealParamType()


class RunConfig(BaseModel):
    """
    Validated flags shared by the subcommands.

    Attributes:
        digits (int): Decimal digits of working precision
        term_cap (int): Maximum number of series terms
        eps_min (float): Smallest eps of the limit-scan schedule
        eps_max (float): Largest eps of the limit-scan schedule
        target_rel_err (float): Relative error a limit scan must reach
        output_format (str): One of csv, json, pretty
        seed (int): Seed for randomized suites
    """

    model_config = ConfigDict(frozen=True)

    digits: int = Field(default_factory=lambda: settings.digits, ge=MIN_DIGITS)
    term_cap: int = Field(default_factory=lambda: settings.term_cap, ge=1)
    eps_min: float = Field(default_factory=lambda: settings.eps_min, gt=0)
    eps_max: float = Field(default_factory=lambda: settings.eps_max)
    target_rel_err: float = Field(default_factory=lambda: settings.target_rel_err, gt=0)
    output_format: Literal["csv", "json", "pretty"] = Field(
        default_factory=lambda: settings.output_format
    )
    seed: int = Field(default_factory=lambda: settings.seed, ge=0)
    extrapolation_points: int = Field(
        default_factory=lambda: settings.extrapolation_points, ge=1
    )
    log_term: bool = Field(default_factory=lambda: settings.extrapolation_log_term)
    integer_s_strategy: IntegerExponentStrategy = Field(
        default_factory=lambda: IntegerExponentStrategy(settings.integer_s_strategy)
    )

    @model_validator(mode="after")
    def check_schedule(self) -> Self:
        if not self.eps_min < self.eps_max < EPS_CEILING:
            msg = "eps_min < eps_max < 1/2 violated"
            raise ValueError(msg)
        return self

    @classmethod
    def from_options(cls, **options: Any) -> "RunConfig":
        """Build from click options, leaving unset (None) flags to the settings."""
        return cls(**{key: value for key, value in options.items() if value is not None})

    def precision(self) -> PrecisionContext:
        return PrecisionContext(
            digits=self.digits,
            guard=settings.guard_digits,
            extra_digits=settings.extra_digits,
            term_cap=self.term_cap,
            max_digits=settings.max_digits,
        )

    def eps_schedule(self) -> tuple[mpmath.mpf, ...]:
        return halving_schedule(self.eps_max, self.eps_min)

    def echo(self) -> dict[str, str]:
        """Config values written into report headers."""
        return {
            "digits": str(self.digits),
            "term_cap": str(self.term_cap),
            "eps_min": repr(self.eps_min),
            "eps_max": repr(self.eps_max),
            "target_rel_err": repr(self.target_rel_err),
            "seed": str(self.seed),
        }

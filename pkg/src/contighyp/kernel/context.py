"""
Precision Context Module

Every extended-precision computation in contighyp runs inside a
``PrecisionContext``. The context fixes the advertised number of decimal digits,
derives the relative tolerance the results are held to, and carries the internal
guard digits used to absorb rounding and cancellation.

Example:
    ```python
    ctx = PrecisionContext(digits=80)
    with ctx.workspace():
        value = mpmath.mpf(1) / 3
    ```
"""

from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, replace

import mpmath

from contighyp.exceptions import DomainError, PrecisionExhaustedError

MIN_DIGITS = 30


@dataclass(frozen=True)
class PrecisionContext:
    """
    Working precision and derived tolerances.

    Attributes:
        digits (int): Decimal digits of working precision (at least 30)
        guard (int): Guard digits; ``tol_rel = 10**-(digits - guard)``
        extra_digits (int): Digits carried internally on top of ``digits``
        term_cap (int): Maximum number of terms any series may sum
        max_digits (int): Ceiling for ``raised``/``widened`` contexts
    """

    digits: int = 60
    guard: int = 5
    extra_digits: int = 20
    term_cap: int = 10_000_000
    max_digits: int = 2000

    def __post_init__(self) -> None:
        if self.digits < MIN_DIGITS:
            msg = f"digits must be at least {MIN_DIGITS}, got {self.digits}"
            raise DomainError(msg)
        if not 0 < self.guard < self.digits:
            msg = f"guard must lie in (0, digits), got {self.guard}"
            raise DomainError(msg)
        if self.extra_digits <= self.guard:
            msg = "extra_digits must exceed guard"
            raise DomainError(msg)
        if self.term_cap < 1:
            msg = "term_cap must be positive"
            raise DomainError(msg)
        if self.working_dps > self.max_digits:
            msg = f"{self.working_dps} working digits exceed max_digits={self.max_digits}"
            raise PrecisionExhaustedError(msg)

    @property
    def working_dps(self) -> int:
        return self.digits + self.extra_digits

    @property
    def tol_rel(self) -> mpmath.mpf:
        """Relative tolerance every public result is held to."""
        return mpmath.mpf(10) ** (self.guard - self.digits)

    @property
    def series_tol(self) -> mpmath.mpf:
        """Stopping tolerance for summations; also the floor of error estimates."""
        return mpmath.mpf(10) ** (-self.digits - self.guard)

    @property
    def cancellation_budget(self) -> int:
        """Digits that may be lost to cancellation before a computation is widened."""
        return self.extra_digits - self.guard

    @contextmanager
    def workspace(self) -> Iterator[None]:
        with mpmath.workdps(self.working_dps):
            yield

    def raised(self, extra: int) -> "PrecisionContext":
        """A context with a stricter contract: ``digits + extra`` digits."""
        return replace(self, digits=self.digits + max(extra, 0))

    def widened(self, extra: int) -> "PrecisionContext":
        """Same contract, ``extra`` more internal digits."""
        return replace(self, extra_digits=self.extra_digits + max(extra, 0))

    def with_term_cap(self, term_cap: int) -> "PrecisionContext":
        return replace(self, term_cap=term_cap)

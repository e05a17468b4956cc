"""
Settings Configuration Module

This module defines the configuration settings for contighyp using Pydantic's
BaseSettings. It provides the default working precision, series limits, limit-scan
schedule and output options shared by the CLI and the HTTP surface.

The settings can be overridden by environment variables prefixed with
``CONTIGHYP_`` (for example ``CONTIGHYP_DIGITS=80``) or through a .env file.
Environment variables take precedence over values defined in the .env file.
"""

import logging
import sys
from typing import Literal

import structlog
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = structlog.get_logger(__name__)


class Settings(BaseSettings):
    """
    Application settings model that provides configuration for all components.
    """

    # Decimal digits of working precision
    digits: int = 60
    # Guard digits between the working precision and the advertised tolerance
    guard_digits: int = 5
    # Internal digits carried on top of the working precision
    extra_digits: int = 20
    # Ceiling for automatic precision raising
    max_digits: int = 2000
    # Maximum number of series terms before giving up
    term_cap: int = 10_000_000
    # Limit-scan schedule bounds (halving from eps_max down to eps_min)
    eps_min: float = 2.0**-22
    eps_max: float = 2.0**-4
    # Relative error a limit scan must reach to count as converged
    target_rel_err: float = 1e-6
    # Number of trailing schedule points used by the extrapolation
    extrapolation_points: int = 6
    # Add an eps*log(eps) basis function to the extrapolation
    extrapolation_log_term: bool = False
    # Distance below which the exponent s counts as an integer
    integer_s_threshold: float = 1e-6
    # Real offset added to c when an integer exponent is perturbed away
    integer_s_offset: float = 1e-3
    # How the limit scan handles an integer exponent
    integer_s_strategy: Literal["perturb", "direct"] = "perturb"
    # Default report format for the CLI
    output_format: Literal["csv", "json", "pretty"] = "pretty"
    # Seed for randomized property suites
    seed: int = 0
    # Minimum level written to stderr
    log_level: str = "WARNING"
    # API version to use at the backend
    api_version: str = "v1"
    # Restrict backend listener to specific origins
    cors_origins: list[str] = ["*"]

    model_config = SettingsConfigDict(
        env_prefix="CONTIGHYP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


def configure_logging(level: str) -> None:
    """
    Route structlog output to stderr, filtered at ``level``.

    Reports are written to stdout, so log lines must never share that stream.
    """
    structlog.configure(
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelNamesMapping().get(level.upper(), logging.WARNING)
        ),
        logger_factory=structlog.PrintLoggerFactory(sys.stderr),
    )


# Create a global settings instance
settings = Settings()
configure_logging(settings.log_level)
logger.debug("settings", settings=settings.model_dump())

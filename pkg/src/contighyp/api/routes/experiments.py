"""
Experiment Router Module

This module exposes function evaluation and limit scans over HTTP. Responses are
the same documents ``contighyp ... --format json`` prints, so a client can switch
between the command line and the service without changing its parser.

mpmath keeps its working precision in process-wide state, so reports are built one
at a time: each request takes the router lock and then runs in the thread pool,
which leaves the event loop free while a long scan is in progress.
"""

import asyncio
from collections.abc import Callable
from typing import Any, Literal

import structlog
from fastapi import APIRouter, HTTPException
from fastapi.concurrency import run_in_threadpool
from pydantic import BaseModel, Field, ValidationError

from contighyp.cli.commands import eval_report, limit_scan_report
from contighyp.cli.config import ComplexLiteral, RunConfig, parse_complex, parse_real
from contighyp.contiguous import Branch
from contighyp.exceptions import InvalidParameterError, NumericalResourceError

logger = structlog.get_logger(__name__)


class RunOptions(BaseModel):
    """
    Optional overrides of the run configuration; unset fields use the settings.

    Attributes:
        digits (int, optional): Decimal digits of working precision
        term_cap (int, optional): Maximum number of series terms
        eps_min (float, optional): Smallest eps of the limit-scan schedule
        eps_max (float, optional): Largest eps of the limit-scan schedule
        target_rel_err (float, optional): Relative error a limit scan must reach
    """

    digits: int | None = None
    term_cap: int | None = None
    eps_min: float | None = None
    eps_max: float | None = None
    target_rel_err: float | None = None
    extrapolation_points: int | None = None
    log_term: bool | None = None
    integer_s_strategy: Literal["perturb", "direct"] | None = None

    def config(self) -> RunConfig:
        fields = set(RunOptions.model_fields)
        return RunConfig.from_options(**self.model_dump(include=fields), output_format="json")


class EvalRequest(RunOptions):
    """
    Pydantic model for an evaluation request.

    Attributes:
        a (str): Complex literal "x", "xi" or "x+yi"
        b (str): Complex literal
        c (str): Complex literal
        z (str): Decimal real in [0, 1)
    """

    a: str = Field(..., min_length=1)
    b: str = Field(..., min_length=1)
    c: str = Field(..., min_length=1)
    z: str = Field(..., min_length=1)


class LimitScanRequest(RunOptions):
    """
    Pydantic model for a limit-scan request.

    Attributes:
        a (str): Complex literal, a - b a natural number
        b (str): Complex literal
        c (str): Complex literal
        alpha (int): First shift
        beta (int): Second shift
        term (int, optional): Scan this lowered telescoping term instead of D(z)
        which (str): Branch of ``term``
    """

    a: str = Field(..., min_length=1)
    b: str = Field(..., min_length=1)
    c: str = Field(..., min_length=1)
    alpha: int = Field(1, ge=0)
    beta: int = Field(0, ge=0)
    term: int | None = Field(None, ge=0)
    which: Literal["first", "second"] = "first"


def _literals(*texts: str) -> tuple[ComplexLiteral, ...]:
    try:
        return tuple(parse_complex(text) for text in texts)
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e)) from e


class ExperimentRouter:
    """
    Router class for the experiment endpoints.

    Attributes:
        logger (BoundLogger): Structured logger for the experiment router
        lock (asyncio.Lock): Serializes report builds across requests
    """

    def __init__(self) -> None:
        self._router = APIRouter()
        self.logger = logger.bind(router="experiments")
        self.lock = asyncio.Lock()
        self._setup_routes()

    def _setup_routes(self) -> None:
        """
        Set up FastAPI routes for the experiment endpoints.
        """

        @self._router.post("/eval")
        async def evaluate(request: EvalRequest) -> dict[str, Any]:  # pyright: ignore [reportUnusedFunction]
            """
            Evaluate 2F1(a, b; c; z).

            Raises:
                HTTPException: 422 for invalid parameters, 503 when resources run out
            """
            a, b, c = _literals(request.a, request.b, request.c)
            try:
                z = parse_real(request.z)
            except ValueError as e:
                raise HTTPException(status_code=422, detail=str(e)) from e
            self.logger.debug("eval_request", a=str(a), b=str(b), c=str(c), z=z)
            return await self.run(
                lambda config: eval_report(a, b, c, z, config).to_dict(), request
            )

        @self._router.post("/limit-scan")
        async def limit_scan(request: LimitScanRequest) -> dict[str, Any]:  # pyright: ignore [reportUnusedFunction]
            """
            Run a limit scan of the scaled symmetric difference.

            Raises:
                HTTPException: 422 for invalid parameters, 503 when resources run out
            """
            a, b, c = _literals(request.a, request.b, request.c)
            self.logger.debug("limit_scan_request", alpha=request.alpha, beta=request.beta)
            return await self.run(
                lambda config: limit_scan_report(
                    (a, b, c),
                    request.alpha,
                    request.beta,
                    config,
                    term=request.term,
                    which=Branch(request.which),
                ).to_dict(),
                request,
            )

    @property
    def router(self) -> APIRouter:
        """Get the FastAPI router with registered routes."""
        return self._router

    async def run(
        self, build: Callable[[RunConfig], dict[str, Any]], options: RunOptions
    ) -> dict[str, Any]:
        """
        Build a report document, mapping contighyp errors onto HTTP status codes.

        Raises:
            HTTPException: 422 for invalid configuration or parameters, 503 when a
                series or the precision budget runs out
        """
        try:
            config = options.config()
            async with self.lock:
                return await run_in_threadpool(build, config)
        except ValidationError as e:
            self.logger.exception("invalid_config", error=str(e))
            raise HTTPException(status_code=422, detail=str(e)) from e
        except InvalidParameterError as e:
            self.logger.exception("invalid_parameters", error=str(e))
            raise HTTPException(status_code=422, detail=str(e)) from e
        except NumericalResourceError as e:
            self.logger.exception("numerical_resources_exhausted", error=str(e))
            raise HTTPException(status_code=503, detail=str(e)) from e

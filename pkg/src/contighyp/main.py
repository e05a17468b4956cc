"""
Experiment API Main Application Module

This module initializes the FastAPI application that serves contighyp
evaluations and limit scans over HTTP. It sets up CORS middleware and registers
the experiment routes.

Dependencies:
    - FastAPI for the web framework
    - Structlog for structured logging
    - CORS middleware for cross-origin resource sharing
"""

import structlog
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from contighyp.api import ExperimentRouter
from contighyp.settings import settings

logger = structlog.get_logger(__name__)


def create_app() -> FastAPI:
    """
    Create and configure the FastAPI application instance.

    Returns:
        FastAPI: Application with CORS configured from the settings and the
        experiment routes mounted under ``/api/routes/experiments``
    """
    app = FastAPI(title="contighyp API", version=settings.api_version, redirect_slashes=False)

    app.add_middleware(
        CORSMiddleware,
        allow_origins=settings.cors_origins,
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    experiments = ExperimentRouter()
    app.include_router(
        experiments.router, prefix="/api/routes/experiments", tags=["experiments"]
    )
    logger.debug("app_created", version=settings.api_version)
    return app


app = create_app()


def start() -> None:
    """
    Start the FastAPI application server using uvicorn on 0.0.0.0:8080.
    """
    import uvicorn

    uvicorn.run(app, host="0.0.0.0", port=8080)  # noqa: S104


if __name__ == "__main__":
    start()

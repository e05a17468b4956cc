from .routes.experiments import EvalRequest, ExperimentRouter, LimitScanRequest, RunOptions

__all__ = ["EvalRequest", "ExperimentRouter", "LimitScanRequest", "RunOptions"]

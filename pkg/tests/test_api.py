import asyncio
import threading
import time

import pytest
from fastapi.testclient import TestClient

from contighyp.api import EvalRequest, ExperimentRouter, RunOptions
from contighyp.cli import RunConfig
from contighyp.main import create_app

EVAL = "/api/routes/experiments/eval"
LIMIT_SCAN = "/api/routes/experiments/limit-scan"


@pytest.fixture
def client() -> TestClient:
    return TestClient(create_app())


def test_run_options_forces_json() -> None:
    config = EvalRequest(a="1", b="1", c="2", z="0.5", digits=40).config()
    assert config.digits == 40
    assert config.output_format == "json"
    assert RunOptions().config().digits == 60


def test_eval(client: TestClient) -> None:
    response = client.post(EVAL, json={"a": "1", "b": "1", "c": "2", "z": "0.5", "digits": 30})
    assert response.status_code == 200
    document = response.json()
    assert document["command"] == "eval"
    assert document["rows"][0]["re"].startswith("1.3862943611")
    assert document["summary"]["status"] == "ok"


def test_eval_complex(client: TestClient) -> None:
    response = client.post(
        EVAL, json={"a": "1.5+2i", "b": "0.5", "c": "2.5-1i", "z": "0.8", "digits": 30}
    )
    assert response.status_code == 200
    assert response.json()["rows"][0]["method"] == "NearOneConnection"


@pytest.mark.parametrize(
    "body",
    [
        {"a": "1+", "b": "1", "c": "2", "z": "0.5"},
        {"a": "1", "b": "1", "c": "2", "z": "half"},
        {"a": "1", "b": "1", "c": "0", "z": "0.5", "digits": 30},
        {"a": "1", "b": "1", "c": "2", "z": "1", "digits": 30},
        {"a": "1", "b": "1", "c": "2", "z": "0.5", "digits": 20},
        {"a": "1", "b": "1", "c": "2"},
    ],
)
def test_eval_invalid_input(client: TestClient, body: dict[str, object]) -> None:
    assert client.post(EVAL, json=body).status_code == 422


def test_eval_term_cap_exhausted(client: TestClient) -> None:
    body = {"a": "1", "b": "1", "c": "2", "z": "0.5", "digits": 30, "term_cap": 5}
    response = client.post(EVAL, json=body)
    assert response.status_code == 503
    assert "term_cap=5" in response.json()["detail"]


def test_limit_scan(client: TestClient) -> None:
    body = {"a": "3", "b": "1", "c": "1.5", "alpha": 2, "beta": 0, "digits": 30}
    response = client.post(LIMIT_SCAN, json=body)
    assert response.status_code == 200
    summary = response.json()["summary"]
    assert summary["converged"] == "true"
    assert summary["rhs_re"].startswith("5.890486225")


def test_limit_scan_hypothesis_violation(client: TestClient) -> None:
    body = {"a": "2", "b": "1", "c": "3", "alpha": 1, "beta": 0, "digits": 30}
    response = client.post(LIMIT_SCAN, json=body)
    assert response.status_code == 422
    assert "hypothesis" in response.json()["detail"]


def test_limit_scan_rejects_negative_shift(client: TestClient) -> None:
    body = {"a": "3", "b": "1", "c": "1.5", "alpha": -1}
    assert client.post(LIMIT_SCAN, json=body).status_code == 422


def test_reports_are_built_one_at_a_time_off_the_event_loop() -> None:
    router = ExperimentRouter()
    threads: list[int] = []
    active = 0

    def build(config: RunConfig) -> dict[str, int]:
        nonlocal active
        active += 1
        assert active == 1
        threads.append(threading.get_ident())
        time.sleep(0.01)
        active -= 1
        return {"digits": config.digits}

    async def submit() -> tuple[int, list[dict[str, int]]]:
        loop_thread = threading.get_ident()
        documents = await asyncio.gather(
            router.run(build, RunOptions(digits=30)), router.run(build, RunOptions(digits=40))
        )
        return loop_thread, list(documents)

    loop_thread, documents = asyncio.run(submit())
    assert documents == [{"digits": 30}, {"digits": 40}]
    assert len(threads) == 2
    assert loop_thread not in threads
    assert not router.lock.locked()

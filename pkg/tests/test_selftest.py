import random
from collections import Counter

import pytest

from contighyp.cli.selftest import (
    CheckResult,
    closed_form_checks,
    cross_method_checks,
    remainder_checks,
    run_checks,
    step_identity_checks,
    telescoping_checks,
)
from contighyp.kernel import PrecisionContext

SEED = 2026


@pytest.fixture
def suite_ctx() -> PrecisionContext:
    return PrecisionContext(digits=30)


def _failures(results: list[CheckResult]) -> list[str]:
    return [f"{r.case}: {r.metric} > {r.threshold}" for r in results if not r.passed]


def test_closed_form_suite(suite_ctx: PrecisionContext) -> None:
    results = closed_form_checks(suite_ctx)
    assert len(results) == 27
    assert not _failures(results)


def test_step_identity_on_two_hundred_sets(suite_ctx: PrecisionContext) -> None:
    results = step_identity_checks(suite_ctx, random.Random(SEED), 200)
    assert len(results) == 200
    assert not _failures(results)


def test_telescoping_fifty_sets_per_k(suite_ctx: PrecisionContext) -> None:
    results = telescoping_checks(suite_ctx, random.Random(SEED), 200)
    # three z points per drawn set
    assert len(results) == 600
    assert not _failures(results)


def test_remainders_agree_for_k_up_to_three(suite_ctx: PrecisionContext) -> None:
    results = remainder_checks(suite_ctx, random.Random(SEED), 60)
    assert len(results) == 60
    assert not _failures(results)


def test_cross_method_on_one_hundred_sets(suite_ctx: PrecisionContext) -> None:
    results = cross_method_checks(suite_ctx, random.Random(SEED), 100)
    assert len(results) == 100
    assert not _failures(results)


def test_run_checks_covers_every_suite(suite_ctx: PrecisionContext) -> None:
    results = run_checks(suite_ctx, SEED, 20)
    counts = Counter(result.suite for result in results)
    assert counts == {
        "closed-form": 27,
        "step-identity": 20,
        "telescoping": 60,
        "remainder": 20,
        "cross-method": 20,
    }
    assert all(result.passed for result in results)
    assert run_checks(suite_ctx, SEED, 20) == results

import mpmath
import pytest

from contighyp.contiguous import SymmetricDiffParams
from contighyp.kernel import PrecisionContext


@pytest.fixture
def ctx() -> PrecisionContext:
    return PrecisionContext(digits=60)


@pytest.fixture
def loose_ctx() -> PrecisionContext:
    return PrecisionContext(digits=30)


@pytest.fixture
def theorem_params(ctx: PrecisionContext) -> SymmetricDiffParams:
    return SymmetricDiffParams.create(3, 1, "1.5", 2, 0, ctx)


@pytest.fixture
def theorem_limit() -> mpmath.mpf:
    with mpmath.workdps(40):
        return mpmath.mpf("1.875") * mpmath.pi

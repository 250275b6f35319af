import pytest

from bubblelab.core import ModelParams
from bubblelab.bubble import quotient_scaling_check
from bubblelab.bubble import quotient_scaling_deviations
from bubblelab.utils import ScalingViolation
from bubblelab.utils import InvalidParams
from bubblelab.utils import InsufficientData


@pytest.fixture()
def params():
    return ModelParams(n=6, ell=1.0, Q=24.0)


def test_quotient_scaling(params):
    fit = quotient_scaling_check([1.0, 0.5, 0.25], params)
    assert fit.slope == pytest.approx(-1.0, abs=1e-2)


def test_quotient_scaling_deviation(params):
    sups, deviation = quotient_scaling_deviations([1.0, 0.5], params)
    assert sups[1] == pytest.approx(2.0 * sups[0], rel=1e-3)
    assert deviation <= 1e-3


def test_quotient_scaling_exception(params):
    with pytest.raises(ScalingViolation):
        quotient_scaling_check([1.0, 0.5], params, tol=0.0)
    with pytest.raises(InvalidParams):
        quotient_scaling_check([1.0, -0.5], params)
    with pytest.raises(InsufficientData):
        quotient_scaling_check([1.0], params)

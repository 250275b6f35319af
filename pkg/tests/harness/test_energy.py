import numpy as np
import pytest

from bubblelab.core import make_grid
from bubblelab.core import ModelParams
from bubblelab.core import RadialField
from bubblelab.core import Tail
from bubblelab.bubble import BubbleSpec
from bubblelab.bubble import bubble_profile
from bubblelab.solver import manufacture_potential
from bubblelab.harness import energy_terms
from bubblelab.harness import energy_identity_gap
from bubblelab.harness import nonlocal_residual
from bubblelab.cli.experiments import zero_potential_gap
from bubblelab.utils import DivergentIntegral


@pytest.fixture(scope='module')
def params():
    return ModelParams(n=6, ell=1.0, Q=24.0)


@pytest.fixture(scope='module')
def bubble(params):
    return bubble_profile(BubbleSpec.from_params(params), make_grid(40.0, 800, 'geometric'))


def test_zero_field():
    g = make_grid(5.0, 50)
    zero = RadialField.constant(g, 0.0)
    balance = energy_terms(zero, zero, ModelParams(n=3, Q=3.0))
    assert balance.lhs == 0.0
    assert balance.rhs == 0.0
    assert balance.gap == 0.0


def test_manufactured_balance(params, bubble):
    V = manufacture_potential(bubble, params, order=4)
    balance = energy_terms(bubble, V, params, order=4)
    assert balance.rhs > 0
    assert balance.gap <= 1e-3
    assert energy_identity_gap(bubble, V, params, order=4) == pytest.approx(balance.gap)


def test_zero_potential_n3():
    p3 = ModelParams(n=3, ell=1.0, Q=3.0)
    grid = make_grid(100.0, 1500, 'geometric')
    z = bubble_profile(BubbleSpec.from_params(p3), grid)
    terms = energy_terms(z, RadialField.constant(grid, 0.0), p3, order=4)
    # int |grad Z|^2 = 3 pi^2 / 4
    assert terms.lhs == pytest.approx(0.75 * np.pi ** 2, rel=1e-3)
    expected = zero_potential_gap(3.0)
    assert terms.lhs - terms.rhs == pytest.approx(expected, abs=1e-3 * max(1.0, abs(expected)))


def test_nonlocal_residual(params, bubble):
    V = manufacture_potential(bubble, params)
    assert nonlocal_residual(bubble, V, params) <= 1e-9
    assert nonlocal_residual(bubble, RadialField.constant(bubble.grid, 0.0), params) > 1.0


def test_energy_exception(params):
    g = make_grid(10.0, 100)
    u = RadialField.from_function(g, lambda r: 1.0 / (1.0 + r), Tail(1.0, 1.0))
    with pytest.raises(DivergentIntegral):
        energy_terms(u, RadialField.constant(g, 0.0), params)


def test_gradient_energy_beyond_grid():
    p3 = ModelParams(n=3, ell=1.0, Q=3.0)
    z = bubble_profile(BubbleSpec.from_params(p3), make_grid(40.0, 1600, 'geometric'))
    terms = energy_terms(z, RadialField.constant(z.grid, 0.0), p3, order=4)
    # the leading tail alone is off by 4 pi / r_max^3 here
    assert terms.lhs == pytest.approx(0.75 * np.pi ** 2, rel=5e-6)


def test_manufactured_gap_refinement():
    p3 = ModelParams(n=3, ell=1.0, Q=3.0)
    spec = BubbleSpec.from_params(p3)
    gaps = []
    for N in (400, 800, 1600):
        z = bubble_profile(spec, make_grid(40.0, N, 'geometric'))
        V = manufacture_potential(z, p3)
        gaps.append(energy_identity_gap(z, V, p3))
    assert gaps[0] > gaps[1] > gaps[2]

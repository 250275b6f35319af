import numpy as np
import pytest

from bubblelab.core import make_grid
from bubblelab.core import ModelParams
from bubblelab.core import RadialField
from bubblelab.bubble import BubbleSpec
from bubblelab.bubble import bubble_profile
from bubblelab.solver import manufacture_potential
from bubblelab.solver import solve_nonlocal
from bubblelab.utils import NonPositive
from bubblelab.utils import NonPositivityDetected
from bubblelab.utils import NonConvergence
from bubblelab.utils import InvalidParams
from bubblelab.utils import GridMismatch


@pytest.fixture(scope='module')
def params():
    return ModelParams(n=6, ell=1.0, Q=24.0)


@pytest.fixture(scope='module')
def bubble(params):
    return bubble_profile(BubbleSpec.from_params(params), make_grid(40.0, 800, 'geometric'))


@pytest.fixture(scope='module')
def potential(bubble, params):
    return manufacture_potential(bubble, params)


def test_manufacture_potential(potential, bubble):
    assert potential.grid.same_as(bubble.grid)
    # the tail follows u^{p-1} ~ r^{-4}
    assert potential.tail.beta == 4.0
    assert potential.evaluate(potential.grid.r_max) == pytest.approx(potential.values[-1])


def test_manufacture_exception(params):
    g = make_grid(1.0, 10)
    with pytest.raises(NonPositive):
        manufacture_potential(RadialField.constant(g, 0.0), params)


def test_solve_from_exact_guess(potential, bubble, params):
    report = solve_nonlocal(potential, params, bubble, tol=1e-8)
    assert report.converged
    assert report.iterations <= 3
    assert np.max(np.abs(report.solution.values - bubble.values)) <= 1e-6


def test_solve_from_scaled_guess(potential, bubble, params):
    report = solve_nonlocal(potential, params, bubble.scale(1.1), tol=1e-8, max_iter=100)
    assert report.converged
    assert np.max(np.abs(report.solution.values - bubble.values)) <= 1e-4
    assert report.history[-1] == report.final_update_norm
    d = report.to_dict()
    assert d['converged'] is True


def test_round_trip(potential, bubble, params):
    report = solve_nonlocal(potential, params, bubble.scale(1.1), tol=1e-10, max_iter=100)
    V = manufacture_potential(report.solution, params)
    inner = bubble.grid.mask(10.0)
    assert np.allclose(V.values[inner], potential.values[inner], atol=1e-4)


def test_solve_non_convergence(potential, bubble, params):
    with pytest.raises(NonConvergence) as err:
        solve_nonlocal(potential, params, bubble.scale(1.1), tol=1e-12, max_iter=2)
    assert err.value.report.iterations == 2
    with pytest.warns(RuntimeWarning):
        report = solve_nonlocal(potential, params, bubble.scale(1.1), tol=1e-12, max_iter=2,
                                raise_on_failure=False)
    assert not report.converged


def test_solve_exception(potential, bubble, params):
    values = bubble.values.copy()
    values[5] = -1.0
    with pytest.raises(NonPositivityDetected):
        solve_nonlocal(potential, params, bubble.with_values(values))
    with pytest.raises(InvalidParams):
        solve_nonlocal(potential, params, bubble, tau=0.0)
    with pytest.raises(GridMismatch):
        solve_nonlocal(potential, params, bubble_profile(BubbleSpec(6, 24.0), make_grid(40.0, 10)))

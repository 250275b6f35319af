import numpy as np
import pytest

from bubblelab.core import make_grid
from bubblelab.bubble import BubbleSpec
from bubblelab.solver import shoot_limit_profile
from bubblelab.solver import shooting_family_deviation
from bubblelab.solver import DECAYED
from bubblelab.solver import BLEW_UP
import bubblelab.solver.shooting as shooting
from bubblelab.utils import InvalidInitial
from bubblelab.utils import InvalidParams


@pytest.fixture()
def grid():
    return make_grid(20.0, 2000)


def test_shoot_bubble(grid):
    res = shoot_limit_profile(6, 24.0, 1.0, grid)
    assert res.outcome == DECAYED
    assert res.max_radius_reached == 20.0
    Z = BubbleSpec(6, 24.0)(grid.nodes)
    assert np.max(np.abs(res.profile.values - Z)) <= 1e-6
    assert res.profile.tail.beta == 4.0


def test_shoot_n3(grid):
    res = shoot_limit_profile(3, 3.0, 1.0, grid)
    assert res.outcome == DECAYED
    assert np.max(np.abs(res.profile.values - (1.0 + grid.nodes ** 2) ** -0.5)) <= 1e-6


def test_shooting_family(grid):
    for lam in (0.5, 2.0):
        assert shooting_family_deviation(6, 24.0, lam, grid) <= 1e-6


def test_shoot_exception(grid):
    with pytest.raises(InvalidInitial):
        shoot_limit_profile(6, 24.0, 0.0, grid)
    with pytest.raises(InvalidParams):
        shoot_limit_profile(6, -1.0, 1.0, grid)


def test_shoot_integrator_failure(monkeypatch):
    real = shooting.solve_ivp

    def stops_early(fun, t_span, y0, **kwargs):
        t_eval = kwargs['t_eval']
        kwargs['t_eval'] = t_eval[t_eval <= 2.0]
        sol = real(fun, (t_span[0], 2.0), y0, **kwargs)
        sol.status = -1
        sol.message = 'Required step size is less than spacing between numbers.'
        return sol
    monkeypatch.setattr(shooting, 'solve_ivp', stops_early)
    grid = make_grid(20.0, 400)
    with pytest.warns(RuntimeWarning):
        res = shoot_limit_profile(6, 24.0, 1.0, grid)
    assert res.outcome == BLEW_UP
    assert 1.9 <= res.max_radius_reached <= 2.0
    assert res.profile.grid.r_max == pytest.approx(res.max_radius_reached)
    assert res.profile.values.shape[0] < grid.nodes.shape[0]

import numpy as np
import pytest

from bubblelab.core import make_grid
from bubblelab.core import ModelParams
from bubblelab.core import RadialField
from bubblelab.core import Tail
from bubblelab.riesz import riesz_convolve
from bubblelab.riesz import quotient_field
from bubblelab.riesz import summarize_quotient
from bubblelab.riesz import tail_correction
from bubblelab.riesz import bubble_newton_potential
from bubblelab.riesz import RingKernelTable
from bubblelab.utils import DivergentTail
from bubblelab.utils import NonPositive
from bubblelab.utils import GridMismatch


@pytest.fixture(scope='module')
def grid():
    return make_grid(20.0, 2000, 'geometric')


@pytest.fixture(scope='module')
def bubble3(grid):
    # Z^6 for the n = 3 bubble with Q = 3
    return RadialField.from_function(grid, lambda r: (1.0 + r ** 2) ** -3, Tail(1.0, 6.0))


@pytest.fixture(scope='module')
def potential(bubble3):
    return riesz_convolve(bubble3, 3, 1.0)


def test_potential_at_origin(potential):
    assert potential.values[0] == pytest.approx(np.pi, rel=1e-4)


def test_potential_closed_form(grid, potential):
    mask = grid.mask(10.0)
    exact = bubble_newton_potential(grid.nodes[mask])
    assert np.allclose(potential.values[mask], exact, rtol=1e-4)


def test_potential_far_field(potential):
    # q ~ m / r with m = int Z^6 = pi^2 / 4
    assert potential.tail.beta == 1.0
    assert potential.tail.A == pytest.approx(np.pi ** 2 / 4.0, rel=1e-5)


def test_uniform_ball():
    g = make_grid(10.0, 200)
    q = riesz_convolve(RadialField.constant(g, 1.0), 3, 1.0)
    assert np.allclose(q.values, 2 * np.pi * (100.0 - g.nodes ** 2 / 3.0), rtol=1e-10)
    assert q.tail.A == pytest.approx(4 * np.pi * 1000.0 / 3.0)


def test_tail_correction():
    t = Tail(1.0, 6.0)
    assert tail_correction(np.array([0.0]), t, 3, 1.0, 20.0)[0] == pytest.approx(np.pi / 160000.0)
    with pytest.raises(DivergentTail):
        tail_correction(np.array([0.0]), Tail(1.0, 2.0), 3, 1.0, 20.0)


def test_heavy_tail_has_no_far_field():
    g = make_grid(10.0, 50)
    f = RadialField.from_function(g, lambda r: (1.0 + r ** 2) ** -1.25, Tail(1.0, 2.5))
    q = riesz_convolve(f, 3, 1.0)
    assert q.tail is None
    with pytest.raises(DivergentTail):
        riesz_convolve(RadialField(g, f.values, Tail(1.0, 1.5)), 3, 1.0)


def test_convolve_exception(bubble3):
    g = make_grid(1.0, 10)
    with pytest.raises(NonPositive):
        riesz_convolve(RadialField.constant(g, -1.0), 3, 1.0)
    table = RingKernelTable.build(g, 3, 1.0)
    with pytest.raises(GridMismatch):
        riesz_convolve(bubble3, 3, 1.0, table=table)


def test_quotient_field(grid, bubble3, potential):
    params = ModelParams(n=3, Q=3.0)
    u = RadialField.from_function(grid, lambda r: (1.0 + r ** 2) ** -0.5, Tail(1.0, 1.0))
    q = quotient_field(u, params)
    assert np.allclose(q.values, potential.values, rtol=1e-12)
    summary = summarize_quotient(q, params)
    assert summary.member
    assert summary.sup == pytest.approx(np.pi, rel=1e-4)
    assert not summarize_quotient(q, params.replace(K_quot=1.0)).member

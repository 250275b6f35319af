import numpy as np
import pytest

from bubblelab.core import make_grid
from bubblelab.core import powerlaw_fit
from bubblelab.bubble import BubbleSpec
from bubblelab.bubble import bubble_profile
from bubblelab.bubble import bubble_derivative
from bubblelab.bubble import kernel_modes
from bubblelab.bubble import bubble_residual
from bubblelab.bubble import bubble_residual_field
from bubblelab.bubble import linearized_residual
from bubblelab.utils import InvalidParams


@pytest.fixture(scope='module')
def fine():
    return make_grid(20.0, 4000)


@pytest.fixture()
def spec():
    return BubbleSpec(6, 24.0)


def test_spec_exception():
    with pytest.raises(InvalidParams):
        BubbleSpec(2, 1.0)
    with pytest.raises(InvalidParams):
        BubbleSpec(6, 0.0)
    with pytest.raises(InvalidParams):
        BubbleSpec(6, 24.0, eps=0.0)


def test_profile(spec):
    g = make_grid(4.0, 40)
    z = bubble_profile(spec, g)
    assert z.values[0] == 1.0
    assert np.allclose(z.values, (1.0 + g.nodes ** 2) ** -2)
    assert np.all(np.diff(z.values) < 0)
    assert z.tail.A == pytest.approx(1.0)
    assert z.tail.beta == 4.0


def test_concentrated_profile(spec):
    z = bubble_profile(spec.with_eps(0.1), make_grid(1.0, 100))
    assert z.sup() == pytest.approx(100.0)
    # eps^{(n-2)/2} r^{2-n} far away
    assert z.tail.A == pytest.approx(0.01)


def test_general_quotient():
    spec = BubbleSpec(5, 3.0)
    assert spec.k == pytest.approx(0.2)
    assert spec(np.sqrt(5.0)) == pytest.approx(2.0 ** -1.5)


def test_derivative(spec):
    g = make_grid(5.0, 50)
    h = 1e-6
    fd = (spec(g.nodes + h) - spec(g.nodes - h)) / (2 * h)
    d = bubble_derivative(spec, g)
    assert np.allclose(d.values, fd, atol=1e-8)
    assert d.tail.beta == 5.0


def test_residual_order4(spec, fine):
    assert bubble_residual(spec, fine, order=4) <= 1e-5


def test_residual_order2_converges(spec):
    points = []
    for N in (500, 1000, 2000):
        g = make_grid(20.0, N)
        points.append((g.spacings[0], bubble_residual(spec, g, order=2)))
    assert powerlaw_fit(points).slope == pytest.approx(2.0, abs=0.2)


def test_residual_wrong_quotient(spec, fine):
    res = bubble_residual_field(spec, fine, order=4, Q=25.0)
    # Delta Z + 25 Z^2 = Z^2 at the origin
    assert res.values[0] == pytest.approx(1.0, abs=1e-5)


def test_kernel_modes(spec, fine):
    modes = kernel_modes(spec, fine)
    assert linearized_residual(modes['scaling'], spec, 0, order=4) <= 1e-5
    assert linearized_residual(modes['translation'], spec, 1, order=4) <= 1e-5


def test_non_kernel_direction(spec, fine):
    z = bubble_profile(spec, fine)
    assert linearized_residual(z, spec, 0, order=4) >= 0.1
    with pytest.raises(InvalidParams):
        linearized_residual(z, spec, 2)

import math
import numpy as np
import pytest

from bubblelab.core import make_grid
from bubblelab.core import RadialField
from bubblelab.core import Tail
from bubblelab.core import holder_seminorm
from bubblelab.core import holder_norm
from bubblelab.core import decay_constant
from bubblelab.core import tail_integral
from bubblelab.core import radial_integral
from bubblelab.utils import InvalidParams
from bubblelab.utils import OutOfRange
from bubblelab.utils import NoDecay
from bubblelab.utils import DivergentIntegral


@pytest.fixture()
def bubble6():
    # the n = 6 bubble (1 + r^2)^{-2}, decaying like r^{-4}
    g = make_grid(40.0, 800, 'geometric')
    return RadialField.from_function(g, lambda r: (1.0 + r ** 2) ** -2, Tail(1.0, 4.0))


def test_holder_seminorm_brute_force():
    rng = np.random.RandomState(0)
    r = np.sort(rng.uniform(0, 1, 40))
    f = rng.normal(size=40)
    alpha = 0.3
    brute = max(abs(f[i] - f[j]) / abs(r[i] - r[j]) ** alpha
                for i in range(40) for j in range(40) if i != j)
    assert holder_seminorm(r, f, alpha) == pytest.approx(brute)


def test_holder_norm():
    g = make_grid(2.0, 100)
    f = RadialField.from_function(g, lambda r: r)
    assert holder_norm(f, 0.5, 1.0) == pytest.approx(2.0)
    assert holder_norm(f, 0.0, 1.0) == pytest.approx(1.0)
    c = RadialField.constant(g, -3.0)
    assert holder_norm(c, 0.5, 2.0) == pytest.approx(3.0)


def test_holder_norm_exception():
    f = RadialField.constant(make_grid(1.0, 10), 1.0)
    with pytest.raises(InvalidParams):
        holder_norm(f, 1.0, 0.5)
    with pytest.raises(OutOfRange):
        holder_norm(f, 0.5, 2.0)


def test_decay_constant(bubble6):
    # r^4 (1 + r^2)^{-2} increases to its tail coefficient 1
    assert decay_constant(bubble6, 10.0, 6) == pytest.approx(1.0, rel=1e-12)


def test_holder_norm_monotone(bubble6):
    radii = [0.25, 0.5, 0.75, 1.0]
    by_radius = [holder_norm(bubble6, 0.5, R) for R in radii]
    assert all(a <= b for a, b in zip(by_radius[:-1], by_radius[1:]))
    # node distances inside the unit ball are at most 1, so the quotients grow with alpha
    by_alpha = [holder_norm(bubble6, alpha, 1.0) for alpha in (0.0, 0.25, 0.5, 0.75)]
    assert all(a <= b for a, b in zip(by_alpha[:-1], by_alpha[1:]))
    assert by_alpha[0] == pytest.approx(1.0)


def test_decay_constant_homogeneous(bubble6):
    for c in (0.5, 2.5):
        assert decay_constant(bubble6.scale(c), 10.0, 6) == pytest.approx(c * decay_constant(bubble6, 10.0, 6))


def test_decay_constant_exception(bubble6):
    with pytest.raises(NoDecay):
        decay_constant(RadialField(bubble6.grid, bubble6.values), 1.0, 6)
    slow = RadialField(bubble6.grid, bubble6.values, Tail(1.0, 3.0))
    with pytest.raises(NoDecay):
        decay_constant(slow, 1.0, 6)
    with pytest.raises(OutOfRange):
        decay_constant(bubble6, 40.0, 6)


def test_tail_integral():
    assert tail_integral(1.0, 4.0, 2.0, 1.0) == pytest.approx(1.0)
    with pytest.raises(DivergentIntegral):
        tail_integral(1.0, 3.0, 2.0, 1.0)


def test_radial_integral_gaussian():
    g = make_grid(10.0, 2000)
    f = RadialField.from_function(g, lambda r: np.exp(-r ** 2))
    assert radial_integral(f, 3) == pytest.approx(math.pi ** 1.5, rel=1e-8)


def test_radial_integral_with_tail():
    g = make_grid(40.0, 1000, 'geometric')
    f = RadialField.from_function(g, lambda r: (1.0 + r ** 2) ** -3, Tail(1.0, 6.0))
    # 4 pi int_0^inf r^2 (1 + r^2)^{-3} dr = pi^2 / 4
    assert radial_integral(f, 3) == pytest.approx(math.pi ** 2 / 4.0, rel=1e-6)
    assert radial_integral(f, 3, include_tail=False) < radial_integral(f, 3)

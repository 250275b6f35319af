from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bubblelab.core.grid import RadialField, Tail
from bubblelab.core.operators import laplacian_radial, sector_laplacian
from bubblelab.utils.exceptions import InvalidParams


@dataclass(frozen=True)
class BubbleSpec(object):
    """
    The bubble z_eps(r) = eps^{(2-n)/2} Z(r/eps) with Z(y) = (1 + Q |y|^2 / (n(n-2)))^{(2-n)/2}.

    Parameters
    ----------
    n: int
        dimension, n >= 3

    Q: float
        the limit quotient, Q > 0

    eps: float, optional (default=1.0)
        concentration scale; eps = 1 is Z itself

    Examples
    --------
    >>> from bubblelab.bubble import BubbleSpec
    >>> BubbleSpec(6, 24.0).p
    2.0
    """
    n: int
    Q: float
    eps: float = 1.0

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 3:
            msg = "The bubble dimension n must be an integer >= 3, got %s." % str(self.n)
            raise InvalidParams(msg)
        object.__setattr__(self, 'n', int(self.n))
        if not self.Q > 0:
            msg = "The bubble quotient Q must be positive, got %s." % str(self.Q)
            raise InvalidParams(msg)
        if not self.eps > 0:
            msg = "The bubble scale eps must be positive, got %s." % str(self.eps)
            raise InvalidParams(msg)

    @classmethod
    def from_params(cls, params, eps=1.0):
        return cls(params.n, params.Q, eps)

    @property
    def k(self):
        return self.Q / (self.n * (self.n - 2.0))

    @property
    def p(self):
        return (self.n + 2.0) / (self.n - 2.0)

    def with_eps(self, eps):
        return BubbleSpec(self.n, self.Q, eps)

    def __call__(self, r):
        """ z_eps at arbitrary radii """
        r = np.asarray(r, dtype=float)
        e = self.eps
        return e ** (0.5 * (2 - self.n)) * (1.0 + self.k * (r / e) ** 2) ** (0.5 * (2 - self.n))

    def derivative(self, r):
        """ z_eps'(r) """
        r = np.asarray(r, dtype=float)
        e = self.eps
        return -(self.n - 2.0) * self.k * r * e ** (-0.5 * (self.n + 2)) * (1.0 + self.k * (r / e) ** 2) ** (-0.5 * self.n)

    def tail(self):
        """ z_eps(r) ~ A r^{2-n} """
        A = self.eps ** (0.5 * (self.n - 2)) * self.k ** (0.5 * (2 - self.n))
        return Tail(A, self.n - 2.0)


def bubble_profile(spec, grid):
    """
    sample the bubble z_eps on a grid

    Parameters
    ----------
    spec: BubbleSpec

    grid: RadialGrid

    Returns
    -------
    RadialField
        positive, decreasing, sup = eps^{(2-n)/2} at r = 0, with the tail model A r^{2-n}

    Examples
    --------
    >>> from bubblelab.core import make_grid
    >>> from bubblelab.bubble import BubbleSpec, bubble_profile
    >>> z = bubble_profile(BubbleSpec(6, 24.0), make_grid(2.0, 2))
    >>> z.values
    array([1.  , 0.25, 0.04])
    """
    return RadialField(grid, spec(grid.nodes), spec.tail())


def bubble_derivative(spec, grid):
    """ z_eps' sampled on a grid (odd in r, decaying like r^{1-n}) """
    n = spec.n
    tail = spec.tail()
    return RadialField(grid, spec.derivative(grid.nodes), Tail(-(n - 2.0) * tail.A, n - 1.0))


def kernel_modes(spec, grid):
    """
    the two kernel directions of the linearized operator Delta + p Q Z^{p-1} at the bubble

    Parameters
    ----------
    spec: BubbleSpec
        eps = 1

    grid: RadialGrid

    Returns
    -------
    dict
        'scaling': r Z' + (n-2)/2 Z (angular mode 0), derivative of the eps-family at eps = 1;
        'translation': Z' (angular mode 1), the radial profile of the derivative along a translation
    """
    r = grid.nodes
    Z = spec(r)
    dZ = spec.derivative(r)
    n = spec.n
    scaling = RadialField(grid, r * dZ + 0.5 * (n - 2.0) * Z)
    translation = RadialField(grid, dZ)
    return {'scaling': scaling, 'translation': translation}


def bubble_residual_field(spec, grid, order=2, Q=None):
    """
    Delta z + Q z^p sampled on a grid; Q defaults to the bubble's own quotient
    """
    z = bubble_profile(spec, grid)
    Q = spec.Q if Q is None else float(Q)
    lap = laplacian_radial(z, spec.n, order)
    return RadialField(grid, lap.values + Q * z.values ** spec.p)


def bubble_residual(spec, grid, order=2, Q=None):
    """
    discretization error of the limit equation Delta Z + Q Z^p = 0 at the bubble

    Parameters
    ----------
    spec: BubbleSpec

    grid: RadialGrid

    order: int, optional (default=2)
        finite-difference order of the Laplacian, 2 or 4

    Q: float, optional (default=None)
        the quotient in the equation, when it differs from the one the bubble is built with

    Returns
    -------
    float
        sup over the nodes of |Delta Z + Q Z^p|
    """
    return float(np.max(np.abs(bubble_residual_field(spec, grid, order, Q).values)))


def linearized_residual(w, spec, angular_mode, order=2):
    """
    sup |Delta_m w + p Q Z^{p-1} w| of a candidate kernel element

    Parameters
    ----------
    w: RadialField
        the radial profile of the candidate in the angular sector m

    spec: BubbleSpec

    angular_mode: int
        0 (radial sector) or 1 (w is odd, r w_1(r) Y_1 direction)

    order: int, optional (default=2)

    Returns
    -------
    float
        over all nodes for m = 0, over r > 0 for m = 1
    """
    if angular_mode not in (0, 1):
        msg = "The angular mode must be 0 or 1, got %s." % str(angular_mode)
        raise InvalidParams(msg)
    Z = spec(w.nodes)
    lap = sector_laplacian(w, spec.n, angular_mode, order)
    res = lap.values + spec.p * spec.Q * Z ** (spec.p - 1.0) * w.values
    if angular_mode == 1:
        res = res[1:]
    return float(np.max(np.abs(res)))

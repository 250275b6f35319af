from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.interpolate import CubicSpline

from bubblelab.utils.exceptions import InvalidGrid, GridMismatch, NonPositive


SCHEMES = ('uniform', 'geometric')


@dataclass(frozen=True, eq=False)
class RadialGrid(object):
    """
    Nodes of the radial coordinate, r_0 = 0 < r_1 < ... < r_N = r_max.

    Parameters
    ----------
    nodes: array-like
        strictly increasing radii starting at exactly 0, at least 3 of them

    scheme: str, optional (default='uniform')
        'uniform' or 'geometric'; informative only, the operators work on any node set
    """
    nodes: np.ndarray
    scheme: str = 'uniform'
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float).ravel()
        if nodes.shape[0] < 3:
            msg = "A radial grid needs at least 3 nodes (N >= 2), got %i." % nodes.shape[0]
            raise InvalidGrid(msg)
        if nodes[0] != 0.0:
            msg = "The first node of a radial grid must be exactly 0, got %r." % nodes[0]
            raise InvalidGrid(msg)
        if not np.all(np.diff(nodes) > 0):
            msg = "The nodes of a radial grid must be strictly increasing."
            raise InvalidGrid(msg)
        if self.scheme not in SCHEMES:
            msg = "The grid scheme must be one of %s, got '%s'." % (str(SCHEMES), str(self.scheme))
            raise InvalidGrid(msg)
        nodes.setflags(write=False)
        object.__setattr__(self, 'nodes', nodes)

    @property
    def N(self):
        """ index of the last node """
        return self.nodes.shape[0] - 1

    @property
    def r_max(self):
        return float(self.nodes[-1])

    @property
    def spacings(self):
        return np.diff(self.nodes)

    def scaled(self, eps):
        """ the grid with every node multiplied by eps > 0 """
        return RadialGrid(self.nodes * float(eps), self.scheme)

    def same_as(self, other):
        return isinstance(other, RadialGrid) and self.nodes.shape == other.nodes.shape \
            and bool(np.all(self.nodes == other.nodes))

    def check_same(self, other, name='field'):
        if not self.same_as(other):
            msg = "The %s is sampled on a different grid." % name
            raise GridMismatch(msg)

    def mask(self, radius, tol=1e-12):
        """ boolean mask of the nodes with r <= radius (up to a relative tolerance) """
        return self.nodes <= radius * (1.0 + tol)

    def digest(self):
        """ sha256 of the node array, used to key cached kernel tables """
        return hashlib.sha256(np.ascontiguousarray(self.nodes).tobytes()).hexdigest()

    def cached(self, key, builder):
        """ memoize a derived object (e.g. stencil weights) on this immutable grid """
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]


def make_grid(r_max, N, scheme='uniform', stretch=None):
    """
    build a radial grid on [0, r_max] with N intervals

    Parameters
    ----------
    r_max: float
        the last node, r_max > 0

    N: int
        number of intervals, N >= 2

    scheme: str, optional (default='uniform')
        'uniform': constant spacing h = r_max / N.
        'geometric': r_k = r_max (g^k - 1) / (g^N - 1), fine near the origin.

    stretch: float or None, optional (default=None)
        the ratio g > 1 of consecutive spacings of the geometric scheme.
        If None, g = 1 + 4/N, so the last spacing is about e^4 times the first one.

    Returns
    -------
    RadialGrid

    Examples
    --------
    >>> make_grid(1.0, 4).nodes
    array([0.  , 0.25, 0.5 , 0.75, 1.  ])
    """
    if isinstance(N, bool) or not float(N).is_integer():
        msg = "The number of intervals N must be an integer, got %s." % str(N)
        raise InvalidGrid(msg)
    N = int(N)
    if N < 2:
        msg = "The number of intervals N must be at least 2, got %i." % N
        raise InvalidGrid(msg)
    if not r_max > 0:
        msg = "The outer radius r_max must be positive, got %s." % str(r_max)
        raise InvalidGrid(msg)
    r_max = float(r_max)
    if scheme == 'uniform':
        nodes = np.linspace(0.0, r_max, N + 1)
    elif scheme == 'geometric':
        g = 1.0 + 4.0 / N if stretch is None else float(stretch)
        if not g > 1.0:
            msg = "The geometric stretch must be larger than 1, got %s." % str(stretch)
            raise InvalidGrid(msg)
        k = np.arange(N + 1, dtype=float)
        nodes = r_max * np.expm1(k * np.log(g)) / np.expm1(N * np.log(g))
        nodes[0] = 0.0
    else:
        msg = "The grid scheme must be one of %s, got '%s'." % (str(SCHEMES), str(scheme))
        raise InvalidGrid(msg)
    nodes[-1] = r_max
    return RadialGrid(nodes, scheme)


@dataclass(frozen=True)
class Tail(object):
    """
    power-law model f(r) ~ A r^{-beta} beyond the last grid node

    Parameters
    ----------
    A: float
        coefficient

    beta: float
        decay power, beta > 0
    """
    A: float
    beta: float

    def __post_init__(self):
        if not self.beta > 0:
            msg = "The tail power beta must be positive, got %s." % str(self.beta)
            raise InvalidGrid(msg)

    def __call__(self, r):
        return self.A * np.power(r, -self.beta)


@dataclass(frozen=True, eq=False)
class RadialField(object):
    """
    A radially symmetric function sampled on a RadialGrid, with an optional power-law tail.

    Parameters
    ----------
    grid: RadialGrid
        the sampling grid

    values: array-like
        samples at the grid nodes, length N+1

    tail: Tail or None, optional (default=None)
        the behavior beyond r_max; None means nothing is known there
        (integrals and convolutions then treat the field as zero beyond r_max)

    Examples
    --------
    >>> from bubblelab.core import make_grid, RadialField
    >>> g = make_grid(1.0, 4)
    >>> f = RadialField.from_function(g, lambda r: r**2)
    >>> f.values[-1]
    1.0
    """
    grid: RadialGrid
    values: np.ndarray
    tail: Optional[Tail] = None

    def __post_init__(self):
        values = np.array(self.values, dtype=float).ravel()
        if values.shape[0] != self.grid.nodes.shape[0]:
            msg = "The field has %i values but its grid has %i nodes." % (values.shape[0], self.grid.nodes.shape[0])
            raise GridMismatch(msg)
        if self.tail is not None and not isinstance(self.tail, Tail):
            object.__setattr__(self, 'tail', Tail(*self.tail))
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_function(cls, grid, func, tail=None):
        """ sample a vectorized function of r at the grid nodes """
        return cls(grid, func(grid.nodes), tail)

    @classmethod
    def constant(cls, grid, c):
        return cls(grid, np.full(grid.nodes.shape, float(c)))

    @property
    def nodes(self):
        return self.grid.nodes

    def sup(self):
        """ max |f| over the nodes """
        return float(np.max(np.abs(self.values)))

    def with_values(self, values, tail=None):
        return RadialField(self.grid, values, tail)

    def scale(self, c):
        """ c f, tail included """
        tail = None if self.tail is None else Tail(c * self.tail.A, self.tail.beta)
        return RadialField(self.grid, c * self.values, tail)

    def power(self, p):
        """ f^p for a positive field, tail included """
        if np.any(self.values < 0):
            msg = "Only non-negative fields can be raised to a real power."
            raise NonPositive(msg)
        tail = None
        if self.tail is not None:
            tail = Tail(float(np.sign(self.tail.A)) * abs(self.tail.A) ** p, self.tail.beta * p)
        return RadialField(self.grid, np.power(self.values, p), tail)

    def rescaled(self, eps, factor=1.0):
        """
        the field y -> factor * f(eps y) sampled on the grid y = r / eps

        the values are unchanged up to the factor, only the grid moves.
        """
        grid = self.grid.scaled(1.0 / eps)
        tail = None
        if self.tail is not None:
            tail = Tail(factor * self.tail.A * eps ** (-self.tail.beta), self.tail.beta)
        return RadialField(grid, factor * self.values, tail)

    def positive(self):
        return bool(np.all(self.values > 0))

    def _spline(self):
        def build():
            return CubicSpline(self.grid.nodes, self.values, bc_type=((1, 0.0), 'not-a-knot'))
        # the values are immutable, so the spline is cached on the field
        key = '_spline_cache'
        cache = self.__dict__
        if key not in cache:
            cache[key] = build()
        return cache[key]

    def evaluate(self, r):
        """
        evaluate the field at arbitrary radii

        Inside [0, r_max] a cubic spline with zero slope at the origin (smooth radial functions are even);
        beyond r_max the tail model, or 0 without a tail.

        Parameters
        ----------
        r: float or array-like
            radii, r >= 0

        Returns
        -------
        ndarray
        """
        r = np.abs(np.asarray(r, dtype=float))
        out = np.zeros_like(r)
        inside = r <= self.grid.r_max
        if np.any(inside):
            out[inside] = self._spline()(r[inside])
        outside = ~inside
        if self.tail is not None and np.any(outside):
            out[outside] = self.tail(r[outside])
        return out

from __future__ import annotations

from dataclasses import dataclass, asdict

import numpy as np

from bubblelab.core.grid import RadialField, Tail
from bubblelab.core.norms import radial_integral, tail_integral
from bubblelab.core.params import sphere_area
from bubblelab.core.operators import radial_derivative, laplacian_radial
from bubblelab.riesz.convolution import quotient_field
from bubblelab.utils.exceptions import DivergentIntegral


@dataclass(frozen=True)
class EnergyBalance(object):
    """
    the two sides of the energy identity int |grad u|^2 + V u^2 = int q_u u^{2n/(n-2)}

    Parameters
    ----------
    lhs: float

    rhs: float

    gap: float
        |lhs - rhs| / max(1, |rhs|)
    """
    lhs: float
    rhs: float
    gap: float

    def to_dict(self):
        return asdict(self)


def _product_tail(a, b):
    if a is None or b is None:
        return None
    return Tail(a.A * b.A, a.beta + b.beta)


def _gradient_energy(u, du, n):
    """
    int |grad u|^2 over R^n

    Beyond r_max the integrand u'^2 r^{n-1} is a r^{-s} + b r^{-s-2}: a comes from the tail model of u,
    b matches the computed u'(r_max)^2.
    """
    if u.tail is None or u.tail.A == 0.0:
        return radial_integral(RadialField(u.grid, du ** 2), n)
    inner = radial_integral(RadialField(u.grid, du ** 2), n, include_tail=False)
    R = u.grid.r_max
    a = (u.tail.beta * u.tail.A) ** 2
    s = 2.0 * u.tail.beta + 3.0 - n
    b = (du[-1] ** 2 * R ** (n - 1) - a * R ** -s) * R ** (s + 2.0)
    outer = tail_integral(a, s, 0.0, R) + tail_integral(b, s + 2.0, 0.0, R)
    return inner + sphere_area(n) * outer


def energy_terms(u, V, params, q=None, order=2, table=None):
    """
    both sides of the energy identity of a solution, integrated over R^n with the tail models

    Parameters
    ----------
    u: RadialField
        non-negative field with a decaying tail model

    V: RadialField
        potential on u's grid

    params: ModelParams

    q: RadialField, optional (default=None)
        the quotient of u; computed when None

    order: int, optional (default=2)
        finite-difference order of u'

    table: RingKernelTable, optional (default=None)

    Returns
    -------
    EnergyBalance

    Raises
    ------
    DivergentIntegral
        when the tail of u decays too slowly for int |grad u|^2 (2 beta + 2 <= n)
    """
    n = params.n
    u.grid.check_same(V.grid, 'potential')
    if u.tail is not None and u.tail.A != 0.0 and not 2.0 * u.tail.beta + 2.0 > n:
        msg = "The gradient energy of a field decaying like r^{-%s} is infinite in dimension %i." \
              % (str(u.tail.beta), n)
        raise DivergentIntegral(msg)
    if q is None:
        q = quotient_field(u, params, table=table)
    else:
        u.grid.check_same(q.grid, 'quotient')

    du = radial_derivative(u, order).values
    grad = _gradient_energy(u, du, n)

    u2_tail = _product_tail(u.tail, u.tail)
    potential = radial_integral(RadialField(u.grid, V.values * u.values ** 2, _product_tail(V.tail, u2_tail)), n)

    density = u.power(params.p_conv)
    rhs = radial_integral(RadialField(u.grid, q.values * density.values, _product_tail(q.tail, density.tail)), n)
    lhs = grad + potential
    gap = abs(lhs - rhs) / max(1.0, abs(rhs))
    return EnergyBalance(float(lhs), float(rhs), float(gap))


def energy_identity_gap(u, V, params, q=None, order=2, table=None):
    """
    relative gap of the energy identity

    Examples
    --------
    >>> from bubblelab.core import make_grid, ModelParams, RadialField
    >>> from bubblelab.harness import energy_identity_gap
    >>> g = make_grid(5.0, 50)
    >>> zero = RadialField.constant(g, 0.0)
    >>> energy_identity_gap(zero, zero, ModelParams(n=3, Q=3.0))
    0.0
    """
    return energy_terms(u, V, params, q=q, order=order, table=table).gap


def nonlocal_residual(u, V, params, q=None, order=2, table=None):
    """ sup |Delta u + q_u u^p - V u| over the nodes """
    if q is None:
        q = quotient_field(u, params, table=table)
    lap = laplacian_radial(u, params.n, order).values
    return float(np.max(np.abs(lap + q.values * u.values ** params.p_crit - V.values * u.values)))

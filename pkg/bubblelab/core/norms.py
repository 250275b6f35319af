from __future__ import annotations

import numpy as np
import numba as nb
from scipy.integrate import simpson

from bubblelab.core.params import sphere_area
from bubblelab.utils.exceptions import OutOfRange, NoDecay, DivergentIntegral, InvalidParams


@nb.njit(parallel=True, cache=True)
def _pair_quotient_rows(r, f, alpha):
    # row i holds max_{j > i} |f_i - f_j| / |r_i - r_j|^alpha
    m = r.shape[0]
    rows = np.zeros(m)
    for i in nb.prange(m):
        best = 0.0
        for j in range(i + 1, m):
            d = abs(f[i] - f[j]) / (r[j] - r[i]) ** alpha
            if d > best:
                best = d
        rows[i] = best
    return rows


def holder_seminorm(r, f, alpha):
    """
    max over all node pairs of |f(r1) - f(r2)| / |r1 - r2|^alpha

    Parameters
    ----------
    r: ndarray
        strictly increasing nodes

    f: ndarray
        values at the nodes

    alpha: float
        exponent in (0, 1]

    Returns
    -------
    float
    """
    r = np.ascontiguousarray(r, dtype=np.float64)
    f = np.ascontiguousarray(f, dtype=np.float64)
    if r.shape[0] < 2:
        return 0.0
    # rows are reduced after the parallel loop, so the result does not depend on the thread count
    return float(np.max(_pair_quotient_rows(r, f, float(alpha))))


def holder_norm(f, alpha, radius):
    """
    the C^{0,alpha} norm of a radial field on the ball of the given radius

        sup |f| + sup_{r1 != r2} |f(r1) - f(r2)| / |r1 - r2|^alpha

    the seminorm of a radial function on a ball is attained on a diameter, so
    the pair search runs over the grid nodes with r <= radius.

    Parameters
    ----------
    f: RadialField

    alpha: float
        in [0, 1); 0 gives the sup norm alone

    radius: float
        the ball radius, at most r_max

    Returns
    -------
    float

    Examples
    --------
    >>> from bubblelab.core import make_grid, RadialField, holder_norm
    >>> f = RadialField.from_function(make_grid(1.0, 100), lambda r: r)
    >>> round(holder_norm(f, 0.5, 1.0), 12)
    2.0
    """
    if not 0.0 <= alpha < 1.0:
        msg = "The Holder exponent must be in [0, 1), got %s." % str(alpha)
        raise InvalidParams(msg)
    if radius > f.grid.r_max * (1.0 + 1e-12):
        msg = "The ball radius %s exceeds the grid extent r_max = %s." % (str(radius), str(f.grid.r_max))
        raise OutOfRange(msg)
    mask = f.grid.mask(radius)
    r = f.nodes[mask]
    vals = f.values[mask]
    sup = float(np.max(np.abs(vals)))
    if alpha == 0.0:
        return sup
    return sup + holder_seminorm(r, vals, alpha)


def decay_constant(f, rho, n):
    """
    the smallest L with f(r) <= L r^{2-n} for all r >= rho

    Parameters
    ----------
    f: RadialField
        a positive field with a tail model

    rho: float
        onset radius, rho < r_max

    n: int
        dimension

    Returns
    -------
    float
        L* = sup_{r >= rho} r^{n-2} f(r); nodes inside the grid, the tail model beyond r_max

    Raises
    ------
    NoDecay
        when there is no tail model or its power is smaller than n-2
    """
    if not rho < f.grid.r_max:
        msg = "The decay onset rho = %s must be smaller than r_max = %s." % (str(rho), str(f.grid.r_max))
        raise OutOfRange(msg)
    if f.tail is None:
        msg = "The field has no tail model, its decay at infinity is unknown."
        raise NoDecay(msg)
    tail = f.tail
    if tail.beta < n - 2 and tail.A > 0:
        msg = "The tail power beta = %s is smaller than n-2 = %i, so r^{n-2} f(r) is unbounded." % (str(tail.beta), n - 2)
        raise NoDecay(msg)
    mask = f.nodes >= rho
    inner = float(np.max(f.nodes[mask] ** (n - 2) * f.values[mask]))
    # r^{n-2-beta} is non-increasing on (r_max, inf), its sup is the value at r_max
    outer = tail.A * f.grid.r_max ** (n - 2 - tail.beta)
    if tail.beta == n - 2:
        outer = tail.A
    return max(inner, float(outer))


def tail_integral(A, beta, power, r0):
    """ int_{r0}^inf A r^{power - beta} dr, or DivergentIntegral """
    if not beta - power > 1.0:
        msg = "The tail integral of r^{%s} diverges at infinity." % str(power - beta)
        raise DivergentIntegral(msg)
    return A * r0 ** (power - beta + 1.0) / (beta - power - 1.0)


def radial_integral(f, n, include_tail=True):
    """
    integral of a radial field over R^n, |S^{n-1}| int_0^inf f(r) r^{n-1} dr

    Simpson's rule on the grid nodes plus the exact integral of the tail model beyond r_max.
    A field without a tail model counts as zero beyond r_max.

    Parameters
    ----------
    f: RadialField

    n: int
        dimension

    include_tail: bool, optional (default=True)

    Returns
    -------
    float
    """
    r = f.nodes
    inner = simpson(f.values * r ** (n - 1), x=r)
    outer = 0.0
    if include_tail and f.tail is not None and f.tail.A != 0.0:
        outer = tail_integral(f.tail.A, f.tail.beta, n - 1.0, f.grid.r_max)
    return sphere_area(n) * float(inner + outer)

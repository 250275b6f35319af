from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bubblelab.core.params import sphere_area
from bubblelab.core.grid import RadialField, Tail
from bubblelab.core.norms import radial_integral
from bubblelab.riesz.kernel import RingKernelTable, _check_ell
from bubblelab.utils.exceptions import DivergentTail, NonPositive


def tail_correction(r, tail, n, ell, r_max):
    """
    contribution of the density beyond r_max to the potential at radii r <= r_max

    uses the far-field expansion W(r, s) = |S^{n-1}| s^{-ell} (1 + c1 (r/s)^2 + ...),
    c1 = ell (ell - n + 2) / (2n), truncated after the r^2 term, and the tail model A s^{-beta}.

    Parameters
    ----------
    r: ndarray
        evaluation radii

    tail: Tail
        the tail model of the density

    n: int

    ell: float

    r_max: float

    Returns
    -------
    ndarray
    """
    A, beta = tail.A, tail.beta
    if not beta > n - ell:
        msg = "The density tail s^{-%s} makes the Riesz potential infinite; a power larger than n - ell = %s " \
              "is required." % (str(beta), str(n - ell))
        raise DivergentTail(msg)
    c1 = ell * (ell - n + 2.0) / (2.0 * n)
    lead = r_max ** (n - ell - beta) / (beta + ell - n)
    second = c1 * r ** 2 * r_max ** (n - ell - beta - 2.0) / (beta + ell + 2.0 - n)
    return sphere_area(n) * A * (lead + second)


def riesz_convolve(f, n, ell, table=None, method='hypergeometric', n_jobs=1):
    """
    the Riesz potential q = |x|^{-ell} * f of a non-negative radial density

    Parameters
    ----------
    f: RadialField
        the density, f >= 0; its tail model (if any) must decay faster than s^{-(n-ell)}

    n: int
        dimension

    ell: float
        kernel power, 0 < ell < n

    table: RingKernelTable, optional (default=None)
        a precomputed table of f's grid; built (and memoized on the grid) when None

    method: str, optional (default='hypergeometric')
        how to build a missing table, see RingKernelTable.build

    n_jobs: int, optional (default=1)

    Returns
    -------
    RadialField
        q on f's grid, with the far-field tail q(r) ~ m_f r^{-ell}, m_f = int f

    Examples
    --------
    >>> import numpy as np
    >>> from bubblelab.core import make_grid, RadialField, Tail
    >>> from bubblelab.riesz import riesz_convolve
    >>> g = make_grid(40.0, 1000, 'geometric')
    >>> f = RadialField.from_function(g, lambda r: (1 + r**2)**-3, Tail(1.0, 6.0))
    >>> abs(riesz_convolve(f, 3, 1.0).values[0] - np.pi) < 1e-3
    True
    """
    _check_ell(n, ell)
    if np.any(f.values < 0):
        msg = "The Riesz potential is evaluated for non-negative densities only."
        raise NonPositive(msg)
    if table is None:
        table = RingKernelTable.cached(f.grid, n, ell, method=method, n_jobs=n_jobs)
    else:
        f.grid.check_same(table.grid, 'kernel table')
    q = table.apply(f.values)
    if f.tail is not None and f.tail.A != 0.0:
        q = q + tail_correction(f.nodes, f.tail, n, ell, f.grid.r_max)
    if f.tail is not None and f.tail.A != 0.0 and not f.tail.beta > n:
        # infinite mass: the far field is not m r^{-ell}
        return RadialField(f.grid, q)
    mass = radial_integral(f, n)
    return RadialField(f.grid, q, Tail(mass, float(ell)))


def quotient_field(u, params, table=None, method='hypergeometric', n_jobs=1):
    """
    the quotient q_u = |x|^{-ell} * u^{2n/(n-2)}

    Parameters
    ----------
    u: RadialField
        a positive field with a decaying tail model

    params: ModelParams

    table: RingKernelTable, optional (default=None)

    Returns
    -------
    RadialField
    """
    if np.any(u.values < 0):
        msg = "The quotient is defined for positive fields only."
        raise NonPositive(msg)
    density = u.power(params.p_conv)
    return riesz_convolve(density, params.n, params.ell, table=table, method=method, n_jobs=n_jobs)


@dataclass(frozen=True)
class QuotientSummary(object):
    """
    sup of a quotient and the membership q <= K of the quotient class

    Parameters
    ----------
    sup: float

    K: float

    member: bool
    """
    sup: float
    K: float
    member: bool


def summarize_quotient(q, params):
    """ sup q over the grid (the tail q ~ m r^{-ell} is decreasing) and the class predicate sup q <= K """
    sup = float(np.max(q.values))
    return QuotientSummary(sup, float(params.K_quot), bool(sup <= params.K_quot))

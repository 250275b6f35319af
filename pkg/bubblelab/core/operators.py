"""
Finite-difference operators for radial fields.

The radial Laplacian is f'' + (n-1)/r f'. At the origin it is replaced by its
regular limit n f''(0). Order 2 uses three-point stencils (the origin value from the
parabola through the first three nodes); order 4 uses five-point stencils whose
points left of the origin are ghosts r -> -r carrying the parity of the field.
Both orders close at r_max with one-sided stencils.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from bubblelab.core.grid import RadialField, Tail
from bubblelab.utils.exceptions import InvalidGrid, InvalidParams


ORDERS = (2, 4)


def fd_weights(z, x0, m):
    """
    Fornberg's finite-difference weights on arbitrary points

    Parameters
    ----------
    z: array-like
        the stencil points (distinct)

    x0: float
        the point where the derivatives are approximated

    m: int
        the highest derivative order

    Returns
    -------
    ndarray, shape (m+1, len(z))
        row k holds the weights of the k-th derivative at x0
    """
    z = np.asarray(z, dtype=float)
    npts = z.shape[0]
    c = np.zeros((m + 1, npts))
    c1 = 1.0
    c4 = z[0] - x0
    c[0, 0] = 1.0
    for i in range(1, npts):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = z[i] - x0
        for j in range(i):
            c3 = z[i] - z[j]
            c2 = c2 * c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[k, i] = c1 * (k * c[k - 1, i - 1] - c5 * c[k, i - 1]) / c2
                c[0, i] = -c1 * c5 * c[0, i - 1] / c2
            for k in range(mn, 0, -1):
                c[k, j] = (c4 * c[k, j] - k * c[k - 1, j]) / c3
            c[0, j] = c4 * c[0, j] / c3
        c1 = c2
    return c


def _check_order(order, grid):
    if order not in ORDERS:
        msg = "The finite-difference order must be one of %s, got %s." % (str(ORDERS), str(order))
        raise InvalidParams(msg)
    need = 3 if order == 2 else 6
    if grid.nodes.shape[0] < need:
        msg = "Order-%i radial stencils need at least %i nodes, the grid has %i." \
              % (order, need, grid.nodes.shape[0])
        raise InvalidGrid(msg)


def _stencil(grid, i, order):
    """ (positions, node indices, signs-are-ghost flags) of the stencil of node i """
    N = grid.N
    if order == 2:
        if i == 0:
            pos = np.array([0, 1, 2])
        elif i < N:
            pos = np.array([i - 1, i, i + 1])
        else:
            pos = np.arange(max(0, N - 3), N + 1)
    else:
        if i < N - 1:
            pos = np.arange(i - 2, i + 3)
        else:
            pos = np.arange(N - 5, N + 1)
    idx = np.abs(pos)
    ghost = pos < 0
    return pos, idx, ghost


def _derivative_matrices(grid, order, parity):
    """ sparse D1, D2 with (D_k f)_i ~ f^(k)(r_i), ghosts folded with the given parity """
    def build():
        N = grid.N
        r = grid.nodes
        rows, cols, v1, v2 = [], [], [], []
        for i in range(N + 1):
            pos, idx, ghost = _stencil(grid, i, order)
            x = np.where(ghost, -r[idx], r[idx])
            w = fd_weights(x, r[i], 2)
            sign = np.where(ghost, float(parity), 1.0)
            rows.append(np.full(idx.shape[0], i))
            cols.append(idx)
            v1.append(w[1] * sign)
            v2.append(w[2] * sign)
        rows = np.concatenate(rows)
        cols = np.concatenate(cols)
        shape = (N + 1, N + 1)
        D1 = sp.coo_matrix((np.concatenate(v1), (rows, cols)), shape=shape).tocsr()
        D2 = sp.coo_matrix((np.concatenate(v2), (rows, cols)), shape=shape).tocsr()
        if parity > 0:
            # smooth even fields have f'(0) = 0
            D1 = D1.tolil()
            D1[0, :] = 0.0
            D1 = D1.tocsr()
        return D1, D2
    return grid.cached(('derivatives', order, parity), build)


def derivative_matrix(grid, order=2, parity=1):
    """
    sparse matrix of the first radial derivative

    Parameters
    ----------
    grid: RadialGrid

    order: int, optional (default=2)
        2 or 4

    parity: int, optional (default=1)
        +1 for even fields (scalars), -1 for odd ones (m = 1 sector)

    Returns
    -------
    scipy.sparse.csr_matrix
    """
    _check_order(order, grid)
    return _derivative_matrices(grid, order, int(np.sign(parity)))[0]


def laplacian_matrix(grid, n, order=2):
    """
    sparse matrix L with L f ~ (Delta f)(r_i) for an even radial field in dimension n

    Parameters
    ----------
    grid: RadialGrid

    n: int
        dimension

    order: int, optional (default=2)
        2 or 4

    Returns
    -------
    scipy.sparse.csr_matrix
    """
    _check_order(order, grid)

    def build():
        D1, D2 = _derivative_matrices(grid, order, 1)
        r = grid.nodes
        coef = np.zeros_like(r)
        coef[1:] = (n - 1.0) / r[1:]
        L = (D2 + sp.diags(coef) @ D1).tolil()
        L[0, :] = n * D2[0, :]
        return L.tocsr()
    return grid.cached(('laplacian', n, order), build)


def _laplacian_tail(tail, n):
    if tail is None:
        return None
    b = tail.beta
    # Delta r^{-b} = b (b - n + 2) r^{-b-2}
    return Tail(tail.A * b * (b - n + 2.0), b + 2.0)


def laplacian_radial(f, n, order=2):
    """
    discrete radial Laplacian Delta f = f'' + (n-1)/r f'

    Parameters
    ----------
    f: RadialField
        the field, at least 3 nodes (6 for order 4)

    n: int
        dimension

    order: int, optional (default=2)
        2: centered three-point stencils, origin value n f''(0) from the parabola through the first three nodes.
        4: five-point stencils with even ghost nodes at the origin.

    Returns
    -------
    RadialField
        Delta f at the nodes; the tail model is differentiated analytically

    Examples
    --------
    >>> from bubblelab.core import make_grid, RadialField, laplacian_radial
    >>> g = make_grid(1.0, 10)
    >>> lap = laplacian_radial(RadialField.from_function(g, lambda r: r**2), 3)
    >>> round(lap.values[0], 10)
    6.0
    """
    L = laplacian_matrix(f.grid, n, order)
    return RadialField(f.grid, L @ f.values, _laplacian_tail(f.tail, n))


def radial_derivative(f, order=2, parity=1):
    """
    first radial derivative f'(r) of a field

    Parameters
    ----------
    f: RadialField

    order: int, optional (default=2)

    parity: int, optional (default=1)
        +1 if f is even in r (f'(0) = 0 then), -1 if f is odd

    Returns
    -------
    RadialField
    """
    D1 = derivative_matrix(f.grid, order, parity)
    tail = None
    if f.tail is not None:
        tail = Tail(-f.tail.beta * f.tail.A, f.tail.beta + 1.0)
    return RadialField(f.grid, D1 @ f.values, tail)


def radial_second_derivative(f, order=2, parity=1):
    """ f''(r) with the same stencils as the Laplacian """
    _check_order(order, f.grid)
    D2 = _derivative_matrices(f.grid, order, int(np.sign(parity)))[1]
    return RadialField(f.grid, D2 @ f.values)


def sector_laplacian(w, n, m, order=2):
    """
    the Laplacian restricted to the spherical-harmonic sector of degree m

        Delta_m w = w'' + (n-1)/r w' - m (m + n - 2) / r^2 w

    Parameters
    ----------
    w: RadialField
        the radial profile of the sector component

    n: int
        dimension

    m: int
        0 or 1; m = 0 is laplacian_radial, m = 1 treats w as odd in r

    order: int, optional (default=2)

    Returns
    -------
    RadialField
        Delta_m w at the nodes; for m = 1 the origin value is the regular limit 0 of a smooth odd profile
    """
    if m == 0:
        return laplacian_radial(w, n, order)
    if m != 1:
        msg = "Only the angular sectors m = 0 and m = 1 are available, got m = %s." % str(m)
        raise InvalidParams(msg)
    _check_order(order, w.grid)
    if w.grid.nodes.shape[0] < 4:
        msg = "The m = 1 sector needs at least 4 nodes, the grid has %i." % w.grid.nodes.shape[0]
        raise InvalidGrid(msg)
    # for m = 1: Delta_1 w = w'' + (n-1) (w/r)', and w/r is even and smooth
    r = w.grid.nodes
    vals = w.values
    g = np.empty_like(r)
    g[1:] = vals[1:] / r[1:]
    # w'(0) from the odd extension through 3 nodes on each side (sixth order on uniform grids)
    z = np.concatenate([-r[3:0:-1], r[:4]])
    f = np.concatenate([-vals[3:0:-1], [0.0], vals[1:4]])
    g[0] = float(np.dot(fd_weights(z, 0.0, 1)[1], f))
    D1_even = _derivative_matrices(w.grid, order, 1)[0]
    D2_odd = _derivative_matrices(w.grid, order, -1)[1]
    out = np.zeros_like(r)
    out[1:] = (D2_odd @ vals)[1:] + (n - 1.0) * (D1_even @ g)[1:]
    return RadialField(w.grid, out)

"""
Brute-force Riesz potential in three dimensions, used as ground truth for the ring-kernel reduction.
"""

from __future__ import annotations

import numpy as np
from scipy.special import roots_legendre, roots_jacobi

from bubblelab.core.grid import RadialGrid, RadialField
from bubblelab.utils.exceptions import InvalidParams, TooLarge, DivergentTail, NonPositive


ORACLE_CAP = 128


def _cell_rule(M, R, points):
    """
    tensor Gauss-Legendre points in the cells of [-R, R] x [0, R] x [0, R] whose center lies in the ball |y| <= R,
    the cells touching the origin excluded

    Returns
    -------
    y1, rr, wk: ndarray
        first coordinate, y2^2 + y3^2, and weight times |y|^{-ell} is left to the caller (weights only)
    """
    h = 2.0 * R / M
    x, w = roots_legendre(points)
    x = 0.5 * (x + 1.0)
    w = 0.5 * w
    edges1 = -R + h * np.arange(M)
    edges2 = h * np.arange(M // 2)
    c1 = edges1 + 0.5 * h
    c2 = edges2 + 0.5 * h
    C1, C2, C3 = np.meshgrid(c1, c2, c2, indexing='ij')
    inside = C1 ** 2 + C2 ** 2 + C3 ** 2 <= R * R
    # the 2 x 1 x 1 cells at the origin are integrated by pyramids
    at_origin = (np.abs(C1) < h) & (C2 < h) & (C3 < h)
    keep = inside & ~at_origin
    lo1 = (C1 - 0.5 * h)[keep]
    lo2 = (C2 - 0.5 * h)[keep]
    lo3 = (C3 - 0.5 * h)[keep]
    X1, X2, X3 = np.meshgrid(x, x, x, indexing='ij')
    W = (w[:, None, None] * w[None, :, None] * w[None, None, :]).ravel() * h ** 3
    y1 = (lo1[:, None] + h * X1.ravel()[None, :]).ravel()
    y2 = (lo2[:, None] + h * X2.ravel()[None, :]).ravel()
    y3 = (lo3[:, None] + h * X3.ravel()[None, :]).ravel()
    wk = np.tile(W, lo1.shape[0])
    return y1, y2, y3, wk, h


def _pyramid_rule(h, ell, points):
    """
    points and weights for int over the two origin cubes [-h, h] x [0, h] x [0, h] of |y|^{-ell} g(y) dy

    each cube splits into 3 pyramids with apex at the origin, y = t (h, a, b) with permuted axes;
    the radial factor t^{2-ell} is integrated exactly by Gauss-Jacobi.
    """
    xj, wj = roots_jacobi(points, 0.0, 2.0 - ell)
    t = 0.5 * (xj + 1.0)
    wt = wj * 0.5 ** (3.0 - ell)
    xa, wa = roots_legendre(points)
    a = 0.5 * h * (xa + 1.0)
    wa = 0.5 * h * wa
    T, A, B = np.meshgrid(t, a, a, indexing='ij')
    WT = wt[:, None, None] * wa[None, :, None] * wa[None, None, :]
    apex = np.stack([np.full(A.shape, h), A, B], axis=-1)
    norm = np.sqrt(np.sum(apex ** 2, axis=-1))
    # dy = h t^2 da db dt and |y|^{-ell} = t^{-ell} |(h, a, b)|^{-ell}
    weight = (WT * h * norm ** (-ell)).ravel()
    base = (T[..., None] * apex).reshape(-1, 3)
    ys, ws = [], []
    for s1 in (1.0, -1.0):
        for axis in range(3):
            y = np.roll(base, axis, axis=1).copy()
            y[:, 0] *= s1
            ys.append(y)
            ws.append(weight)
    y = np.concatenate(ys, axis=0)
    return y[:, 0], y[:, 1], y[:, 2], np.concatenate(ws)


def riesz_oracle(f, n, ell, M, box=None, radii=None, n_eval=9, cap=ORACLE_CAP, points=3):
    """
    the Riesz potential of a radial density in R^3 by direct cell quadrature

        q(x) = int |y|^{-ell} f(|x - y|) dy,  x = (r, 0, 0)

    The cells of a uniform M^3 lattice over [-R, R]^3 whose centers lie in the ball |y| <= R get
    3 x 3 x 3 Gauss-Legendre points; the 8 cells sharing the vertex y = 0 are split into 24 pyramids
    with apex at the origin, exact for the radial singularity of the kernel. The density beyond the ball
    enters through its tail model (spherical mean to second order in |x|).

    Parameters
    ----------
    f: RadialField
        non-negative density; evaluated by spline inside its grid and by its tail model outside

    n: int
        must be 3

    ell: float
        in (0, 3)

    M: int
        even number of cells per side, at most cap

    box: float, optional (default=None)
        the half-width R; min(r_max, 10) when None

    radii: array-like, optional (default=None)
        evaluation radii, starting at 0 and increasing; n_eval uniform radii on [0, R/4] when None

    n_eval: int, optional (default=9)

    cap: int, optional (default=128)

    points: int, optional (default=3)
        Gauss points per cell side

    Returns
    -------
    RadialField
        q sampled on the grid of evaluation radii

    Examples
    --------
    >>> import numpy as np
    >>> from bubblelab.core import make_grid, RadialField, Tail
    >>> from bubblelab.riesz import riesz_oracle
    >>> f = RadialField.from_function(make_grid(10.0, 400), lambda r: (1 + r**2)**-3, Tail(1.0, 6.0))
    >>> q = riesz_oracle(f, 3, 1.0, 32)
    >>> abs(q.values[0] - np.pi) < 1e-2
    True
    """
    if n != 3:
        msg = "The brute-force oracle is implemented for n = 3 only, got n = %s." % str(n)
        raise InvalidParams(msg)
    if not 0.0 < ell < 3.0:
        msg = "The kernel power ell must be in (0, 3), got %s." % str(ell)
        raise InvalidParams(msg)
    if isinstance(M, bool) or int(M) != M or M < 2 or int(M) % 2 != 0:
        msg = "The number of oracle cells per side must be an even integer >= 2, got %s." % str(M)
        raise InvalidParams(msg)
    M = int(M)
    if M > cap:
        msg = "The oracle lattice M = %i exceeds the cap %i (M^3 cells)." % (M, cap)
        raise TooLarge(msg)
    if np.any(f.values < 0):
        msg = "The Riesz potential is evaluated for non-negative densities only."
        raise NonPositive(msg)
    R = min(f.grid.r_max, 10.0) if box is None else float(box)
    if radii is None:
        radii = np.linspace(0.0, 0.25 * R, n_eval)
    out_grid = RadialGrid(np.asarray(radii, dtype=float))

    y1, y2, y3, wc, h = _cell_rule(M, R, points)
    p1, p2, p3, wp = _pyramid_rule(h, ell, points)
    # cell weights carry the kernel; pyramid weights already do
    wc = wc * (y1 ** 2 + y2 ** 2 + y3 ** 2) ** (-0.5 * ell)
    Y1 = np.concatenate([y1, p1])
    S = np.concatenate([y2 ** 2 + y3 ** 2, p2 ** 2 + p3 ** 2])
    Wt = np.concatenate([wc, wp])

    values = []
    for r in out_grid.nodes:
        dist = np.sqrt((r - Y1) ** 2 + S)
        # the quarter y2, y3 >= 0 stands for 4 symmetric copies
        values.append(4.0 * np.sum(Wt * f.evaluate(dist)))
    values = np.array(values)

    if f.tail is not None and f.tail.A != 0.0:
        A, beta = f.tail.A, f.tail.beta
        if not beta > 3.0 - ell:
            msg = "The density tail s^{-%s} makes the Riesz potential infinite for ell = %s." % (str(beta), str(ell))
            raise DivergentTail(msg)
        x2 = out_grid.nodes ** 2
        lead = R ** (3.0 - ell - beta) / (beta + ell - 3.0)
        second = x2 / 6.0 * beta * (beta - 1.0) * R ** (1.0 - ell - beta) / (beta + ell - 1.0)
        values = values + 4.0 * np.pi * A * (lead + second)
    return RadialField(out_grid, values)


def bubble_newton_potential(r, Q=3.0):
    """
    closed form of |x|^{-1} * Z^6 in R^3 for the bubble Z = (1 + k r^2)^{-1/2}, k = Q/3

        q(r) = 4 pi (k^{-3/2} I(sqrt(k) r) / r + 1 / (4 k (1 + k r^2)^2)),
        I(t) = (arctan t + t (t^2 - 1) / (1 + t^2)^2) / 8

    Parameters
    ----------
    r: float or array-like

    Q: float, optional (default=3.0)

    Returns
    -------
    ndarray

    Examples
    --------
    >>> import numpy as np
    >>> from bubblelab.riesz import bubble_newton_potential
    >>> bool(np.isclose(bubble_newton_potential(0.0), np.pi))
    True
    """
    r = np.abs(np.asarray(r, dtype=float))
    k = float(Q) / 3.0
    t = np.sqrt(k) * r
    inner = np.zeros_like(r)
    pos = r > 0
    tp = t[pos]
    inner[pos] = k ** -1.5 * (np.arctan(tp) + tp * (tp ** 2 - 1.0) / (1.0 + tp ** 2) ** 2) / (8.0 * r[pos])
    return 4.0 * np.pi * (inner + 0.25 / (k * (1.0 + k * r ** 2) ** 2))

"""
The ring kernel of the Riesz potential and its product-integration table.

For radial f the Riesz potential reduces to a one-dimensional integral

    q(r) = int_0^inf W(r, s) f(s) s^{n-1} ds,   W(r, s) = int_{S^{n-1}} |r e_1 - s w|^{-ell} dw.
"""

from __future__ import annotations

import os
import struct
from functools import partial
from multiprocessing import Pool

import numpy as np
from scipy.integrate import quad
from scipy.special import hyp2f1, roots_legendre

from bubblelab.core.params import sphere_area
from bubblelab.utils.exceptions import InvalidParams, SingularPoint, GridMismatch, IoError
from bubblelab.utils.utilities import chunk, resolve_n_jobs


CACHE_MAGIC = b'BLRK'
CACHE_VERSION = 1
# magic, version, n, ell, N
_HEADER = struct.Struct('<4sIidI')
METHODS = ('hypergeometric', 'quadrature')


def _check_ell(n, ell):
    if not 0.0 < ell < n:
        msg = "The kernel power ell must be in (0, n) = (0, %i), got %s." % (n, str(ell))
        raise InvalidParams(msg)


def _angular_integral(r, s, n, ell):
    """ |S^{n-2}| int_0^pi (r^2 + s^2 - 2 r s cos t)^{-ell/2} sin^{n-2} t dt for r != s, both > 0 """
    def integrand(t):
        return (r * r + s * s - 2.0 * r * s * np.cos(t)) ** (-0.5 * ell) * np.sin(t) ** (n - 2)

    # the integrand peaks in a window of width |r - s| / sqrt(r s) around t = 0
    w = abs(r - s) / np.sqrt(r * s)
    breaks = [0.0]
    b = w
    while b < np.pi:
        breaks.append(b)
        b *= 4.0
    breaks.append(np.pi)
    total = 0.0
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        total += quad(integrand, lo, hi, epsabs=0.0, epsrel=1e-12, limit=200)[0]
    return sphere_area(n - 1) * total


def _diagonal_integral(r, n, ell):
    """ the ring kernel at r = s, finite only for ell < n - 1 """
    # (2 r^2 (1 - cos t))^{-ell/2} sin^{n-2} t = t^{n-2-ell} g(t) with g smooth on [0, pi]
    def g(t):
        if t == 0.0:
            return r ** (-ell)
        return (2.0 * r * r * (1.0 - np.cos(t)) / (t * t)) ** (-0.5 * ell) * (np.sin(t) / t) ** (n - 2)
    val = quad(g, 0.0, np.pi, weight='alg', wvar=(n - 2.0 - ell, 0.0), epsabs=0.0, epsrel=1e-12, limit=200)[0]
    return sphere_area(n - 1) * val


def ring_kernel(r, s, n, ell):
    """
    the spherical mean kernel W(r, s) = int_{S^{n-1}} |r e_1 - s w|^{-ell} dsigma(w)

    Parameters
    ----------
    r: float
        radius, r >= 0

    s: float
        radius, s >= 0, (r, s) != (0, 0)

    n: int
        dimension, n >= 3

    ell: float
        kernel power, 0 < ell < n

    Returns
    -------
    float
        For n = 3 the elementary closed form; otherwise adaptive angular quadrature with
        geometric subdivision near the peak at t = 0.

    Examples
    --------
    >>> from bubblelab.riesz import ring_kernel
    >>> round(ring_kernel(1.0, 1.0, 3, 1.0), 9)
    12.566370614
    """
    _check_ell(n, ell)
    r = float(r)
    s = float(s)
    if r < 0 or s < 0:
        msg = "The ring kernel radii must be non-negative, got (%s, %s)." % (str(r), str(s))
        raise InvalidParams(msg)
    if r == 0.0 and s == 0.0:
        msg = "The ring kernel is singular at r = s = 0."
        raise SingularPoint(msg)
    if r == 0.0 or s == 0.0:
        return sphere_area(n) * max(r, s) ** (-ell)
    if r == s and ell >= n - 1:
        msg = "The ring kernel diverges at r = s when ell >= n - 1 (ell = %s, n = %i)." % (str(ell), n)
        raise SingularPoint(msg)
    if n == 3:
        if ell == 2.0:
            return 2.0 * np.pi / (r * s) * np.log((r + s) / abs(r - s))
        return 2.0 * np.pi * ((r + s) ** (2.0 - ell) - abs(r - s) ** (2.0 - ell)) / (r * s * (2.0 - ell))
    if r == s:
        return _diagonal_integral(r, n, ell)
    return _angular_integral(r, s, n, ell)


def hypergeometric_kernel(r, s, n, ell):
    """
    vectorized ring kernel from the closed form

        W(r, s) = |S^{n-1}| R^{-ell} 2F1(ell/2, (ell-n+2)/2; n/2; (rho/R)^2),  R = max(r, s), rho = min(r, s)

    Parameters
    ----------
    r, s: float or ndarray
        broadcastable radii, never both zero

    n: int

    ell: float

    Returns
    -------
    ndarray
    """
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    R = np.maximum(r, s)
    rho = np.minimum(r, s)
    x = (rho / R) ** 2
    return sphere_area(n) * R ** (-ell) * hyp2f1(0.5 * ell, 0.5 * (ell - n + 2.0), 0.5 * n, x)


def cache_file_name(grid, n, ell):
    """ file name of a cached table, keyed by (n, ell, grid digest) """
    return "ring_n%i_ell%s_%s.bin" % (int(n), repr(float(ell)), grid.digest()[:16])


def _quadrature_kernel(r, s, n, ell):
    s = np.asarray(s, dtype=float)
    flat = [ring_kernel(r, si, n, ell) for si in s.ravel()]
    return np.array(flat).reshape(s.shape)


def _graded_rule(a, b, toward, x, w, levels):
    """ Gauss-Legendre points and weights on [a, b], sub-panels halving toward the endpoint 'toward' """
    h = b - a
    lo = np.concatenate([h * 0.5 ** np.arange(1, levels + 1), [0.0]])
    hi = np.concatenate([h * 0.5 ** np.arange(0, levels), [h * 0.5 ** levels]])
    # distances from the singular endpoint
    d = lo[:, None] + (hi - lo)[:, None] * x[None, :]
    wt = (hi - lo)[:, None] * w[None, :]
    d = d.ravel()
    wt = wt.ravel()
    if toward == a:
        t = a + d
    else:
        t = b - d
    return t, wt


def _table_row(i, nodes, n, ell, kernel, x, w, levels):
    r = nodes[i]
    N = nodes.shape[0] - 1
    a = nodes[:-1]
    b = nodes[1:]
    h = b - a
    t = a[:, None] + h[:, None] * x[None, :]
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        vals = kernel(r, t)
    vals = vals * t ** (n - 1) * (h[:, None] * w[None, :])
    left = np.sum(vals * (1.0 - x)[None, :], axis=1)
    right = np.sum(vals * x[None, :], axis=1)
    # the two intervals touching r_i carry the kernel singularity at s = r_i
    for k in (i - 1, i):
        if k < 0 or k >= N:
            continue
        tk, wk = _graded_rule(a[k], b[k], r, x, w, levels)
        keep = tk != r
        tk = tk[keep]
        wk = wk[keep]
        vk = kernel(r, tk) * tk ** (n - 1) * wk
        lam = (tk - a[k]) / h[k]
        left[k] = np.sum(vk * (1.0 - lam))
        right[k] = np.sum(vk * lam)
    row = np.zeros(N + 1)
    row[:-1] += left
    row[1:] += right
    return row


def _table_rows(rows, nodes, n, ell, method, gauss_points, levels):
    x, w = roots_legendre(gauss_points)
    x = 0.5 * (x + 1.0)
    w = 0.5 * w
    if method == 'hypergeometric':
        kernel = partial(hypergeometric_kernel, n=n, ell=ell)
    else:
        kernel = partial(_quadrature_kernel, n=n, ell=ell)
    return np.array([_table_row(i, nodes, n, ell, kernel, x, w, levels) for i in rows]).reshape(len(rows), -1)


class RingKernelTable(object):
    """
    Product-integration weights of the radial Riesz potential on a grid.

    The density is interpolated linearly between nodes (hat functions), so that

        q(r_i) = sum_j T_ij f(s_j)  ~  int_0^{r_max} W(r_i, s) f(s) s^{n-1} ds.

    Each interval is integrated with Gauss-Legendre points; the two intervals next to r_i
    use sub-panels graded geometrically toward r_i, where the kernel is singular or has a cusp.

    Parameters
    ----------
    grid: RadialGrid

    n: int
        dimension

    ell: float
        kernel power, 0 < ell < n

    weights: ndarray, shape (N+1, N+1)
        the table T

    Examples
    --------
    >>> from bubblelab.core import make_grid
    >>> from bubblelab.riesz import RingKernelTable
    >>> table = RingKernelTable.build(make_grid(10.0, 200), 3, 1.0)
    >>> table.weights.shape
    (201, 201)
    """
    def __init__(self, grid, n, ell, weights):
        _check_ell(n, ell)
        weights = np.asarray(weights, dtype=float)
        if weights.shape != (grid.N + 1, grid.N + 1):
            msg = "The kernel table has shape %s, the grid needs %s." % (str(weights.shape), str((grid.N + 1, grid.N + 1)))
            raise GridMismatch(msg)
        self.grid = grid
        self.n = int(n)
        self.ell = float(ell)
        weights.setflags(write=False)
        self.weights = weights

    @classmethod
    def build(cls, grid, n, ell, method='hypergeometric', n_jobs=1, gauss_points=6, graded_levels=30,
              verbose=False):
        """
        compute the table on a grid

        Parameters
        ----------
        grid: RadialGrid

        n: int

        ell: float

        method: str, optional (default='hypergeometric')
            'hypergeometric': the closed form of the ring kernel (fast).
            'quadrature': ring_kernel at every quadrature point (slow, used as a reference).

        n_jobs: int, optional (default=1)
            number of processes; rows are distributed in contiguous chunks. -1 means all cores.

        gauss_points: int, optional (default=6)
            Gauss-Legendre points per interval and per graded sub-panel

        graded_levels: int, optional (default=30)
            number of halvings of the sub-panels next to the diagonal

        verbose: bool, optional (default=False)

        Returns
        -------
        RingKernelTable
        """
        _check_ell(n, ell)
        if method not in METHODS:
            msg = "The table method must be one of %s, got '%s'." % (str(METHODS), str(method))
            raise InvalidParams(msg)
        nodes = grid.nodes
        n_jobs = resolve_n_jobs(n_jobs)
        if verbose:
            print('building the %s ring-kernel table (n=%i, ell=%s, N=%i) ...' % (method, n, str(ell), grid.N))
        row_function = partial(_table_rows, nodes=nodes, n=n, ell=ell, method=method,
                               gauss_points=gauss_points, levels=graded_levels)
        batches = list(chunk(range(grid.N + 1), n_jobs))
        if n_jobs == 1:
            blocks = [row_function(rows) for rows in batches]
        else:
            pool = Pool(processes=n_jobs)
            try:
                blocks = pool.map(row_function, batches)
            finally:
                pool.close()
                pool.join()
        weights = np.concatenate(blocks, axis=0)
        if verbose:
            print('[DONE]')
        return cls(grid, n, ell, weights)

    @classmethod
    def cached(cls, grid, n, ell, method='hypergeometric', n_jobs=1):
        """ the table of a grid, memoized on the grid object """
        return grid.cached(('ring_table', int(n), float(ell), method),
                           lambda: cls.build(grid, n, ell, method=method, n_jobs=n_jobs))

    def apply(self, values):
        """ sum_j T_ij f_j, row by row with numpy's pairwise summation """
        values = np.asarray(values, dtype=float)
        if values.shape[0] != self.weights.shape[1]:
            msg = "The density has %i values, the table expects %i." % (values.shape[0], self.weights.shape[1])
            raise GridMismatch(msg)
        return np.sum(self.weights * values[None, :], axis=1)

    def rescaled(self, eps):
        """
        the exact table of the grid scaled by eps

        W(eps r, eps s) = eps^{-ell} W(r, s) and s^{n-1} ds scales by eps^n, so T scales by eps^{n-ell}.
        """
        return RingKernelTable(self.grid.scaled(eps), self.n, self.ell, self.weights * eps ** (self.n - self.ell))

    def kernel_values(self):
        """
        the matrix W(r_i, s_j) of ring-kernel values at the node pairs

        entries with r_i = s_j hold the diagonal value when it is finite (ell < n-1) and inf otherwise;
        the entry (0, 0) is inf.
        """
        r = self.grid.nodes
        R, S = np.meshgrid(r, r, indexing='ij')
        with np.errstate(divide='ignore', invalid='ignore'):
            W = hypergeometric_kernel(R, S, self.n, self.ell)
        diag = np.inf
        if self.ell < self.n - 1:
            diag_ratio = hyp2f1(0.5 * self.ell, 0.5 * (self.ell - self.n + 2.0), 0.5 * self.n, 1.0)
            diag = sphere_area(self.n) * diag_ratio
        idx = np.arange(r.shape[0])
        W[idx, idx] = diag * np.where(r > 0, r, 1.0) ** (-self.ell)
        W[0, 0] = np.inf
        return W

    def cache_name(self):
        return cache_file_name(self.grid, self.n, self.ell)

    def save(self, path):
        """
        write the table in the binary cache format

        header (magic 'BLRK', version, n, ell, N) followed by the row-major float64 weights

        Parameters
        ----------
        path: str
            a file path, or a directory in which the keyed file name of cache_name() is used

        Returns
        -------
        str
            the path written
        """
        if os.path.isdir(path):
            path = os.path.join(path, self.cache_name())
        try:
            with open(path, 'wb') as fh:
                fh.write(_HEADER.pack(CACHE_MAGIC, CACHE_VERSION, self.n, self.ell, self.grid.N))
                fh.write(np.ascontiguousarray(self.weights, dtype='<f8').tobytes())
        except OSError as err:
            msg = "Could not write the kernel table to '%s': %s" % (path, str(err))
            raise IoError(msg)
        return path

    @classmethod
    def load(cls, path, grid):
        """
        read a table written by save for the given grid

        Parameters
        ----------
        path: str

        grid: RadialGrid
            the grid of the table; only its size is stored in the file, the caller keys files by grid digest

        Returns
        -------
        RingKernelTable
        """
        try:
            with open(path, 'rb') as fh:
                header = fh.read(_HEADER.size)
                payload = fh.read()
        except OSError as err:
            msg = "Could not read the kernel table '%s': %s" % (path, str(err))
            raise IoError(msg)
        if len(header) != _HEADER.size:
            msg = "The file '%s' is too short to be a kernel table." % path
            raise IoError(msg)
        magic, version, n, ell, N = _HEADER.unpack(header)
        if magic != CACHE_MAGIC or version != CACHE_VERSION:
            msg = "The file '%s' is not a version-%i kernel table." % (path, CACHE_VERSION)
            raise IoError(msg)
        if N != grid.N:
            msg = "The kernel table '%s' has N = %i, the grid has N = %i." % (path, N, grid.N)
            raise GridMismatch(msg)
        weights = np.frombuffer(payload, dtype='<f8')
        if weights.shape[0] != (N + 1) ** 2:
            msg = "The kernel table '%s' is truncated." % path
            raise IoError(msg)
        return cls(grid, n, ell, weights.reshape(N + 1, N + 1).copy())

    @classmethod
    def load_or_build(cls, cache_dir, grid, n, ell, **kwargs):
        """ read the keyed table from cache_dir when present, otherwise build and save it """
        path = os.path.join(cache_dir, cache_file_name(grid, n, ell))
        if os.path.exists(path):
            return cls.load(path, grid)
        table = cls.build(grid, n, ell, **kwargs)
        table.save(path)
        return table

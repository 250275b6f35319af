"""
Manufactured potentials and a stabilized, damped Picard iteration for the nonlocal equation

    Delta u + q_u u^{(n+2)/(n-2)} - V u = 0,   q_u = |x|^{-ell} * u^{2n/(n-2)}.

The iteration is experimental: nothing guarantees its convergence at the critical exponent.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import List

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from bubblelab.core.grid import RadialField, Tail
from bubblelab.core.operators import laplacian_matrix, laplacian_radial, derivative_matrix
from bubblelab.riesz.convolution import quotient_field
from bubblelab.riesz.kernel import RingKernelTable
from bubblelab.utils.exceptions import (NonPositive, NonPositivityDetected, NonConvergence,
                                        LinearSolveFailure, InvalidParams)


@dataclass
class SolveReport(object):
    """
    state of solve_nonlocal when it stopped

    Parameters
    ----------
    solution: RadialField
        the last iterate

    iterations: int

    final_update_norm: float
        sup |u_{k+1} - u_k| / sup u_k of the last step (inf before the first step)

    converged: bool

    tau: float
        the damping in use at the end

    history: list of float
        the relative update norms of all steps
    """
    solution: RadialField
    iterations: int
    final_update_norm: float
    converged: bool
    tau: float = 0.5
    history: List[float] = field(default_factory=list)

    def to_dict(self):
        return {'iterations': self.iterations, 'final_update_norm': self.final_update_norm,
                'converged': self.converged, 'tau': self.tau}


def manufacture_potential(u, params, order=2, table=None):
    """
    the potential for which a prescribed positive field solves the equation exactly

        V = (Delta u + q_u u^{(n+2)/(n-2)}) / u

    Parameters
    ----------
    u: RadialField
        positive, with a decaying tail model

    params: ModelParams

    order: int, optional (default=2)
        finite-difference order of the Laplacian

    table: RingKernelTable, optional (default=None)

    Returns
    -------
    RadialField
        V on u's grid; the tail extends the last sample with the decay power of u^{p-1}
    """
    if np.any(u.values <= 0):
        msg = "A potential can be manufactured from a positive field only."
        raise NonPositive(msg)
    p = params.p_crit
    q = quotient_field(u, params, table=table)
    lap = laplacian_radial(u, params.n, order)
    V = (lap.values + q.values * u.values ** p) / u.values
    tail = None
    if u.tail is not None and u.tail.A > 0:
        # Delta u / u and q_u u^{p-1} both fall off at least like u^{p-1}
        beta = (p - 1.0) * u.tail.beta
        tail = Tail(V[-1] * u.grid.r_max ** beta, beta)
    return RadialField(u.grid, V, tail)


def _quadrature_weights(grid, n):
    """ trapezoid weights of int f r^{n-1} dr on the nodes """
    r = grid.nodes
    h = np.diff(r)
    w = np.zeros_like(r)
    w[:-1] += 0.5 * h
    w[1:] += 0.5 * h
    return w * r ** (n - 1)


def _system_matrix(V, params, order):
    """ rows 0..N-1: Delta - V; row N: u'(r_N) - (2-n)/r_N u(r_N) = 0 """
    grid = V.grid
    n = params.n
    L = laplacian_matrix(grid, n, order)
    A = (L - sp.diags(V.values)).tolil()
    D1 = derivative_matrix(grid, order)
    A[grid.N, :] = D1[grid.N, :]
    A[grid.N, grid.N] = A[grid.N, grid.N] - (2.0 - n) / grid.r_max
    return L, A.tocsc()


def _with_decay_tail(grid, values, n):
    # the Robin condition makes u ~ u(r_max) (r_max / r)^{n-2} beyond the grid
    return RadialField(grid, values, Tail(values[-1] * grid.r_max ** (n - 2), n - 2.0))


def solve_nonlocal(V, params, guess, tol=1e-8, max_iter=100, tau=0.5, order=2, stabilize=True, table=None,
                   raise_on_failure=True, verbose=False):
    """
    damped Picard iteration for Delta u + q_u u^p - V u = 0 with the decay condition u'(r_max) = (2-n)/r_max u

    Each step solves the linear problem Delta u~ - V u~ = -q_k u_k^p (q_k the quotient of u_k),
    multiplies u~ by the stabilizing factor S^gamma with

        S = <u_k, (V - Delta) u_k> / <u_k, q_k u_k^p>,  gamma = d / (d - 1),  d = p + 2n/(n-2),

    which removes the unstable direction along u_k (the nonlinearity is homogeneous of degree d),
    and sets u_{k+1} = (1 - tau) u_k + tau u~. tau is halved whenever the update grows.

    Parameters
    ----------
    V: RadialField
        the potential

    params: ModelParams

    guess: RadialField
        positive initial iterate on V's grid

    tol: float, optional (default=1e-8)
        stop when sup |u_{k+1} - u_k| <= tol sup u_k

    max_iter: int, optional (default=100)

    tau: float, optional (default=0.5)
        initial damping in (0, 1]

    order: int, optional (default=2)
        finite-difference order; use the order the potential was manufactured with

    stabilize: bool, optional (default=True)
        False runs the bare damped iteration, which diverges along u_k at the critical exponent

    table: RingKernelTable, optional (default=None)

    raise_on_failure: bool, optional (default=True)
        raise NonConvergence at max_iter; otherwise warn and return the report

    verbose: bool, optional (default=False)

    Returns
    -------
    SolveReport
    """
    V.grid.check_same(guess.grid, 'initial guess')
    if not 0.0 < tau <= 1.0:
        msg = "The damping tau must be in (0, 1], got %s." % str(tau)
        raise InvalidParams(msg)
    if np.any(guess.values <= 0):
        msg = "The initial guess has non-positive samples."
        raise NonPositivityDetected(msg)
    grid = V.grid
    n = params.n
    p = params.p_crit
    if table is None:
        table = RingKernelTable.cached(grid, n, params.ell)
    L, A = _system_matrix(V, params, order)
    try:
        lu = splu(A)
    except RuntimeError as err:
        msg = "The linear two-point problem is singular: %s" % str(err)
        raise LinearSolveFailure(msg)
    weights = _quadrature_weights(grid, n)[:-1]
    d = p + params.p_conv
    gamma = d / (d - 1.0)
    B = sp.diags(V.values) - L

    u = guess if guess.tail is not None else _with_decay_tail(grid, guess.values, n)
    report = SolveReport(u, 0, float('inf'), False, tau)
    previous = float('inf')
    for it in range(1, max_iter + 1):
        q = quotient_field(u, params, table=table)
        nonlin = q.values * u.values ** p
        rhs = -nonlin
        rhs[-1] = 0.0
        new = lu.solve(rhs)
        if not np.all(np.isfinite(new)):
            msg = "The linear two-point problem returned non-finite values at iteration %i." % it
            raise LinearSolveFailure(msg)
        if stabilize:
            num = np.sum(weights * u.values[:-1] * (B @ u.values)[:-1])
            den = np.sum(weights * u.values[:-1] * nonlin[:-1])
            if num > 0 and den > 0:
                new = (num / den) ** gamma * new
        step = new - u.values
        raw = float(np.max(np.abs(step))) / u.sup()
        if raw > previous and tau > 1e-3:
            tau *= 0.5
            msg = "The update grew at iteration %i, the damping is halved to %s." % (it, str(tau))
            warnings.warn(msg, RuntimeWarning)
        values = u.values + tau * step
        update = tau * raw
        if np.any(values <= 0):
            msg = "The iterate lost positivity at iteration %i." % it
            raise NonPositivityDetected(msg)
        u = _with_decay_tail(grid, values, n)
        history = report.history + [update]
        report = SolveReport(u, it, update, update <= tol, tau, history)
        if verbose:
            print('iteration %i: update %.3e (tau = %s)' % (it, update, str(tau)))
        if update <= tol:
            return report
        previous = raw

    msg = "The fixed-point iteration did not reach the tolerance %.1e in %i iterations (last update %.3e)." \
          % (tol, max_iter, report.final_update_norm)
    if raise_on_failure:
        raise NonConvergence(msg, report)
    warnings.warn(msg, RuntimeWarning)
    return report

from __future__ import annotations

import numpy as np

from bubblelab.core.grid import make_grid
from bubblelab.core.regression import powerlaw_fit
from bubblelab.riesz.convolution import quotient_field
from bubblelab.riesz.kernel import RingKernelTable
from bubblelab.bubble.profile import BubbleSpec, bubble_profile
from bubblelab.utils.exceptions import InvalidParams, ScalingViolation


def quotient_scaling_deviations(eps_list, params, grid=None, n_jobs=1):
    """
    compare the quotients of the rescaled bubbles with the rescaled quotient of Z

        q_{z_eps}(r) = eps^{-ell} q_Z(r / eps)

    Every member is computed on the same grid; q_Z(r/eps) is read from the eps = 1 quotient by interpolation.

    Parameters
    ----------
    eps_list: list of float
        positive scales

    params: ModelParams
        n, Q and ell are used

    grid: RadialGrid, optional (default=None)
        the common grid; geometric on [0, 40] with 800 intervals when None

    n_jobs: int, optional (default=1)

    Returns
    -------
    sups: list of float
        sup q_{z_eps} for each eps, in the order of eps_list

    deviation: float
        max over members and sampled radii of |q_{z_eps}(r) - eps^{-ell} q_Z(r/eps)| relative to eps^{-ell} q_Z(0)
    """
    eps_list = [float(e) for e in eps_list]
    if any(not e > 0 for e in eps_list):
        msg = "The scales eps must be positive, got %s." % str(eps_list)
        raise InvalidParams(msg)
    if grid is None:
        grid = make_grid(40.0, 800, 'geometric')
    table = RingKernelTable.cached(grid, params.n, params.ell, n_jobs=n_jobs)
    base = BubbleSpec.from_params(params)
    q_one = quotient_field(bubble_profile(base, grid), params, table=table)
    ref0 = float(q_one.values[0])
    sups = []
    deviation = 0.0
    for e in eps_list:
        q_e = quotient_field(bubble_profile(base.with_eps(e), grid), params, table=table)
        sups.append(float(np.max(q_e.values)))
        # radii where both sides are resolved by grid nodes, away from the outer boundary
        r = grid.nodes[(grid.nodes <= 0.5 * grid.r_max) & (grid.nodes / e <= 0.5 * grid.r_max)]
        expected = e ** (-params.ell) * q_one.evaluate(r / e)
        got = q_e.values[:r.shape[0]]
        dev = float(np.max(np.abs(got - expected))) / (e ** (-params.ell) * ref0)
        deviation = max(deviation, dev)
    return sups, deviation


def quotient_scaling_check(eps_list, params, grid=None, tol=1e-3, n_jobs=1):
    """
    verify the scaling covariance of the quotient along the bubble family and fit sup q against eps

    Parameters
    ----------
    eps_list: list of float

    params: ModelParams

    grid: RadialGrid, optional (default=None)

    tol: float, optional (default=1e-3)
        admissible relative deviation from eps^{-ell} q_Z(r/eps)

    n_jobs: int, optional (default=1)

    Returns
    -------
    RateFit
        the fitted power of sup q_{z_eps} against eps, -ell in exact arithmetic

    Raises
    ------
    ScalingViolation
        when the pointwise identity fails beyond tol

    InsufficientData
        for fewer than 2 scales
    """
    sups, deviation = quotient_scaling_deviations(eps_list, params, grid, n_jobs)
    if deviation > tol:
        msg = "The quotient of the rescaled bubble deviates from eps^{-ell} q_Z(r/eps) by %.3e (tolerance %.1e)." \
              % (deviation, tol)
        raise ScalingViolation(msg)
    return powerlaw_fit(list(zip(eps_list, sups)))

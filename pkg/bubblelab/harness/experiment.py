"""
Manufactured blow-up families and the rate fits of their deviation from the bubble.

Each member u_eps = z_eps + eps^{(2-n)/2} c eps^2 phi(r/eps) solves the nonlocal equation exactly for the
manufactured potential V_eps = (Delta u + q_u u^p) / u, so the family is a ground truth for the
blow-up analysis; V_eps changes with eps.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field
from functools import partial
from multiprocessing import Pool
from typing import List, Optional

import numpy as np

from bubblelab.core.grid import RadialField, make_grid
from bubblelab.core.regression import RateFit, powerlaw_fit
from bubblelab.riesz.convolution import quotient_field
from bubblelab.riesz.kernel import RingKernelTable
from bubblelab.bubble.profile import BubbleSpec, bubble_profile
from bubblelab.solver.fixed_point import manufacture_potential
from bubblelab.harness.blowup import (normalize_blowup, rescaled_residual, deviation_from_bubble, c2_deviation,
                                      infer_sigma, a_coefficient, hypothesis_product)
from bubblelab.utils.exceptions import InsufficientData, InvalidParams, MaxNotAtOrigin
from bubblelab.utils.utilities import resolve_n_jobs, tot_exec_time_str


@dataclass(frozen=True)
class Perturbation(object):
    """
    the bump c phi(y) added to the rescaled bubble

    phi(y) = exp(1 - 1 / (1 - ((y - center)/width)^2)) on |y - center| < width and 0 elsewhere,
    so sup phi = phi(center) = 1. With center > width, phi vanishes near the origin and the maximum
    of every member stays at r = 0.

    Parameters
    ----------
    amplitude: float, optional (default=1.0)
        c

    center: float, optional (default=1.0)

    width: float, optional (default=0.5)
    """
    amplitude: float = 1.0
    center: float = 1.0
    width: float = 0.5

    def __post_init__(self):
        if not self.width > 0:
            msg = "The bump width must be positive, got %s." % str(self.width)
            raise InvalidParams(msg)
        if not self.center > self.width:
            msg = "The bump must vanish at the origin: center (%s) must exceed width (%s)." \
                  % (str(self.center), str(self.width))
            raise InvalidParams(msg)

    @classmethod
    def from_value(cls, value):
        """ None, a Perturbation, a dict, or an (amplitude, center, width) sequence """
        if value is None:
            return cls(0.0)
        if isinstance(value, cls):
            return value
        if isinstance(value, dict):
            return cls(**value)
        return cls(*value)

    def bump(self, y):
        y = np.asarray(y, dtype=float)
        s = (y - self.center) / self.width
        out = np.zeros_like(y)
        inside = np.abs(s) < 1.0
        out[inside] = np.exp(1.0 - 1.0 / (1.0 - s[inside] ** 2))
        return out

    def __call__(self, y):
        return self.amplitude * self.bump(y)


@dataclass
class BlowupExperiment(object):
    """
    the records of a manufactured family and the fits over eps

    Parameters
    ----------
    records: list of BlowupRecord
        ordered by decreasing eps

    fit: RateFit or None
        deviation A against eps (slope 2 expected); None when degenerate

    improved_fit: RateFit or None
        A / eps^{2+delta} against eps, only with delta > 0

    c2_fit: RateFit or None
        the C^2 deviation on the rescaled ball against eps

    sigma_fit: RateFit or None
        the deviation on the physical ball B_sigma against eps

    degenerate: bool
        all deviations are at rounding level (e.g. zero perturbation)

    y_grid: RadialGrid
        the common grid of the rescaled profiles
    """
    records: list
    fit: Optional[RateFit]
    improved_fit: Optional[RateFit] = None
    c2_fit: Optional[RateFit] = None
    sigma_fit: Optional[RateFit] = None
    degenerate: bool = False
    y_grid: object = None
    skipped: List[float] = field(default_factory=list)

    def rates_rows(self):
        """ rows of rates.csv: eps, deviation, hyp_product, a_decay_slope """
        rows = []
        for rec in self.records:
            fit = rec.linearized.a_decay_fit if rec.linearized is not None else None
            rows.append({'eps': rec.eps, 'deviation': rec.deviation_A, 'hyp_product': rec.hyp_product,
                         'a_decay_slope': float('nan') if fit is None else fit.slope})
        return rows


def family_member(eps, params, y_table, perturbation, order=2):
    """
    build the member of scale eps and run it through the blow-up pipeline

    Parameters
    ----------
    eps: float

    params: ModelParams

    y_table: RingKernelTable
        the table of the common rescaled grid; the member lives on its eps-scaled copy

    perturbation: Perturbation

    order: int, optional (default=2)

    Returns
    -------
    BlowupRecord
    """
    n = params.n
    table = y_table.rescaled(eps)
    grid = table.grid
    z = bubble_profile(BubbleSpec.from_params(params, eps), grid)
    bump = eps ** (0.5 * (2 - n)) * eps ** 2 * perturbation(grid.nodes / eps)
    u = RadialField(grid, z.values + bump, z.tail)
    V = manufacture_potential(u, params, order=order, table=table)
    q = quotient_field(u, params, table=table)

    rec = normalize_blowup(u, params)
    e = rec.eps
    v = rec.v
    rec.rescaled_residual = rescaled_residual(v, q.rescaled(e), V.rescaled(e), e, params, order)
    rec.deviation_A, rec.argmax_y = deviation_from_bubble(v, params, e)
    rec.lam = params.eta / e
    rec.c2_deviation = c2_deviation(v, params, rec.lam, order)
    if params.sigma is None:
        rec.sigma, rec.sigma_deviation = infer_sigma(v, params, e)
    else:
        rec.sigma = float(params.sigma)
        rec.sigma_deviation = deviation_from_bubble(v, params, e / params.sigma)[0]
    rec.linearized = a_coefficient(v, params, A=rec.deviation_A if rec.deviation_A > 0 else None)
    hyp = hypothesis_product(u, params, q=q)
    rec.hyp_product = hyp.product
    rec.decay_L = hyp.decay_L
    rec.quot_sup = hyp.quot_sup
    return rec


def _safe_member(eps, params, y_table, perturbation, order):
    try:
        return family_member(eps, params, y_table, perturbation, order)
    except MaxNotAtOrigin as err:
        return err


def _fit_or_none(pairs, name, degenerate_tol):
    pairs = [(e, a) for e, a in pairs if a is not None and a > degenerate_tol]
    if len(pairs) < 2:
        msg = "The %s fit is degenerate: fewer than 2 members above %.1e." % (name, degenerate_tol)
        warnings.warn(msg, RuntimeWarning)
        return None
    return powerlaw_fit(pairs)


def blowup_rate_experiment(eps_list, perturbation, params, y_max=None, N=1000, order=2, delta=None, n_jobs=1,
                           degenerate_tol=1e-10, table=None, verbose=False):
    """
    run the blow-up pipeline on a manufactured family and fit the deviation rate

    Parameters
    ----------
    eps_list: list of float
        at least 3 strictly decreasing scales

    perturbation: Perturbation, dict, tuple or None
        the bump c phi; None or amplitude 0 gives the pure bubble family

    params: ModelParams

    y_max: float, optional (default=None)
        end of the common rescaled grid; max(100, 2 max(1, r_ball) / min eps) when None

    N: int, optional (default=1000)
        intervals of the geometric rescaled grid

    order: int, optional (default=2)
        finite-difference order

    delta: float, optional (default=None)
        improved-decay exponent; params.delta when None, no probe when 0

    n_jobs: int, optional (default=1)
        members run in parallel processes; the records keep the order of eps_list

    degenerate_tol: float, optional (default=1e-10)
        deviations below this are rounding noise

    table: RingKernelTable, optional (default=None)
        table of the rescaled grid

    verbose: bool, optional (default=False)

    Returns
    -------
    BlowupExperiment
    """
    time_start = time.time()
    eps_list = [float(e) for e in eps_list]
    if len(eps_list) < 3:
        msg = "A blow-up rate needs at least 3 scales, got %i." % len(eps_list)
        raise InsufficientData(msg)
    if any(not e > 0 for e in eps_list) or any(b >= a for a, b in zip(eps_list[:-1], eps_list[1:])):
        msg = "The scales must be positive and strictly decreasing, got %s." % str(eps_list)
        raise InvalidParams(msg)
    perturbation = Perturbation.from_value(perturbation)
    delta = params.delta if delta is None else float(delta)
    if y_max is None:
        y_max = max(100.0, 2.0 * max(1.0, params.r_ball) / eps_list[-1])
    if table is None:
        y_grid = make_grid(y_max, N, 'geometric')
        table = RingKernelTable.cached(y_grid, params.n, params.ell, n_jobs=n_jobs)
    y_grid = table.grid
    if y_grid.r_max * eps_list[0] <= params.r_ball:
        msg = "The member of scale %s does not reach the ball radius %s." % (str(eps_list[0]), str(params.r_ball))
        raise InvalidParams(msg)

    run = partial(_safe_member, params=params, y_table=table, perturbation=perturbation, order=order)
    n_jobs = resolve_n_jobs(n_jobs)
    if n_jobs == 1:
        results = [run(e) for e in eps_list]
    else:
        pool = Pool(processes=min(n_jobs, len(eps_list)))
        try:
            results = pool.map(run, eps_list)
        finally:
            pool.close()
            pool.join()

    records = []
    skipped = []
    for e, res in zip(eps_list, results):
        if isinstance(res, MaxNotAtOrigin):
            warnings.warn("member eps = %s aborted: %s" % (str(e), str(res)), RuntimeWarning)
            skipped.append(e)
            continue
        records.append(res)
        if verbose:
            print('eps = %.4g: A = %.3e, rescaled residual = %.2e' % (e, res.deviation_A, res.rescaled_residual))

    degenerate = all(rec.deviation_A <= degenerate_tol for rec in records)
    fit = None
    improved = None
    if not degenerate:
        fit = _fit_or_none([(r.eps, r.deviation_A) for r in records], 'deviation', degenerate_tol)
        if delta > 0:
            improved = _fit_or_none([(r.eps, r.deviation_A / r.eps ** (2.0 + delta)) for r in records],
                                    'improved-decay', 0.0)
    else:
        warnings.warn("All deviations are below %.1e, the rate fit is degenerate." % degenerate_tol, RuntimeWarning)
    c2_fit = None if degenerate else _fit_or_none([(r.eps, r.c2_deviation) for r in records], 'C^2', degenerate_tol)
    sigma_fit = None if degenerate else _fit_or_none([(r.eps, r.sigma_deviation) for r in records], 'sigma-ball',
                                                     degenerate_tol)
    if verbose:
        print(tot_exec_time_str(time_start))
    return BlowupExperiment(records, fit, improved, c2_fit, sigma_fit, degenerate, y_grid, skipped)

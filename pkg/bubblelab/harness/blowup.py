"""
Blow-up diagnostics: rescaling to the unit-height profile v, its deviation from the bubble,
the coefficient a of the linearized equation and the hypotheses on the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field, asdict
from typing import Optional

import numpy as np
from scipy.special import roots_legendre

from bubblelab.core.grid import RadialField
from bubblelab.core.operators import laplacian_radial, radial_derivative, radial_second_derivative
from bubblelab.core.norms import holder_norm, decay_constant
from bubblelab.core.regression import RateFit, powerlaw_fit
from bubblelab.riesz.convolution import quotient_field, summarize_quotient
from bubblelab.bubble.profile import BubbleSpec
from bubblelab.utils.exceptions import MaxNotAtOrigin, NonPositive, DomainTooSmall, InsufficientData


@dataclass
class LinearizedDiagnostics(object):
    """
    the coefficient a = Q (v^p - Z^p) / (v - Z) and the normalized deviation w = (v - Z) / A

    Parameters
    ----------
    a_field: RadialField

    w_field: RadialField or None
        None when v = Z (A = 0)

    a_decay_fit: RateFit or None
        power law of |a| on the fit window, None when the window holds fewer than 2 positive samples

    w_bound_const: float
        sup |w| (1 + y)

    w_envelope_fit: RateFit or None
        power law of the running envelope sup_{s >= y} |w(s)| for y >= 1
    """
    a_field: RadialField
    w_field: Optional[RadialField]
    a_decay_fit: Optional[RateFit]
    w_bound_const: float
    w_envelope_fit: Optional[RateFit] = None


@dataclass
class HypothesisDiagnostics(object):
    """
    the quantities of the blow-up hypotheses for one field u

    product is ||q_u - Q||_{C^{0,alpha}(B_r)} (sup u)^{n-2}
    """
    product: float
    holder: float
    sup_u: float
    decay_L: float
    decay_member: bool
    quot_sup: float
    quot_member: bool

    def to_dict(self):
        return asdict(self)


@dataclass
class BlowupRecord(object):
    """
    diagnostics of one member of a blow-up family

    Parameters
    ----------
    eps: float
        (sup u)^{-2/(n-2)}

    sup_u: float

    v: RadialField
        eps^{(n-2)/2} u(eps y) on the grid y = r / eps

    the remaining fields are filled by the later stages of the pipeline
    """
    eps: float
    sup_u: float
    v: RadialField
    deviation_A: Optional[float] = None
    argmax_y: Optional[float] = None
    lam: Optional[float] = None
    hyp_product: Optional[float] = None
    decay_L: Optional[float] = None
    quot_sup: Optional[float] = None
    c2_deviation: Optional[float] = None
    sigma: Optional[float] = None
    sigma_deviation: Optional[float] = None
    rescaled_residual: Optional[float] = None
    linearized: Optional[LinearizedDiagnostics] = field(default=None, repr=False)

    def summary(self):
        """ the scalar diagnostics as a flat dict """
        keys = ('eps', 'sup_u', 'deviation_A', 'argmax_y', 'lam', 'hyp_product', 'decay_L', 'quot_sup',
                'c2_deviation', 'sigma', 'sigma_deviation', 'rescaled_residual')
        out = dict((k, getattr(self, k)) for k in keys)
        out['v0'] = float(self.v.values[0])
        out['v_min'] = float(np.min(self.v.values))
        out['v_max'] = float(np.max(self.v.values))
        if self.linearized is not None:
            fit = self.linearized.a_decay_fit
            out['a_decay_slope'] = None if fit is None else fit.slope
            out['w_bound_const'] = self.linearized.w_bound_const
        return out


def normalize_blowup(u, params, tol=1e-12):
    """
    rescale a field to unit height at the origin

        eps = (sup u)^{-2/(n-2)},  v(y) = eps^{(n-2)/2} u(eps y)

    Parameters
    ----------
    u: RadialField
        positive, maximal at r = 0

    params: ModelParams

    tol: float, optional (default=1e-12)
        relative excess of an off-origin sample over u(0) that still counts as a maximum at the origin

    Returns
    -------
    BlowupRecord
        with eps, sup_u and v; v(0) = 1 and 0 < v <= 1

    Examples
    --------
    >>> from bubblelab.core import make_grid, ModelParams
    >>> from bubblelab.bubble import BubbleSpec, bubble_profile
    >>> from bubblelab.harness import normalize_blowup
    >>> z = bubble_profile(BubbleSpec(6, 24.0, 0.1), make_grid(2.0, 200))
    >>> rec = normalize_blowup(z, ModelParams())
    >>> round(rec.sup_u, 9), round(rec.eps, 12)
    (100.0, 0.1)
    """
    if np.any(u.values <= 0):
        msg = "Blow-up rescaling needs a positive field."
        raise NonPositive(msg)
    n = params.n
    k = int(np.argmax(u.values))
    sup_u = float(u.values[k])
    if k != 0 and sup_u > u.values[0] * (1.0 + tol):
        msg = "The maximum of u is at r = %s, not at the origin; recenter the field first." % str(u.nodes[k])
        raise MaxNotAtOrigin(msg)
    sup_u = float(u.values[0])
    eps = sup_u ** (-2.0 / (n - 2.0))
    v = u.rescaled(eps, factor=1.0 / sup_u)
    return BlowupRecord(eps, sup_u, v)


def rescaled_residual(v, q_tilde, V_tilde, eps, params, order=2):
    """
    sup |Delta v + q~ v^p - eps^2 V~ v| on a common grid

    Parameters
    ----------
    v: RadialField

    q_tilde: RadialField
        the quotient of u read at r = eps y

    V_tilde: RadialField
        the potential read at r = eps y

    eps: float

    params: ModelParams

    order: int, optional (default=2)

    Returns
    -------
    float
    """
    v.grid.check_same(q_tilde.grid, 'rescaled quotient')
    v.grid.check_same(V_tilde.grid, 'rescaled potential')
    lap = laplacian_radial(v, params.n, order)
    res = lap.values + q_tilde.values * v.values ** params.p_crit - eps ** 2 * V_tilde.values * v.values
    return float(np.max(np.abs(res)))


def _ball_mask(v, radius, name):
    if v.grid.r_max < radius * (1.0 - 1e-12):
        msg = "The rescaled grid ends at %s, the %s needs radius %s." % (str(v.grid.r_max), name, str(radius))
        raise DomainTooSmall(msg)
    return v.grid.mask(radius)


def deviation_from_bubble(v, params, eps):
    """
    A = max_{|y| <= 1/eps} |v - Z| and its argmax

    Parameters
    ----------
    v: RadialField
        rescaled profile, grid reaching 1/eps

    params: ModelParams

    eps: float

    Returns
    -------
    tuple
        (A, y_argmax)
    """
    mask = _ball_mask(v, 1.0 / eps, 'deviation ball')
    y = v.nodes[mask]
    d = np.abs(v.values[mask] - BubbleSpec.from_params(params)(y))
    k = int(np.argmax(d))
    return float(d[k]), float(y[k])


def c2_deviation(v, params, lam, order=2):
    """ sup_{|y| <= lam} |v - Z| + |(v - Z)'| + |(v - Z)''| """
    mask = _ball_mask(v, lam, 'rescaled ball')
    d = RadialField(v.grid, v.values - BubbleSpec.from_params(params)(v.nodes))
    d1 = radial_derivative(d, order).values
    d2 = radial_second_derivative(d, order).values
    total = np.abs(d.values) + np.abs(d1) + np.abs(d2)
    return float(np.max(total[mask]))


def infer_sigma(v, params, eps, eta=None):
    """
    the physical ball radius sigma of the deviation estimate

    the largest R <= r_ball such that max_{|y| <= R/eps} |v - Z| stays below twice its value on |y| <= eta/eps

    Returns
    -------
    tuple
        (sigma, deviation on the ball of radius sigma/eps)
    """
    eta = params.eta if eta is None else eta
    spec = BubbleSpec.from_params(params)
    y = v.nodes
    running = np.maximum.accumulate(np.abs(v.values - spec(y)))
    inner = running[y <= eta / eps * (1.0 + 1e-12)]
    base = float(inner[-1]) if inner.shape[0] > 0 else 0.0
    ok = (y * eps <= params.r_ball * (1.0 + 1e-12)) & (running <= 2.0 * base + 1e-300)
    if not np.any(ok):
        return float(eta), base
    k = int(np.nonzero(ok)[0][-1])
    return float(y[k] * eps), float(running[k])


def a_coefficient(v, params, A=None, fit_range=None, taylor_threshold=1e-8, gauss_points=8):
    """
    the coefficient of the linearized equation for w = (v - Z)/A

        a = Q (v^p - Z^p) / (v - Z)

    Where |v - Z| < taylor_threshold the quotient is replaced by its integral form
    p Q int_0^1 (Z + t (v - Z))^{p-1} dt, which equals p Q Z^{p-1} at v = Z.

    Parameters
    ----------
    v: RadialField
        positive rescaled profile

    params: ModelParams

    A: float, optional (default=None)
        normalization of w; max |v - Z| over the grid when None

    fit_range: tuple, optional (default=None)
        (y_min, y_max) of the decay fit of |a|; (5, r_max/2) when None

    taylor_threshold: float, optional (default=1e-8)

    gauss_points: int, optional (default=8)

    Returns
    -------
    LinearizedDiagnostics
    """
    if np.any(v.values <= 0):
        msg = "The coefficient a is defined for positive profiles only."
        raise NonPositive(msg)
    p = params.p_crit
    Q = params.Q
    y = v.nodes
    Z = BubbleSpec.from_params(params)(y)
    d = v.values - Z
    quotient = np.abs(d) >= taylor_threshold
    a = np.empty_like(d)
    a[quotient] = Q * (v.values[quotient] ** p - Z[quotient] ** p) / d[quotient]
    x, w = roots_legendre(gauss_points)
    t = 0.5 * (x + 1.0)
    w = 0.5 * w
    small = ~quotient
    path = Z[small][:, None] + t[None, :] * d[small][:, None]
    a[small] = p * Q * np.sum(w[None, :] * path ** (p - 1.0), axis=1)
    a_field = RadialField(v.grid, a)

    if fit_range is None:
        fit_range = (5.0, 0.5 * v.grid.r_max)
    window = (y >= fit_range[0]) & (y <= fit_range[1]) & (np.abs(a) > 0)
    a_fit = None
    if np.count_nonzero(window) >= 2:
        a_fit = powerlaw_fit(np.column_stack([y[window], np.abs(a[window])]))

    if A is None:
        A = float(np.max(np.abs(d)))
    if not A > 0:
        return LinearizedDiagnostics(a_field, None, a_fit, 0.0, None)
    w_vals = d / A
    w_field = RadialField(v.grid, w_vals)
    bound = float(np.max(np.abs(w_vals) * (1.0 + y)))
    envelope = np.maximum.accumulate(np.abs(w_vals)[::-1])[::-1]
    beyond = (y >= 1.0) & (envelope > 0)
    env_fit = None
    if np.count_nonzero(beyond) >= 2:
        try:
            env_fit = powerlaw_fit(np.column_stack([y[beyond], envelope[beyond]]))
        except InsufficientData:
            env_fit = None
    return LinearizedDiagnostics(a_field, w_field, a_fit, bound, env_fit)


def hypothesis_product(u, params, q=None, table=None):
    """
    the blow-up hypothesis ||q_u - Q||_{C^{0,alpha}(B_r)} (sup u)^{n-2} with the class diagnostics

    Parameters
    ----------
    u: RadialField
        positive field with a decay tail

    params: ModelParams
        alpha, r_ball, rho, L_decay, K_quot are used

    q: RadialField, optional (default=None)
        the quotient of u on u's grid; computed when None

    table: RingKernelTable, optional (default=None)

    Returns
    -------
    HypothesisDiagnostics
    """
    if q is None:
        q = quotient_field(u, params, table=table)
    else:
        u.grid.check_same(q.grid, 'quotient')
    decay_L = decay_constant(u, params.rho, params.n)
    holder = holder_norm(RadialField(u.grid, q.values - params.Q), params.alpha, params.r_ball)
    sup_u = u.sup()
    summary = summarize_quotient(q, params)
    return HypothesisDiagnostics(product=holder * sup_u ** (params.n - 2), holder=holder, sup_u=sup_u,
                                 decay_L=decay_L, decay_member=bool(decay_L <= params.L_decay),
                                 quot_sup=summary.sup, quot_member=summary.member)

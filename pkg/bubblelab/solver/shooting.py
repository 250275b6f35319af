from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp

from bubblelab.core.grid import RadialGrid, RadialField, Tail
from bubblelab.bubble.profile import BubbleSpec
from bubblelab.utils.exceptions import InvalidInitial, InvalidParams


DECAYED = 'Decayed'
HIT_ZERO = 'HitZero'
BLEW_UP = 'BlewUp'
OUTCOMES = (DECAYED, HIT_ZERO, BLEW_UP)


@dataclass(frozen=True)
class ShootResult(object):
    """
    the outcome of one shot

    Parameters
    ----------
    profile: RadialField or None
        the solution on the grid nodes reached (all of them when outcome is 'Decayed');
        None when the shot stopped before the third node

    max_radius_reached: float

    outcome: str
        'Decayed' (positive up to r_max), 'HitZero' or 'BlewUp' (also when the integrator gives up)

    r_start: float
        the radius where the series start hands over to the integrator
    """
    profile: Optional[RadialField]
    max_radius_reached: float
    outcome: str
    r_start: float


def shoot_limit_profile(n, Q, v0, grid, r_start=None, rtol=1e-10, atol=1e-12, overflow=1e10):
    """
    integrate the radial limit equation v'' + (n-1)/r v' + Q v^{(n+2)/(n-2)} = 0 from v(0) = v0, v'(0) = 0

    The regular start v(r) = v0 - Q v0^p r^2 / (2n) is used up to r_start; beyond, RK45 with adaptive
    steps runs until r_max, a zero of v, or |v| > overflow.

    Parameters
    ----------
    n: int
        dimension

    Q: float
        positive quotient

    v0: float
        positive value at the origin

    grid: RadialGrid
        output nodes

    r_start: float, optional (default=None)
        series radius; 1e-4 times the natural length v0^{-2/(n-2)} when None

    rtol: float, optional (default=1e-10)

    atol: float, optional (default=1e-12)

    overflow: float, optional (default=1e10)

    Returns
    -------
    ShootResult

    Examples
    --------
    >>> from bubblelab.core import make_grid
    >>> from bubblelab.solver import shoot_limit_profile
    >>> res = shoot_limit_profile(6, 24.0, 1.0, make_grid(20.0, 400))
    >>> res.outcome
    'Decayed'
    """
    if not v0 > 0:
        msg = "The shooting value v0 must be positive, got %s." % str(v0)
        raise InvalidInitial(msg)
    if not Q > 0:
        msg = "The quotient Q must be positive, got %s." % str(Q)
        raise InvalidParams(msg)
    n = int(n)
    p = (n + 2.0) / (n - 2.0)
    if r_start is None:
        r_start = 1e-4 * v0 ** (-2.0 / (n - 2.0))
    r_start = min(float(r_start), 0.5 * grid.nodes[1])
    r = grid.nodes

    def rhs(t, y):
        v = y[0]
        # |v|^{p-1} v keeps the field finite past a zero
        return [y[1], -(n - 1.0) / t * y[1] - Q * np.abs(v) ** (p - 1.0) * v]

    def hit_zero(t, y):
        return y[0]
    hit_zero.terminal = True
    hit_zero.direction = -1

    def blow_up(t, y):
        return abs(y[0]) - overflow
    blow_up.terminal = True

    y0 = [v0 - Q * v0 ** p * r_start ** 2 / (2.0 * n), -Q * v0 ** p * r_start / n]
    t_eval = r[r > r_start]
    sol = solve_ivp(rhs, (r_start, grid.r_max), y0, method='RK45', t_eval=t_eval,
                    events=(hit_zero, blow_up), rtol=rtol, atol=atol)

    outcome = DECAYED
    reached = grid.r_max
    if sol.status == 1:
        if len(sol.t_events[0]) > 0:
            outcome = HIT_ZERO
            reached = float(sol.t_events[0][0])
        else:
            outcome = BLEW_UP
            reached = float(sol.t_events[1][0])
    elif sol.status == -1:
        # the step size collapsed, which happens when v runs away
        outcome = BLEW_UP
        reached = float(sol.t[-1]) if len(sol.t) > 0 else r_start
        msg = "The integrator stopped at r = %s: %s" % (str(reached), sol.message)
        warnings.warn(msg, RuntimeWarning)
    early = r[r <= r_start]
    values = np.concatenate([v0 - Q * v0 ** p * early ** 2 / (2.0 * n), sol.y[0]])
    m = values.shape[0]
    if m < 3:
        return ShootResult(None, reached, outcome, r_start)
    if outcome == DECAYED:
        tail = Tail(values[-1] * grid.r_max ** (n - 2), n - 2.0) if values[-1] > 0 else None
        profile = RadialField(grid, values, tail)
    else:
        profile = RadialField(RadialGrid(r[:m], grid.scheme), values)
    return ShootResult(profile, reached, outcome, r_start)


def shooting_family_deviation(n, Q, lam, grid, **kwargs):
    """
    sup |v - lam Z(lam^{2/(n-2)} r)| for the shot from v0 = lam

    the limit equation is invariant under v -> lam v(lam^{2/(n-2)} r), so the shots form the bubble family.
    """
    res = shoot_limit_profile(n, Q, lam, grid, **kwargs)
    if res.outcome != DECAYED:
        return float('inf')
    spec = BubbleSpec(n, Q)
    expected = lam * spec(lam ** (2.0 / (n - 2.0)) * grid.nodes)
    return float(np.max(np.abs(res.profile.values - expected)))

from __future__ import annotations

from dataclasses import dataclass, asdict

import numpy as np

from bubblelab.utils.exceptions import InsufficientData, NonPositive


@dataclass(frozen=True)
class RateFit(object):
    """
    least-squares power law y = exp(log_coeff) x^slope

    Parameters
    ----------
    slope: float

    log_coeff: float
        the intercept of the line in log-log coordinates

    max_residual: float
        max |log y - (log_coeff + slope log x)| over the data

    n_points: int
    """
    slope: float
    log_coeff: float
    max_residual: float
    n_points: int

    @property
    def coefficient(self):
        return float(np.exp(self.log_coeff))

    def predict(self, x):
        return self.coefficient * np.power(x, self.slope)

    def to_dict(self):
        d = asdict(self)
        d['coefficient'] = self.coefficient
        return d


def powerlaw_fit(points):
    """
    fit a power law to positive (x, y) pairs by a straight line through (log x, log y)

    Parameters
    ----------
    points: list of tuple or array-like of shape (m, 2)
        the data, all coordinates positive

    Returns
    -------
    RateFit

    Examples
    --------
    >>> from bubblelab.core import powerlaw_fit
    >>> fit = powerlaw_fit([(e, 3 * e**2) for e in (0.2, 0.1, 0.05)])
    >>> round(fit.slope, 12), round(fit.coefficient, 12)
    (2.0, 3.0)
    """
    data = np.asarray(points, dtype=float)
    if data.ndim != 2 or data.shape[0] < 2 or data.shape[1] != 2:
        msg = "A power-law fit needs at least 2 (x, y) points, got %i." % (data.shape[0] if data.ndim == 2 else data.size)
        raise InsufficientData(msg)
    if not np.all(data > 0):
        msg = "A power-law fit needs positive coordinates."
        raise NonPositive(msg)
    lx = np.log(data[:, 0])
    ly = np.log(data[:, 1])
    if np.ptp(lx) == 0.0:
        msg = "A power-law fit needs at least 2 distinct abscissas."
        raise InsufficientData(msg)
    slope, intercept = np.polyfit(lx, ly, 1)
    res = np.abs(ly - (intercept + slope * lx))
    return RateFit(float(slope), float(intercept), float(np.max(res)), int(data.shape[0]))

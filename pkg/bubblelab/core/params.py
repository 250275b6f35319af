from __future__ import annotations

import math
from dataclasses import dataclass, asdict, fields
from typing import Optional

from bubblelab.utils.exceptions import InvalidParams


def sphere_area(n):
    """
    surface area of the unit sphere S^{n-1} in R^n, i.e. 2 pi^{n/2} / Gamma(n/2)

    Parameters
    ----------
    n: int
        dimension of the ambient space (n >= 1)

    Returns
    -------
    float
        |S^{n-1}|; 2 for n=1, 2pi for n=2, 4pi for n=3
    """
    return 2.0 * math.pi ** (0.5 * n) / math.gamma(0.5 * n)


@dataclass(frozen=True)
class ModelParams(object):
    """
    The constants of the critical Schrodinger-Newton model and of its blow-up classes.

    Parameters
    ----------
    n: int, optional (default=6)
        dimension, 3 <= n <= 10

    ell: float, optional (default=1.0)
        power of the Riesz kernel |x|^{-ell}, 0 < ell < n

    Q: float, optional (default=24.0)
        the limit quotient; with Q = n(n-2) the bubble is (1 + |y|^2)^{(2-n)/2}

    alpha: float, optional (default=0.5)
        Holder exponent in (0, 1)

    r_ball: float, optional (default=1.0)
        radius of the ball on which the quotient hypothesis is measured

    rho: float, optional (default=0.5)
        onset radius of the decay class, rho < r_ball

    L_decay: float, optional (default=10.0)
        decay constant of the class C_{rho,L}

    K_quot: float, optional (default=1.0e6)
        quotient bound of the class Q_K

    eta: float, optional (default=0.5)
        shrink factor of the rescaled ball, lambda = eta / eps

    sigma: float or None, optional (default=None)
        physical ball radius; inferred from the deviation profile when None

    delta: float, optional (default=0.0)
        improved-decay exponent probed on blow-up families (0 disables the probe)

    Attributes
    ----------
    p_crit: float
        (n+2)/(n-2), the power of the local nonlinearity

    p_conv: float
        2n/(n-2), the power inside the convolution

    Examples
    --------
    >>> from bubblelab.core import ModelParams
    >>> params = ModelParams(n=6, ell=1.0, Q=24.0)
    >>> params.p_crit
    2.0
    """
    n: int = 6
    ell: float = 1.0
    Q: float = 24.0
    alpha: float = 0.5
    r_ball: float = 1.0
    rho: float = 0.5
    L_decay: float = 10.0
    K_quot: float = 1.0e6
    eta: float = 0.5
    sigma: Optional[float] = None
    delta: float = 0.0

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n:
            msg = "The dimension n must be an integer, got %s." % str(self.n)
            raise InvalidParams(msg)
        object.__setattr__(self, 'n', int(self.n))
        if not 3 <= self.n <= 10:
            msg = "The dimension n must be in [3, 10], got %i." % self.n
            raise InvalidParams(msg)
        if not 0.0 < self.ell < self.n:
            msg = "The kernel power ell must be in (0, n) = (0, %i), got %s." % (self.n, str(self.ell))
            raise InvalidParams(msg)
        if not self.Q > 0:
            msg = "The limit quotient Q must be positive, got %s." % str(self.Q)
            raise InvalidParams(msg)
        if not 0.0 < self.alpha < 1.0:
            msg = "The Holder exponent alpha must be in (0, 1), got %s." % str(self.alpha)
            raise InvalidParams(msg)
        for name in ('r_ball', 'rho', 'L_decay', 'K_quot', 'eta'):
            if not getattr(self, name) > 0:
                msg = "The parameter '%s' must be positive, got %s." % (name, str(getattr(self, name)))
                raise InvalidParams(msg)
        if self.sigma is not None and not self.sigma > 0:
            msg = "The physical ball radius sigma must be positive or None, got %s." % str(self.sigma)
            raise InvalidParams(msg)
        if not self.rho < self.r_ball:
            msg = "The decay onset rho (%s) must be smaller than the ball radius r_ball (%s)." \
                  % (str(self.rho), str(self.r_ball))
            raise InvalidParams(msg)
        if not self.delta >= 0:
            msg = "The improved-decay exponent delta must be non-negative, got %s." % str(self.delta)
            raise InvalidParams(msg)

    @property
    def p_crit(self):
        return (self.n + 2.0) / (self.n - 2.0)

    @property
    def p_conv(self):
        return 2.0 * self.n / (self.n - 2.0)

    @property
    def bubble_k(self):
        """ the coefficient Q / (n(n-2)) of |y|^2 inside the bubble """
        return self.Q / (self.n * (self.n - 2.0))

    def replace(self, **changes):
        """ a copy with some fields changed (validated again) """
        values = self.to_dict()
        values.update(changes)
        return ModelParams(**values)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        """
        build the parameters from a (json) dictionary

        Parameters
        ----------
        d: dict
            keys must be field names of ModelParams; missing keys take the defaults

        Returns
        -------
        ModelParams
        """
        names = set(f.name for f in fields(cls))
        unknown = sorted(k for k in d if k not in names)
        if len(unknown) > 0:
            msg = "Unknown model parameters: %s. Legit names are: %s" % (str(unknown), str(sorted(names)))
            raise InvalidParams(msg)
        return cls(**d)

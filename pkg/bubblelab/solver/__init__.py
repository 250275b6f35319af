"""
The 'bubblelab.solver' module includes:
    - ShootResult: :class:`~bubblelab.solver.ShootResult`
    - shoot_limit_profile: :func:`~bubblelab.solver.shoot_limit_profile`
    - shooting_family_deviation: :func:`~bubblelab.solver.shooting_family_deviation`
    - SolveReport: :class:`~bubblelab.solver.SolveReport`
    - manufacture_potential: :func:`~bubblelab.solver.manufacture_potential`
    - solve_nonlocal: :func:`~bubblelab.solver.solve_nonlocal`
"""

from .shooting import DECAYED
from .shooting import HIT_ZERO
from .shooting import BLEW_UP
from .shooting import ShootResult
from .shooting import shoot_limit_profile
from .shooting import shooting_family_deviation

from .fixed_point import SolveReport
from .fixed_point import manufacture_potential
from .fixed_point import solve_nonlocal

__all__ = [
    'DECAYED',
    'HIT_ZERO',
    'BLEW_UP',
    'ShootResult',
    'shoot_limit_profile',
    'shooting_family_deviation',
    'SolveReport',
    'manufacture_potential',
    'solve_nonlocal',
]

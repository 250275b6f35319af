"""
The 'bubblelab.utils' module includes the error types, tot_exec_time_str, chunk, resolve_n_jobs,
isfloat, isint, value, update_default_kwargs and set_dotted.
"""

from .utilities import tot_exec_time_str
from .utilities import chunk
from .utilities import resolve_n_jobs

from .validation import isfloat
from .validation import isint
from .validation import value
from .validation import update_default_kwargs
from .validation import set_dotted

from .exceptions import BubbleLabError
from .exceptions import InvalidGrid
from .exceptions import InvalidParams
from .exceptions import OutOfRange
from .exceptions import NoDecay
from .exceptions import InsufficientData
from .exceptions import NonPositive
from .exceptions import SingularPoint
from .exceptions import DivergentTail
from .exceptions import DivergentIntegral
from .exceptions import TooLarge
from .exceptions import InvalidInitial
from .exceptions import NonConvergence
from .exceptions import NonPositivityDetected
from .exceptions import LinearSolveFailure
from .exceptions import GridMismatch
from .exceptions import DomainTooSmall
from .exceptions import MaxNotAtOrigin
from .exceptions import ScalingViolation
from .exceptions import ConfigError
from .exceptions import ExperimentFailure
from .exceptions import IoError

__all__ = [
    'tot_exec_time_str',
    'chunk',
    'resolve_n_jobs',
    'isfloat',
    'isint',
    'value',
    'update_default_kwargs',
    'set_dotted',
    'BubbleLabError',
    'InvalidGrid',
    'InvalidParams',
    'OutOfRange',
    'NoDecay',
    'InsufficientData',
    'NonPositive',
    'SingularPoint',
    'DivergentTail',
    'DivergentIntegral',
    'TooLarge',
    'InvalidInitial',
    'NonConvergence',
    'NonPositivityDetected',
    'LinearSolveFailure',
    'GridMismatch',
    'DomainTooSmall',
    'MaxNotAtOrigin',
    'ScalingViolation',
    'ConfigError',
    'ExperimentFailure',
    'IoError',
]

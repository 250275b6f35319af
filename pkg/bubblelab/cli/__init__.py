"""
The 'bubblelab.cli' module includes:
    - ExperimentConfig: :class:`~bubblelab.cli.ExperimentConfig`
    - Report, Check, emit
    - run, main: the `bubble-lab` command
"""

from .config import EXPERIMENTS
from .config import ExperimentConfig

from .report import Check
from .report import Report
from .report import emit

from .main import run
from .main import main

__all__ = [
    'EXPERIMENTS',
    'ExperimentConfig',
    'Check',
    'Report',
    'emit',
    'run',
    'main',
]

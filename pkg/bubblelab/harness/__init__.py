"""
The 'bubblelab.harness' module includes:
    - BlowupRecord: :class:`~bubblelab.harness.BlowupRecord`
    - LinearizedDiagnostics, HypothesisDiagnostics
    - normalize_blowup, rescaled_residual, deviation_from_bubble, c2_deviation, infer_sigma
    - a_coefficient, hypothesis_product
    - EnergyBalance, energy_terms, energy_identity_gap, nonlocal_residual
    - Perturbation, BlowupExperiment, family_member, blowup_rate_experiment
"""

from .blowup import BlowupRecord
from .blowup import LinearizedDiagnostics
from .blowup import HypothesisDiagnostics
from .blowup import normalize_blowup
from .blowup import rescaled_residual
from .blowup import deviation_from_bubble
from .blowup import c2_deviation
from .blowup import infer_sigma
from .blowup import a_coefficient
from .blowup import hypothesis_product

from .energy import EnergyBalance
from .energy import energy_terms
from .energy import energy_identity_gap
from .energy import nonlocal_residual

from .experiment import Perturbation
from .experiment import BlowupExperiment
from .experiment import family_member
from .experiment import blowup_rate_experiment

__all__ = [
    'BlowupRecord',
    'LinearizedDiagnostics',
    'HypothesisDiagnostics',
    'normalize_blowup',
    'rescaled_residual',
    'deviation_from_bubble',
    'c2_deviation',
    'infer_sigma',
    'a_coefficient',
    'hypothesis_product',
    'EnergyBalance',
    'energy_terms',
    'energy_identity_gap',
    'nonlocal_residual',
    'Perturbation',
    'BlowupExperiment',
    'family_member',
    'blowup_rate_experiment',
]

"""
The bubblelab.datasets module includes (please click on links adjacent to function names for more information):
    - load_config_preset: :func:`~bubblelab.datasets.load_config_preset`
    - list_config_presets: :func:`~bubblelab.datasets.list_config_presets`
"""

from .base import load_config_preset
from .base import list_config_presets

__all__ = [
    'load_config_preset',
    'list_config_presets',
]

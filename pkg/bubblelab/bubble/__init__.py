"""
The 'bubblelab.bubble' module includes:
    - BubbleSpec: :class:`~bubblelab.bubble.BubbleSpec`
    - bubble_profile, bubble_derivative, kernel_modes
    - bubble_residual_field, bubble_residual, linearized_residual
    - quotient_scaling_deviations, quotient_scaling_check
"""

from .profile import BubbleSpec
from .profile import bubble_profile
from .profile import bubble_derivative
from .profile import kernel_modes
from .profile import bubble_residual_field
from .profile import bubble_residual
from .profile import linearized_residual

from .scaling import quotient_scaling_deviations
from .scaling import quotient_scaling_check

__all__ = [
    'BubbleSpec',
    'bubble_profile',
    'bubble_derivative',
    'kernel_modes',
    'bubble_residual_field',
    'bubble_residual',
    'linearized_residual',
    'quotient_scaling_deviations',
    'quotient_scaling_check',
]

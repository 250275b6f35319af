"""
The 'bubblelab.riesz' module includes:
    - ring_kernel: :func:`~bubblelab.riesz.ring_kernel`
    - hypergeometric_kernel: :func:`~bubblelab.riesz.hypergeometric_kernel`
    - RingKernelTable: :class:`~bubblelab.riesz.RingKernelTable`
    - riesz_convolve: :func:`~bubblelab.riesz.riesz_convolve`
    - quotient_field: :func:`~bubblelab.riesz.quotient_field`
    - summarize_quotient: :func:`~bubblelab.riesz.summarize_quotient`
    - riesz_oracle: :func:`~bubblelab.riesz.riesz_oracle`
    - bubble_newton_potential: :func:`~bubblelab.riesz.bubble_newton_potential`
"""

from .kernel import ring_kernel
from .kernel import hypergeometric_kernel
from .kernel import cache_file_name
from .kernel import RingKernelTable

from .convolution import tail_correction
from .convolution import riesz_convolve
from .convolution import quotient_field
from .convolution import QuotientSummary
from .convolution import summarize_quotient

from .oracle import riesz_oracle
from .oracle import bubble_newton_potential

__all__ = [
    'ring_kernel',
    'hypergeometric_kernel',
    'cache_file_name',
    'RingKernelTable',
    'tail_correction',
    'riesz_convolve',
    'quotient_field',
    'QuotientSummary',
    'summarize_quotient',
    'riesz_oracle',
    'bubble_newton_potential',
]

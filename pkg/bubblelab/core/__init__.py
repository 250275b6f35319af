"""
The 'bubblelab.core' module includes:
    - ModelParams: :class:`~bubblelab.core.ModelParams`
    - sphere_area: :func:`~bubblelab.core.sphere_area`
    - RadialGrid, make_grid, Tail, RadialField
    - fd_weights, derivative_matrix, laplacian_matrix, laplacian_radial, radial_derivative,
      radial_second_derivative, sector_laplacian
    - holder_seminorm, holder_norm, decay_constant, tail_integral, radial_integral
    - RateFit, powerlaw_fit
"""

from .params import ModelParams
from .params import sphere_area

from .grid import RadialGrid
from .grid import make_grid
from .grid import Tail
from .grid import RadialField

from .operators import fd_weights
from .operators import derivative_matrix
from .operators import laplacian_matrix
from .operators import laplacian_radial
from .operators import radial_derivative
from .operators import radial_second_derivative
from .operators import sector_laplacian

from .norms import holder_seminorm
from .norms import holder_norm
from .norms import decay_constant
from .norms import tail_integral
from .norms import radial_integral

from .regression import RateFit
from .regression import powerlaw_fit

__all__ = [
    'ModelParams',
    'sphere_area',
    'RadialGrid',
    'make_grid',
    'Tail',
    'RadialField',
    'fd_weights',
    'derivative_matrix',
    'laplacian_matrix',
    'laplacian_radial',
    'radial_derivative',
    'radial_second_derivative',
    'sector_laplacian',
    'holder_seminorm',
    'holder_norm',
    'decay_constant',
    'tail_integral',
    'radial_integral',
    'RateFit',
    'powerlaw_fit',
]

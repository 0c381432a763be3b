from .closed_form import ClosedFormConstants, closed_form_constants, closed_form_estimate
from .estimates import (
    Formula, SigmaMode, hardy_ramanujan, kappa2, partition_saddle_estimate, relative_error,
    theorem1_estimate,
)
from .special import poisson_constant_C, special_gamma, special_zeta

__all__ = [
    'ClosedFormConstants', 'Formula', 'SigmaMode', 'closed_form_constants',
    'closed_form_estimate', 'hardy_ramanujan', 'kappa2', 'partition_saddle_estimate',
    'poisson_constant_C', 'relative_error', 'special_gamma', 'special_zeta',
    'theorem1_estimate',
]

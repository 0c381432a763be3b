from .moments import ComponentSums, mean_M, rho_l, variance_B2
from .solver import (
    SaddleSolution, leading_delta, partition_sigma_asymptotic, saddle_tolerance, solve_saddle,
)
from .tilted import TiltedDistribution, exact_point_prob, khintchine_reconstruct, tilted_pmf

__all__ = [
    'ComponentSums', 'SaddleSolution', 'TiltedDistribution', 'exact_point_prob',
    'khintchine_reconstruct', 'leading_delta', 'mean_M', 'partition_sigma_asymptotic',
    'rho_l', 'saddle_tolerance', 'solve_saddle', 'tilted_pmf', 'variance_B2',
]

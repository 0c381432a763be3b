from .ratio import LimitLawVerdict, RatioReport, limit_law_check, observed_threshold, ratio_report
from .scaling import (
    FittedParams, Quantity, ScalingReport, TrendReport, expected_slope, exponent_identity,
    fit_expansive_params, local_limit_report, oscillation_band, scaling_exponent,
    scaling_report, within_tolerance,
)

__all__ = [
    'FittedParams', 'LimitLawVerdict', 'Quantity', 'RatioReport', 'ScalingReport',
    'TrendReport', 'expected_slope', 'exponent_identity', 'fit_expansive_params',
    'limit_law_check', 'local_limit_report', 'observed_threshold', 'oscillation_band',
    'ratio_report', 'scaling_exponent', 'scaling_report', 'within_tolerance',
]

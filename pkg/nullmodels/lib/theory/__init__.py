from .constants import (
    thresholds,
    plateau_scale,
    tail_scale,
    hrg_integral,
    hrg_integral_parts,
    tail_constant,
    plateau_prefactor,
    stable_index,
    expected_ak_constant,
    ck_relation,
    ck_direct,
)
from .predictions import predict, predicted_curve, heuristic_annd, plateau_quantiles

__all__ = [
    'thresholds',
    'plateau_scale',
    'tail_scale',
    'hrg_integral',
    'hrg_integral_parts',
    'tail_constant',
    'plateau_prefactor',
    'stable_index',
    'expected_ak_constant',
    'ck_relation',
    'ck_direct',
    'predict',
    'predicted_curve',
    'heuristic_annd',
    'plateau_quantiles'
]

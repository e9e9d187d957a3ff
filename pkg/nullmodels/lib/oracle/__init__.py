from .enumeration import (
    MatchingEnsemble,
    enumerate_matchings,
    double_factorial,
    exact_cm_edge_probability,
    exact_cm_erased_degree_mean,
    exact_cm_annd,
)
from .naive import naive_generate_and_stats, naive_annd

__all__ = [
    'MatchingEnsemble',
    'enumerate_matchings',
    'double_factorial',
    'exact_cm_edge_probability',
    'exact_cm_erased_degree_mean',
    'exact_cm_annd',
    'naive_generate_and_stats',
    'naive_annd'
]

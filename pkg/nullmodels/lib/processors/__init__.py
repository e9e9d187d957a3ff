from .annd import (
    annd_curve,
    annd_band,
    annd_band_curve,
    epsilon_rule_auto,
    size_biased_mean,
    contribution_profile,
    DegreeBands,
)
from .clustering import clustering_curve, local_clustering, local_triangles
from .binning import bin_index, bin_center, binned_annd, binned_clustering
from .fitting import fit_loglog_slope
from .ensemble import StatProcessor, StatService, ensemble_run, summarize

__all__ = [
    'annd_curve',
    'annd_band',
    'annd_band_curve',
    'epsilon_rule_auto',
    'size_biased_mean',
    'contribution_profile',
    'DegreeBands',
    'clustering_curve',
    'local_clustering',
    'local_triangles',
    'bin_index',
    'bin_center',
    'binned_annd',
    'binned_clustering',
    'fit_loglog_slope',
    'StatProcessor',
    'StatService',
    'ensemble_run',
    'summarize'
]

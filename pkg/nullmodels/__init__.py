from .config import Config
from .lib.models import SimpleGraph, build_simple_graph, degree_histogram, PowerLawSpec, HrgParams, ModelSpec, ExperimentConfig
from .lib.sampling import SeedSpec
from .lib.generators import generate, generate_ecm, generate_irg, generate_hrg
from .lib.processors import annd_curve, annd_band, clustering_curve, ensemble_run, fit_loglog_slope
from .lib.theory import predict

__all__ = [
    'Config',
    'SimpleGraph',
    'build_simple_graph',
    'degree_histogram',
    'PowerLawSpec',
    'HrgParams',
    'ModelSpec',
    'ExperimentConfig',
    'SeedSpec',
    'generate',
    'generate_ecm',
    'generate_irg',
    'generate_hrg',
    'annd_curve',
    'annd_band',
    'clustering_curve',
    'ensemble_run',
    'fit_loglog_slope',
    'predict'
]

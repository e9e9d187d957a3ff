from .kernels import (
    irg_connection_prob,
    ecm_connection_prob,
    hrg_connection_prob,
    hyperbolic_distance,
    max_connection_angle,
)
from .ecm import generate_ecm, generate_ecm_from_degrees
from .irg import generate_irg, generate_irg_from_weights
from .hrg import generate_hrg
from .service import GeneratorService, ModelOutcome, generate

__all__ = [
    'irg_connection_prob',
    'ecm_connection_prob',
    'hrg_connection_prob',
    'hyperbolic_distance',
    'max_connection_angle',
    'generate_ecm',
    'generate_ecm_from_degrees',
    'generate_irg',
    'generate_irg_from_weights',
    'generate_hrg',
    'GeneratorService',
    'ModelOutcome',
    'generate'
]

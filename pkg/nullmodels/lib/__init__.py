"""Library modules for null-model generation and degree-correlation statistics."""

from .errors import NullModelError, ConfigError, GraphIOError, EdgeListParseError, DomainError
from .fetch import read_edge_list, write_edge_list
from .generators import GeneratorService, generate
from .models import SimpleGraph, ModelSpec, ExperimentConfig
from .processors import StatService, ensemble_run

__all__ = [
    'NullModelError',
    'ConfigError',
    'GraphIOError',
    'EdgeListParseError',
    'DomainError',
    'read_edge_list',
    'write_edge_list',
    'GeneratorService',
    'generate',
    'SimpleGraph',
    'ModelSpec',
    'ExperimentConfig',
    'StatService',
    'ensemble_run'
]

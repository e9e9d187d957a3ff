from .seeds import SeedSpec, Stream, row_uniforms
from .powerlaw import law_constants, sample_degree_sequence, sample_power_law, sample_weights, evenize
from .hyperbolic import sample_hrg_coordinates, radial_cdf, types_from_radii
from .stable import sample_stable

__all__ = [
    'SeedSpec',
    'Stream',
    'row_uniforms',
    'law_constants',
    'sample_degree_sequence',
    'sample_power_law',
    'sample_weights',
    'evenize',
    'sample_hrg_coordinates',
    'radial_cdf',
    'types_from_radii',
    'sample_stable'
]

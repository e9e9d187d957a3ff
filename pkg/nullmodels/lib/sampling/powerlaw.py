import logging
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.special import zeta

from ..errors import DomainError
from ..models.schemas import PowerLawSpec, check_tau
from .seeds import SeedSpec, Stream

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def _constants(tau: float, x_min: int) -> Tuple[float, float]:
    check_tau(tau)
    c = (tau - 1.0) * x_min ** (tau - 1.0)
    # E[D] = sum_{k>=1} P(D >= k); below x_min every term is 1
    mu = (x_min - 1) + x_min ** (tau - 1.0) * float(zeta(tau - 1.0, x_min))
    return c, mu


def law_constants(spec: PowerLawSpec) -> Tuple[float, float]:
    """Tail density constant c and mean mu of the floor-Pareto law"""
    return _constants(float(spec.tau), int(spec.x_min))


def sample_power_law(spec: PowerLawSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw floor(x_min * U^(-1/(tau-1))) for n independent uniforms U in (0, 1]"""
    u = 1.0 - rng.random(n)
    return np.floor(spec.x_min * u ** (-1.0 / (spec.tau - 1.0))).astype(np.int64)


def evenize(degrees: np.ndarray) -> np.ndarray:
    """Add one half-edge to the last vertex when the total is odd"""
    degrees = np.array(degrees, dtype=np.int64)
    if degrees.size and degrees.sum() % 2:
        degrees[-1] += 1
    return degrees


def sample_degree_sequence(spec: PowerLawSpec, n: int, seed: SeedSpec) -> np.ndarray:
    if n < 1:
        raise DomainError(f"Need at least one vertex, got n={n}")
    degrees = evenize(sample_power_law(spec, n, seed.rng(Stream.DEGREES)))
    logger.debug(f"Sampled {n} degrees (tau={spec.tau}): sum={int(degrees.sum())}, max={int(degrees.max())}")
    return degrees


def sample_weights(spec: PowerLawSpec, n: int, seed: SeedSpec) -> np.ndarray:
    return sample_power_law(spec, n, seed.rng(Stream.WEIGHTS)).astype(np.float64)

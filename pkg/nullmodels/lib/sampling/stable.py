import math

import numpy as np

from ..errors import DomainError
from .seeds import SeedSpec, Stream


def stable_transform(alpha: float, u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Chambers-Mallows-Stuck map for S_alpha(1, 1, 0) in the one-parametrization.

    u is uniform on (-pi/2, pi/2), w is a rate-1 exponential.
    """
    beta = 1.0
    if alpha == 1.0:
        half_pi = np.pi / 2.0
        t1 = (half_pi + beta * u) * np.tan(u)
        t2 = beta * np.log((half_pi * w * np.cos(u)) / (half_pi + beta * u))
        return (2.0 / np.pi) * (t1 - t2)

    theta = math.atan(beta * math.tan(np.pi * alpha / 2.0)) / alpha
    t1 = np.sin(alpha * (u + theta)) / (math.cos(alpha * theta) * np.cos(u)) ** (1.0 / alpha)
    t2 = (np.cos(alpha * theta + (alpha - 1.0) * u) / w) ** ((1.0 - alpha) / alpha)
    return t1 * t2


def sample_stable(alpha: float, seed: SeedSpec, count: int) -> np.ndarray:
    """i.i.d. draws of the totally skewed stable law with sigma=1, beta=1, shift 0"""
    if not 0.0 < alpha <= 2.0:
        raise DomainError(f"Stable index must lie in (0, 2], got {alpha}")
    rng = seed.rng(Stream.STABLE)
    u = np.pi * (rng.random(count) - 0.5)
    w = rng.standard_exponential(count)
    samples = stable_transform(alpha, u, w)
    if alpha < 1.0:
        # support is [0, inf); rounding can leave tiny negatives near u = -pi/2
        np.maximum(samples, 0.0, out=samples)
    return samples

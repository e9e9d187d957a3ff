import logging
from typing import Tuple

import numpy as np

from ..models.schemas import HrgParams
from .seeds import SeedSpec, Stream

logger = logging.getLogger(__name__)


def radial_cdf(r: np.ndarray, params: HrgParams) -> np.ndarray:
    """P(radius <= r) for density alpha*sinh(alpha r)/(cosh(alpha R)-1) on [0, R]"""
    a, R = params.alpha, params.R
    return (np.cosh(a * np.asarray(r)) - 1.0) / (np.cosh(a * R) - 1.0)


def radii_from_uniforms(u: np.ndarray, params: HrgParams) -> np.ndarray:
    a, R = params.alpha, params.R
    r = np.arccosh(1.0 + u * (np.cosh(a * R) - 1.0)) / a
    return np.clip(r, 0.0, R)


def types_from_radii(r: np.ndarray, params: HrgParams) -> np.ndarray:
    """t = exp((R - r) / 2), the weight-like type of a vertex"""
    return np.exp((params.R - np.asarray(r)) / 2.0)


def sample_hrg_coordinates(params: HrgParams, seed: SeedSpec) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Radii, angles and types of n points on the hyperbolic disk of radius R"""
    radii = radii_from_uniforms(seed.rng(Stream.RADII).random(params.n), params)
    angles = seed.rng(Stream.ANGLES).random(params.n) * (2.0 * np.pi)
    types = types_from_radii(radii, params)
    logger.debug(f"Sampled {params.n} points, R={params.R:.4f}, alpha={params.alpha:.4f}")
    return radii, angles, types

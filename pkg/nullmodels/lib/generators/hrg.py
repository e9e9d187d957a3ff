import logging
import math
from typing import Callable, Dict

import numpy as np

from ..errors import DomainError
from ..models.graph import SimpleGraph, build_simple_graph
from ..models.schemas import HrgOutcome, HrgParams
from ..sampling.hyperbolic import sample_hrg_coordinates
from ..sampling.seeds import SeedSpec
from .kernels import hyperbolic_distances, max_connection_angle

logger = logging.getLogger(__name__)

HRG_STRATEGIES = ("naive", "band")

# Angular windows are widened by this much before the exact distance test
WINDOW_SLACK = 1e-9


def edges_naive(radii: np.ndarray, angles: np.ndarray, R: float) -> SimpleGraph:
    """Test d(u, v) <= R for every pair"""
    n = radii.shape[0]
    rows = []
    for u in range(n - 1):
        vs = np.arange(u + 1, n)
        close = hyperbolic_distances(radii[u], angles[u], radii[vs], angles[vs]) <= R
        hits = vs[close]
        rows.append(np.column_stack([np.full(hits.shape[0], u, dtype=np.int64), hits]))
    edges = np.concatenate(rows) if rows else np.empty((0, 2), dtype=np.int64)
    return build_simple_graph(n, edges)


def radial_bands(R: float, width: float = 1.0) -> np.ndarray:
    """Band boundaries: one inner band [0, R/2], then bands of the given width up to R"""
    outer = np.arange(R / 2.0, R, width)
    return np.concatenate([[0.0], outer, [R + WINDOW_SLACK]])


def edges_band(radii: np.ndarray, angles: np.ndarray, R: float) -> SimpleGraph:
    """Exact edge set using radial bands and angular windows.

    For a partner band with inner radius rho, any neighbor of u in that band
    sits within max_connection_angle(r_u, rho) of u's angle, so only vertices
    inside that window are tested with the exact distance rule.
    """
    n = radii.shape[0]
    bounds = radial_bands(R)
    band_of = np.searchsorted(bounds, radii, side="right") - 1
    everyone = np.arange(n)
    found = []

    for b in range(bounds.shape[0] - 1):
        members = np.flatnonzero(band_of == b)
        if members.size == 0:
            continue
        members = members[np.argsort(angles[members], kind="stable")]
        phi = angles[members]
        ext_phi = np.concatenate([phi - 2.0 * np.pi, phi, phi + 2.0 * np.pi])
        ext_idx = np.concatenate([members, members, members])

        window = np.minimum(max_connection_angle(radii, bounds[b], R) + WINDOW_SLACK, np.pi)
        lo = np.searchsorted(ext_phi, angles - window, side="left")
        hi = np.searchsorted(ext_phi, angles + window, side="right")
        counts = hi - lo
        total = int(counts.sum())
        if total == 0:
            continue

        us = np.repeat(everyone, counts)
        offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        vs = ext_idx[np.repeat(lo, counts) + offsets]
        keep = us < vs
        us, vs = us[keep], vs[keep]
        close = hyperbolic_distances(radii[us], angles[us], radii[vs], angles[vs]) <= R
        found.append(np.column_stack([us[close], vs[close]]))
        logger.debug(f"Band {b}: {members.size} vertices, {total} candidates, {int(close.sum())} edges")

    edges = np.concatenate(found) if found else np.empty((0, 2), dtype=np.int64)
    return build_simple_graph(n, edges)


STRATEGIES: Dict[str, Callable[[np.ndarray, np.ndarray, float], SimpleGraph]] = {
    "naive": edges_naive,
    "band": edges_band,
}


def connect(radii: np.ndarray, angles: np.ndarray, R: float, strategy: str = "band") -> SimpleGraph:
    builder = STRATEGIES.get(strategy)
    if not builder:
        raise DomainError(f"Unsupported HRG strategy: {strategy}")
    return builder(np.asarray(radii, dtype=float), np.asarray(angles, dtype=float), R)


def generate_hrg(params: HrgParams, seed: SeedSpec, strategy: str = "band") -> HrgOutcome:
    """Threshold hyperbolic random graph: edge iff hyperbolic distance <= R"""
    radii, angles, types = sample_hrg_coordinates(params, seed)
    graph = connect(radii, angles, params.R, strategy)
    logger.debug(f"HRG ({strategy}): n={params.n}, R={params.R:.3f}, edges={graph.num_edges}, "
                 f"mean degree={2 * graph.num_edges / params.n:.3f}")
    return HrgOutcome(graph=graph, radii=radii, angles=angles, types=types, params=params)

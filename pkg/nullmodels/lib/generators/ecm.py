import logging

import numpy as np

from ..errors import DomainError
from ..models.graph import build_simple_graph
from ..models.schemas import EcmOutcome, PowerLawSpec
from ..sampling.powerlaw import evenize, sample_degree_sequence
from ..sampling.seeds import SeedSpec, Stream

logger = logging.getLogger(__name__)


def pair_half_edges(degrees: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Uniform perfect matching of half-edges: shuffle, then pair consecutive stubs"""
    stubs = np.repeat(np.arange(degrees.shape[0], dtype=np.int64), degrees)
    rng.shuffle(stubs)
    return stubs.reshape(-1, 2)


def erase(n: int, degrees: np.ndarray, seed: SeedSpec) -> EcmOutcome:
    degrees = np.asarray(degrees, dtype=np.int64)
    L_n = int(degrees.sum())
    if L_n % 2:
        raise DomainError(f"Half-edge total must be even, got {L_n}")

    pairs = pair_half_edges(degrees, seed.rng(Stream.MATCHING))
    graph = build_simple_graph(n, pairs)
    logger.debug(f"ECM: L_n={L_n}, kept {graph.num_edges} of {pairs.shape[0]} edges after erasure")
    return EcmOutcome(graph=graph, sampled_degrees=degrees, L_n=L_n)


def generate_ecm(spec: PowerLawSpec, n: int, seed: SeedSpec) -> EcmOutcome:
    """Erased configuration model on an i.i.d. power-law degree sequence"""
    if n < 2:
        raise DomainError(f"ECM needs n >= 2, got {n}")
    return erase(n, sample_degree_sequence(spec, n, seed), seed)


def generate_ecm_from_degrees(degrees, seed: SeedSpec) -> EcmOutcome:
    """Erased configuration model on a fixed degree sequence (odd totals are evenized)"""
    degrees = evenize(degrees)
    if degrees.shape[0] < 2:
        raise DomainError(f"ECM needs n >= 2, got {degrees.shape[0]}")
    if (degrees < 0).any():
        raise DomainError("Degrees must be non-negative")
    return erase(degrees.shape[0], degrees, seed)

"""Quadratic reference path: generators and a(k) written as literal loops."""

import logging
import math
from collections import defaultdict
from typing import Tuple

import numpy as np

from ..errors import DomainError
from ..generators.ecm import pair_half_edges
from ..generators.kernels import hyperbolic_distance
from ..models.curves import AnndCurve, CurvePoint
from ..models.experiment import ModelSpec
from ..models.graph import SimpleGraph, build_simple_graph
from ..sampling.hyperbolic import sample_hrg_coordinates
from ..sampling.powerlaw import evenize, sample_degree_sequence, sample_weights
from ..sampling.seeds import SeedSpec, Stream, row_uniforms

logger = logging.getLogger(__name__)

MAX_NAIVE_N = 5000


def naive_annd(g: SimpleGraph) -> AnndCurve:
    degree = [int(d) for d in g.degrees]
    totals = defaultdict(int)
    members = defaultdict(int)
    for i in range(g.n):
        if degree[i] == 0:
            continue
        members[degree[i]] += 1
        for j in g.neighbors(i):
            totals[degree[i]] += degree[int(j)]
    return AnndCurve(points=[
        CurvePoint(k=k, count=members[k], eps=0.0, value=totals[k] / (k * members[k]))
        for k in sorted(members)
    ])


def _naive_ecm(spec: ModelSpec, seed: SeedSpec) -> SimpleGraph:
    if spec.degrees is not None:
        degrees = evenize(spec.degrees)
    else:
        degrees = sample_degree_sequence(spec.law, spec.n, seed)
    edges = set()
    for a, b in pair_half_edges(degrees, seed.rng(Stream.MATCHING)).tolist():
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return build_simple_graph(spec.n, sorted(edges))


def _naive_irg(spec: ModelSpec, seed: SeedSpec) -> SimpleGraph:
    if spec.degrees is not None:
        weights_array = np.asarray(spec.degrees, dtype=np.float64)
        weights, mu_n = weights_array.tolist(), float(weights_array.sum())
    else:
        weights = sample_weights(spec.law, spec.n, seed).tolist()
        mu_n = spec.law.mu * spec.n
    n = spec.n
    edges = []
    for u in range(n - 1):
        uniforms = row_uniforms(seed, u, n).tolist()
        for v in range(u + 1, n):
            if uniforms[v - u - 1] < min(weights[u] * weights[v] / mu_n, 1.0):
                edges.append((u, v))
    return build_simple_graph(n, edges)


def _naive_hrg(spec: ModelSpec, seed: SeedSpec) -> SimpleGraph:
    params = spec.hrg_params
    radii, angles, _ = sample_hrg_coordinates(params, seed)
    points = list(zip(radii.tolist(), angles.tolist()))
    edges = []
    for u in range(params.n - 1):
        for v in range(u + 1, params.n):
            if hyperbolic_distance(points[u], points[v]) <= params.R:
                edges.append((u, v))
    return build_simple_graph(params.n, edges)


NAIVE_GENERATORS = {
    "ecm": _naive_ecm,
    "irg": _naive_irg,
    "hrg": _naive_hrg,
}


def naive_generate_and_stats(spec: ModelSpec, seed: SeedSpec) -> Tuple[SimpleGraph, AnndCurve]:
    """Pair-by-pair generation plus a double-loop a(k); refused above MAX_NAIVE_N vertices"""
    if spec.n > MAX_NAIVE_N:
        raise DomainError(f"Naive path is limited to n <= {MAX_NAIVE_N}, got {spec.n}")
    graph = NAIVE_GENERATORS[spec.model](spec, seed)
    logger.debug(f"Naive {spec.model}: {graph} ({math.comb(spec.n, 2)} pairs considered)")
    return graph, naive_annd(graph)

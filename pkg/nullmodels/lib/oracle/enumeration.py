"""Exact configuration-model quantities by enumerating every perfect matching
of labeled half-edges. Only usable for tiny degree sequences."""

import logging
from fractions import Fraction
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

from ..errors import DomainError
from ..models.graph import SimpleGraph, build_simple_graph

logger = logging.getLogger(__name__)

MAX_HALF_EDGES = 14

Matching = Tuple[Tuple[int, int], ...]


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def enumerate_matchings(stubs: Sequence[int]) -> Iterator[Matching]:
    """Every perfect matching of the half-edges 0..L-1, pairing the first
    unmatched half-edge with each remaining one in turn"""
    def pair(rest: Tuple[int, ...]) -> Iterator[Matching]:
        if not rest:
            yield ()
            return
        first, others = rest[0], rest[1:]
        for i, partner in enumerate(others):
            for tail in pair(others[:i] + others[i + 1:]):
                yield ((first, partner),) + tail
    yield from pair(tuple(range(len(stubs))))


class MatchingEnsemble:
    """All (L-1)!! matchings of a degree sequence with their erased graphs"""

    def __init__(self, degrees: Sequence[int]):
        self.degrees = [int(d) for d in degrees]
        if any(d < 0 for d in self.degrees):
            raise DomainError("Degrees must be non-negative")
        L = sum(self.degrees)
        if L % 2:
            raise DomainError(f"Half-edge total must be even, got {L}")
        if L > MAX_HALF_EDGES:
            raise DomainError(f"Enumeration limited to {MAX_HALF_EDGES} half-edges, got {L}")
        self.L = L
        self.owner = [v for v, d in enumerate(self.degrees) for _ in range(d)]

    @cached_property
    def matchings(self) -> List[Matching]:
        return list(enumerate_matchings(self.owner))

    @cached_property
    def graphs(self) -> List[SimpleGraph]:
        n = len(self.degrees)
        return [build_simple_graph(n, [(self.owner[a], self.owner[b]) for a, b in m]) for m in self.matchings]

    def __len__(self) -> int:
        return len(self.matchings)


def exact_cm_edge_probability(degrees: Sequence[int], u: int, v: int) -> Fraction:
    """Fraction of matchings whose erased graph contains {u, v}"""
    ensemble = MatchingEnsemble(degrees)
    edge = (min(u, v), max(u, v))
    hits = sum(1 for g in ensemble.graphs if edge in g.edge_set())
    return Fraction(hits, len(ensemble))


def exact_cm_erased_degree_mean(degrees: Sequence[int], i: int) -> Fraction:
    """E[D^(er)_i] under the uniform matching"""
    ensemble = MatchingEnsemble(degrees)
    return Fraction(sum(int(g.degrees[i]) for g in ensemble.graphs), len(ensemble))


def exact_annd_at(g: SimpleGraph, k: int) -> Optional[Fraction]:
    """a(k, g) as an exact fraction, None when no vertex has degree k"""
    members = [i for i in range(g.n) if g.degrees[i] == k]
    if not members or k == 0:
        return None
    total = sum(int(g.degrees[j]) for i in members for j in g.neighbors(i))
    return Fraction(total, k * len(members))


def exact_cm_annd(degrees: Sequence[int], k: int) -> Optional[Fraction]:
    """E[a(k, G) | N_k >= 1] over the uniform matching; None if N_k = 0 always"""
    ensemble = MatchingEnsemble(degrees)
    values = [a for a in (exact_annd_at(g, k) for g in ensemble.graphs) if a is not None]
    if not values:
        return None
    return sum(values, Fraction(0)) / len(values)

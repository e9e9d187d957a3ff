import math
from fractions import Fraction

import pytest

from nullmodels.lib.errors import DomainError
from nullmodels.lib.generators.ecm import generate_ecm_from_degrees
from nullmodels.lib.oracle.enumeration import (
    MatchingEnsemble,
    double_factorial,
    enumerate_matchings,
    exact_annd_at,
    exact_cm_annd,
    exact_cm_edge_probability,
    exact_cm_erased_degree_mean,
)
from nullmodels.lib.sampling.seeds import SeedSpec


def test_double_factorial():
    assert [double_factorial(m) for m in (0, 1, 5, 6, 13)] == [1, 1, 15, 48, 135135]


def test_matchings_are_perfect():
    matchings = list(enumerate_matchings(range(6)))
    assert len(matchings) == 15
    assert len(set(matchings)) == 15
    for m in matchings:
        assert sorted(x for pair in m for x in pair) == list(range(6))


def test_ensemble_size():
    assert len(MatchingEnsemble([3, 2, 2, 1])) == double_factorial(7)


def test_two_doubles():
    assert exact_cm_edge_probability([2, 2], 0, 1) == Fraction(2, 3)
    assert exact_cm_erased_degree_mean([2, 2], 0) == Fraction(2, 3)


def test_exact_annd():
    assert exact_cm_annd([2, 1, 1], 2) == 1
    assert exact_cm_annd([2, 2], 1) == 1
    assert exact_cm_annd([2, 2], 2) is None


def test_exact_annd_at(pendant_triangle):
    assert exact_annd_at(pendant_triangle, 2) == Fraction(5, 2)
    assert exact_annd_at(pendant_triangle, 1) == 3
    assert exact_annd_at(pendant_triangle, 4) is None


def test_rejections():
    with pytest.raises(DomainError):
        MatchingEnsemble([1, 2])
    with pytest.raises(DomainError):
        MatchingEnsemble([4, 4, 4, 4])
    with pytest.raises(DomainError):
        MatchingEnsemble([2, -1, 1])


def test_erased_generator_matches_enumeration():
    degrees = [3, 2, 2, 1]
    exact = float(exact_cm_edge_probability(degrees, 0, 1))
    runs = 4000
    hits = sum(1 for i in range(runs)
               if (0, 1) in generate_ecm_from_degrees(degrees, SeedSpec(master_seed=6, stream_id=i)).graph.edge_set())
    assert abs(hits / runs - exact) < 4 * math.sqrt(exact * (1 - exact) / runs)

import networkx as nx
import numpy as np
import pytest

from nullmodels.lib.errors import DomainError
from nullmodels.lib.models.curves import EpsilonRule
from nullmodels.lib.models.graph import build_simple_graph
from nullmodels.lib.processors.annd import (
    DegreeBands,
    annd_band,
    annd_band_curve,
    annd_curve,
    band_limits,
    contribution_profile,
    epsilon_rule_auto,
    size_biased_mean,
)


@pytest.fixture
def two_stars():
    """Centers of degree 9 (vertex 0) and 11 (vertex 10), no vertex of degree 10"""
    edges = [(0, i) for i in range(1, 10)] + [(10, i) for i in range(11, 22)]
    return build_simple_graph(22, edges)


def test_star(star):
    assert annd_curve(star).as_dict() == {1: 4.0, 4: 1.0}


def test_path(path3):
    assert annd_curve(path3).as_dict() == {1: 2.0, 2: 1.0}


def test_regular(cycle6):
    assert annd_curve(cycle6).as_dict() == {2: 2.0}


def test_isolated_vertices_omitted():
    g = build_simple_graph(4, [(0, 1)])
    curve = annd_curve(g)
    assert curve.ks().tolist() == [1.0]
    assert curve.points[0].count == 2


def test_degree_weighted_identity(random_graph):
    g = random_graph(200, 600, seed=8)
    curve = annd_curve(g)
    lhs = sum(p.k * p.count * p.value for p in curve.points)
    rhs = int((g.degrees[g.edges[:, 0]] + g.degrees[g.edges[:, 1]]).sum())
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_bounds(random_graph):
    g = random_graph(300, 500, seed=9)
    values = annd_curve(g).values()
    assert (values >= 1.0).all()
    assert (values <= g.max_degree).all()


def test_matches_networkx(random_graph):
    g = random_graph(150, 400, seed=10)
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges.tolist())
    expected = nx.average_degree_connectivity(G)
    for k, value in annd_curve(g).as_dict().items():
        assert value == pytest.approx(expected[int(k)], rel=1e-12)


def test_band_limits():
    assert band_limits(2, 0.6) == (1, 3)
    assert band_limits(10, 0.1) == (9, 11)
    assert band_limits(10, 0.09) == (10, 10)
    assert band_limits(4, 0.0) == (4, 4)
    assert band_limits(100, 0.25) == (75, 125)


def test_band_at_zero_epsilon(star):
    result = annd_band(star, 4, EpsilonRule.fixed(0.0))
    assert (result.value, result.count, result.eps) == (1.0, 1, 0.0)


def test_band_on_pendant_triangle(pendant_triangle):
    result = annd_band(pendant_triangle, 2, EpsilonRule.fixed(0.6))
    assert (result.lower, result.upper, result.count) == (1, 3, 4)
    assert result.value == pytest.approx(2.25)


def test_empty_band(star):
    result = annd_band(star, 10, EpsilonRule.fixed(0.25))
    assert result.empty
    assert result.value is None


def test_band_degree_must_be_positive(star):
    with pytest.raises(DomainError):
        annd_band(star, 0, EpsilonRule.fixed(0.1))


def test_band_curve_equals_plain_curve(random_graph):
    g = random_graph(200, 500, seed=11)
    plain = annd_curve(g).as_dict()
    banded = annd_band_curve(g, EpsilonRule.fixed(0.0)).as_dict()
    assert banded == plain


def test_band_curve_at_chosen_degrees(star):
    curve = annd_band_curve(star, EpsilonRule.fixed(0.0), ks=[4, 1, 2, 4])
    assert curve.as_dict() == {1: 4.0, 4: 1.0}


def test_auto_epsilon_populated_degree():
    star30 = build_simple_graph(31, [(0, i) for i in range(1, 31)])
    assert epsilon_rule_auto(star30, 1, m_min=20) == 0.0


def test_auto_epsilon_reaches_neighbors(two_stars):
    assert epsilon_rule_auto(two_stars, 10, m_min=2) == pytest.approx(0.1)
    result = annd_band(two_stars, 10, EpsilonRule.auto(m_min=2))
    assert result.count == 2
    assert result.value == pytest.approx((9 + 11) / (10 * 2))


def test_auto_epsilon_falls_back_to_cap():
    empty = build_simple_graph(3, [])
    assert epsilon_rule_auto(empty, 1, m_min=1, eps_cap=0.25) == 0.25
    with pytest.raises(DomainError):
        epsilon_rule_auto(empty, 1, m_min=0)


def test_epsilon_grid():
    bands = DegreeBands(build_simple_graph(2, [(0, 1)]))
    grid = bands.epsilon_grid(0.01, 0.25)
    assert len(grid) == 26
    assert grid[7] == 0.07
    assert grid[-1] == 0.25


def test_size_biased_mean():
    assert size_biased_mean([1, 1]) == 1.0
    assert size_biased_mean([1, 2, 3]) == pytest.approx(14 / 6)
    assert size_biased_mean([1, 2, 3], L_n=7) == pytest.approx(2.0)
    with pytest.raises(DomainError):
        size_biased_mean([0, 0])


def test_contribution_shares(random_graph):
    g = random_graph(300, 900, seed=12)
    shares = contribution_profile(g, 6, EpsilonRule.fixed(0.2), [1e-9, 0.1, 0.5, 1.0])
    assert [s.delta for s in shares] == [1e-9, 0.1, 0.5, 1.0]
    for share in shares:
        assert share.inside + share.outside == pytest.approx(1.0)
        assert 0.0 <= share.inside <= 1.0
    assert shares[0].inside == pytest.approx(1.0)
    assert shares[1].inside >= shares[2].inside >= shares[3].inside


def test_contribution_normalization(star):
    # mu_n / k = 8 / 1; with delta = 0.5 the window is [4, 16]
    shares = contribution_profile(star, 1, EpsilonRule.fixed(0.0), [0.5])
    assert (shares[0].lower, shares[0].upper) == (4.0, 16.0)
    assert shares[0].inside == 1.0


def test_contribution_profile_empty_band(star, caplog):
    assert contribution_profile(star, 2, EpsilonRule.fixed(0.0), [0.5]) == []
    assert "empty" in caplog.text


def test_contribution_profile_delta_range(star):
    with pytest.raises(DomainError):
        contribution_profile(star, 1, EpsilonRule.fixed(0.0), [0.0])
    with pytest.raises(DomainError):
        contribution_profile(star, 1, EpsilonRule.fixed(0.0), [1.5])

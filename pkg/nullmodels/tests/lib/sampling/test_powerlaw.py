import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.special import zeta

from nullmodels.lib.errors import DomainError
from nullmodels.lib.models.schemas import PowerLawSpec
from nullmodels.lib.sampling.powerlaw import (
    evenize,
    law_constants,
    sample_degree_sequence,
    sample_power_law,
    sample_weights,
)
from nullmodels.lib.sampling.seeds import SeedSpec


def test_law_constants():
    c, mu = law_constants(PowerLawSpec(tau=2.5))
    assert c == pytest.approx(1.5)
    assert mu == pytest.approx(2.6123753486854883, rel=1e-12)


def test_law_constants_with_x_min():
    law = PowerLawSpec(tau=2.5, x_min=2)
    assert law.c == pytest.approx(1.5 * 2 ** 1.5)
    assert law.c == pytest.approx(4.2426, abs=1e-4)
    assert law.mu == pytest.approx(1 + 2 ** 1.5 * (zeta(1.5) - 1), rel=1e-12)


def test_tau_range():
    with pytest.raises(ValidationError):
        PowerLawSpec(tau=3.0)
    with pytest.raises(ValidationError):
        PowerLawSpec(tau=2.0)


@pytest.fixture(scope="module")
def unit_law_draws():
    return sample_degree_sequence(PowerLawSpec(tau=2.5), 200_000, SeedSpec(master_seed=21))


@pytest.mark.parametrize("k", [1, 2, 4, 8, 16, 32, 64])
def test_degree_ccdf(unit_law_draws, k):
    # P(D >= k) = k^(1 - tau) for x_min = 1
    p = k ** -1.5
    sigma = math.sqrt(p * (1 - p) / unit_law_draws.size)
    assert abs((unit_law_draws >= k).mean() - p) <= 3 * sigma


def test_power_law_respects_x_min():
    law = PowerLawSpec(tau=2.5, x_min=3)
    draws = sample_power_law(law, 10_000, np.random.default_rng(1))
    assert draws.min() >= 3


def test_evenize():
    assert evenize([1, 2]).tolist() == [1, 3]
    assert evenize([1, 3]).tolist() == [1, 3]
    assert evenize([]).tolist() == []


def test_degree_sequence_is_even_and_reproducible():
    law = PowerLawSpec(tau=2.5)
    seed = SeedSpec(master_seed=3)
    degrees = sample_degree_sequence(law, 1001, seed)
    assert degrees.sum() % 2 == 0
    assert np.array_equal(degrees, sample_degree_sequence(law, 1001, seed))
    with pytest.raises(DomainError):
        sample_degree_sequence(law, 0, seed)


def test_weights_use_their_own_stream():
    law = PowerLawSpec(tau=2.5)
    seed = SeedSpec(master_seed=3)
    weights = sample_weights(law, 500, seed)
    assert weights.dtype == np.float64
    assert not np.array_equal(weights, sample_degree_sequence(law, 500, seed).astype(float))

import math

import numpy as np
import pytest

from nullmodels.lib.errors import DomainError
from nullmodels.lib.models.schemas import PowerLawSpec
from nullmodels.lib.sampling.seeds import SeedSpec
from nullmodels.lib.theory.constants import tail_constant
from nullmodels.lib.theory.predictions import heuristic_annd, plateau_quantiles, predict, predicted_curve

LAW = PowerLawSpec(tau=2.5)


def test_predict_ecm():
    prediction = predict("ecm", 10 ** 6, LAW)
    assert (prediction.threshold_k, prediction.cutoff_k) == (100.0, 10000.0)
    assert prediction.tail_constant == pytest.approx(3.290, abs=1e-3)
    assert prediction.expected_ak_constant == prediction.tail_constant
    assert (prediction.tail_n_exponent, prediction.tail_k_exponent) == (0.5, -0.5)
    assert prediction.stable_alpha == 0.75
    assert prediction.hrg_integral is None and prediction.nu is None
    assert "expected_ak_constant" in prediction.provenance
    assert "hrg_integral" not in prediction.provenance


def test_predict_irg():
    prediction = predict("irg", 10 ** 6, LAW)
    assert prediction.tail_constant == pytest.approx(tail_constant("irg", 2.5, 1.5, LAW.mu))
    assert prediction.expected_ak_constant is None


def test_predict_hrg_reports_integral():
    prediction = predict("hrg", 10 ** 5, LAW, nu=1.0, tol=1e-9)
    assert prediction.hrg_integral == pytest.approx(3.3385, abs=1e-4)
    assert prediction.quad_tolerance == 1e-9
    assert prediction.nu == 1.0
    assert "hrg_integral" in prediction.provenance


def test_prediction_invariants():
    for model in ("ecm", "irg", "hrg"):
        prediction = predict(model, 10 ** 4, PowerLawSpec(tau=2.3))
        assert prediction.tail_constant > 0
        assert prediction.threshold_k < prediction.cutoff_k


def test_predicted_curve_regimes():
    prediction = predict("ecm", 10 ** 6, LAW)
    points = predicted_curve(prediction, [1000, 1, 100])
    assert [p.regime for p in points] == ["plateau", "plateau", "tail"]
    assert points[0].value == pytest.approx(prediction.plateau_level)
    assert points[2].value == pytest.approx(prediction.tail_constant * (10 ** 6) ** 0.5 * 1000 ** -0.5)
    with pytest.raises(DomainError):
        predicted_curve(prediction, [0.5])
    with pytest.raises(DomainError):
        predicted_curve(prediction, [2e4])


def test_heuristic_on_regular_sequence():
    n, d = 1000, 4
    degrees = np.full(n, d)
    # every x = k / n is below one, so the irg heuristic is exactly d
    assert heuristic_annd(degrees, 10, "irg") == pytest.approx(d)
    assert heuristic_annd(degrees, 10, "ecm") == pytest.approx(n * d * -math.expm1(-10 / n) / 10)
    values = heuristic_annd(degrees, [1, 10], "ecm")
    assert values.shape == (2,)


def test_heuristic_decreases_on_power_law():
    degrees = np.floor((1 - np.random.default_rng(0).random(5000)) ** (-1 / 1.5))
    values = heuristic_annd(degrees, [1, 10, 100, 1000], "ecm")
    assert (np.diff(values) < 0).all()


def test_heuristic_rejections():
    with pytest.raises(DomainError):
        heuristic_annd([0, 0], 1)
    with pytest.raises(DomainError):
        heuristic_annd([1, 2], 0)
    with pytest.raises(DomainError):
        heuristic_annd([1, 2], 1, "hrg")


def test_plateau_quantiles():
    q = plateau_quantiles("ecm", 10 ** 5, LAW, samples=5000, seed=SeedSpec(master_seed=1))
    assert q[0.25] < q[0.5] < q[0.75]
    assert q == plateau_quantiles("ecm", 10 ** 5, LAW, samples=5000, seed=SeedSpec(master_seed=1))
    with pytest.raises(DomainError):
        plateau_quantiles("ecm", 10 ** 5, LAW, samples=0)

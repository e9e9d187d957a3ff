import pytest
from pydantic import ValidationError

from nullmodels.lib.models.curves import (
    AnndCurve,
    Binning,
    CurvePoint,
    EnsembleRow,
    EnsembleSummary,
    EpsilonRule,
)


def test_curve_requires_increasing_k():
    points = [CurvePoint(k=2, count=1, value=1.0), CurvePoint(k=2, count=3, value=2.0)]
    with pytest.raises(ValidationError):
        AnndCurve(points=points)


def test_curve_frame_columns():
    curve = AnndCurve(points=[CurvePoint(k=1, count=4, value=4.0), CurvePoint(k=4, count=1, value=1.0)])
    frame = curve.to_frame()
    assert list(frame.columns) == ["k", "count", "eps", "value"]
    assert frame["count"].dtype == "int64"
    assert curve.as_dict() == {1: 4.0, 4: 1.0}
    assert curve.at(4).count == 1
    assert curve.at(3) is None
    assert len(curve) == 2


def test_empty_curve_frame():
    frame = AnndCurve().to_frame()
    assert list(frame.columns) == ["k", "count", "eps", "value"]
    assert frame.empty


def test_epsilon_rule_bounds():
    assert EpsilonRule.fixed(0.5).eps == 0.5
    with pytest.raises(ValidationError):
        EpsilonRule.fixed(1.0)
    with pytest.raises(ValidationError):
        EpsilonRule.auto(m_min=0)


def test_epsilon_rule_defaults():
    rule = EpsilonRule()
    assert rule.mode == "auto"
    assert (rule.m_min, rule.eps_cap, rule.step) == (20, 0.25, 0.01)


def test_binning_rejects_unknown_mode():
    with pytest.raises(ValidationError):
        Binning(mode="linear")


def test_ensemble_frame_columns():
    summary = EnsembleSummary(statistic="annd", binning=Binning(), realizations=1, rows=[
        EnsembleRow(k=1, count=1, mean=2.0, median=2.0, q25=2.0, q75=2.0, std=0.0),
    ])
    frame = summary.to_frame()
    assert list(frame.columns) == ["k", "count", "mean", "median", "q25", "q75", "std"]
    assert summary.values("mean").tolist() == [2.0]

import pytest
from pydantic import ValidationError

from nullmodels.lib.models.experiment import ExperimentConfig, ModelSpec
from nullmodels.main import exit_code_for


def test_default_strategies():
    assert ModelSpec(model="ecm", n=10, tau=2.5).resolved_strategy == "matching"
    assert ModelSpec(model="irg", n=10, tau=2.5).resolved_strategy == "skipping"
    assert ModelSpec(model="hrg", n=10, tau=2.5).resolved_strategy == "band"


def test_tau_outside_range_is_domain_error():
    with pytest.raises(ValidationError) as excinfo:
        ModelSpec(model="ecm", n=10, tau=3.2)
    assert exit_code_for(excinfo.value) == 4


def test_unknown_strategy_is_config_error():
    with pytest.raises(ValidationError) as excinfo:
        ModelSpec(model="ecm", n=10, tau=2.5, strategy="skipping")
    assert exit_code_for(excinfo.value) == 2


def test_degree_sequence_rules():
    spec = ModelSpec(model="ecm", n=3, degrees=[1, 2, 3])
    assert spec.tau is None
    with pytest.raises(ValidationError):
        ModelSpec(model="ecm", n=4, degrees=[1, 2, 3])
    with pytest.raises(ValidationError):
        ModelSpec(model="hrg", n=3, tau=2.5, degrees=[1, 2, 3])
    with pytest.raises(ValidationError):
        ModelSpec(model="irg", n=3)


def test_hrg_needs_n_above_nu():
    with pytest.raises(ValidationError):
        ModelSpec(model="hrg", n=3, tau=2.5, nu=5.0)
    params = ModelSpec(model="hrg", n=100, tau=2.5, nu=2.0).hrg_params
    assert params.n == 100 and params.nu == 2.0


def test_experiment_rejects_unknown_keys():
    with pytest.raises(ValidationError):
        ExperimentConfig.model_validate({"model": "ecm", "n": 100, "tau": 2.5, "colour": "red"})


def test_experiment_requires_realizations():
    with pytest.raises(ValidationError):
        ExperimentConfig(model="ecm", n=100, tau=2.5, realizations=0)


def test_experiment_stats():
    config = ExperimentConfig(model="ecm", n=100, tau=2.5, stats=["clustering", "annd", "clustering"])
    assert config.stats == ["clustering", "annd"]
    with pytest.raises(ValidationError):
        ExperimentConfig(model="ecm", n=100, tau=2.5, stats=[])
    with pytest.raises(ValidationError):
        ExperimentConfig(model="ecm", n=100, tau=2.5, stats=["assortativity"])


def test_experiment_fit_window():
    assert ExperimentConfig(model="ecm", n=100, tau=2.5, fit_window=(2, 10)).fit_window == (2.0, 10.0)
    with pytest.raises(ValidationError):
        ExperimentConfig(model="ecm", n=100, tau=2.5, fit_window=(10, 2))


def test_degrees_from_rules(tmp_path):
    path = tmp_path / "g.tsv"
    config = ExperimentConfig(model="irg", degrees_from=path)
    assert config.n is None
    with pytest.raises(ValidationError):
        ExperimentConfig(model="hrg", degrees_from=path)
    with pytest.raises(ValidationError):
        ExperimentConfig(model="ecm", degrees_from=path, overlay=True)
    with pytest.raises(ValidationError):
        ExperimentConfig(model="ecm", tau=2.5)


def test_to_model_spec():
    config = ExperimentConfig(model="irg", n=100, tau=2.5, strategy="pruned")
    spec = config.to_model_spec()
    assert (spec.model, spec.n, spec.tau, spec.resolved_strategy) == ("irg", 100, 2.5, "pruned")

    fixed = config.to_model_spec([1, 2, 3])
    assert fixed.n == 3 and fixed.degrees == [1, 2, 3]

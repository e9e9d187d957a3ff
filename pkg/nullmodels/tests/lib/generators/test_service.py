import pytest

from nullmodels.lib.generators.service import GeneratorService, generate
from nullmodels.lib.models.experiment import ModelSpec
from nullmodels.lib.models.schemas import EcmOutcome, HrgOutcome, IrgOutcome
from nullmodels.lib.sampling.seeds import SeedSpec


@pytest.mark.parametrize("model, outcome_type", [
    ("ecm", EcmOutcome),
    ("irg", IrgOutcome),
    ("hrg", HrgOutcome),
])
def test_dispatch(model, outcome_type):
    spec = ModelSpec(model=model, n=200, tau=2.5)
    outcome = GeneratorService().generate(spec, SeedSpec(master_seed=1))
    assert isinstance(outcome, outcome_type)
    assert outcome.model == model
    assert outcome.graph.n == 200
    assert outcome.latent.shape == (200,)
    assert outcome.normalization > 0


def test_module_level_generate():
    spec = ModelSpec(model="irg", n=100, tau=2.5, strategy="naive")
    seed = SeedSpec(master_seed=2)
    assert generate(spec, seed).graph == GeneratorService().generate(spec, seed).graph


def test_fixed_degree_sequences():
    degrees = [3, 1, 2, 2, 1, 1]
    ecm = generate(ModelSpec(model="ecm", n=6, degrees=degrees), SeedSpec())
    assert ecm.sampled_degrees.tolist() == degrees
    irg = generate(ModelSpec(model="irg", n=6, degrees=degrees), SeedSpec())
    assert irg.mu_n == 10.0


def test_unknown_model_is_rejected():
    service = GeneratorService()
    spec = ModelSpec.model_construct(model="ba", n=10, tau=2.5)
    with pytest.raises(ValueError):
        service.generate(spec, SeedSpec())

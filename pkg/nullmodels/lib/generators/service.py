import logging
from typing import Union

from ..models.experiment import ModelSpec
from ..models.schemas import EcmOutcome, HrgOutcome, IrgOutcome
from ..sampling.seeds import SeedSpec
from .ecm import generate_ecm, generate_ecm_from_degrees
from .hrg import generate_hrg
from .irg import generate_irg, generate_irg_from_weights

logger = logging.getLogger(__name__)

ModelOutcome = Union[EcmOutcome, IrgOutcome, HrgOutcome]


def _ecm(spec: ModelSpec, seed: SeedSpec) -> EcmOutcome:
    if spec.degrees is not None:
        return generate_ecm_from_degrees(spec.degrees, seed)
    return generate_ecm(spec.law, spec.n, seed)


def _irg(spec: ModelSpec, seed: SeedSpec) -> IrgOutcome:
    if spec.degrees is not None:
        return generate_irg_from_weights(spec.degrees, seed, spec.resolved_strategy)
    return generate_irg(spec.law, spec.n, seed, spec.resolved_strategy)


def _hrg(spec: ModelSpec, seed: SeedSpec) -> HrgOutcome:
    return generate_hrg(spec.hrg_params, seed, spec.resolved_strategy)


class GeneratorService:
    def __init__(self):
        self.generators = {
            'ecm': _ecm,
            'irg': _irg,
            'hrg': _hrg
        }

    def generate(self, spec: ModelSpec, seed: SeedSpec) -> ModelOutcome:
        """Draw one realization of the model described by spec"""
        generator = self.generators.get(spec.model)
        if not generator:
            raise ValueError(f"Unsupported model: {spec.model}")

        try:
            outcome = generator(spec, seed)
        except Exception as e:
            logger.error(f"Failed to generate {spec.model} realization {seed.stream_id}: {e}")
            raise
        logger.debug(f"Generated {spec.model} realization {seed.stream_id}: {outcome.graph}")
        return outcome


def generate(spec: ModelSpec, seed: SeedSpec) -> ModelOutcome:
    return GeneratorService().generate(spec, seed)

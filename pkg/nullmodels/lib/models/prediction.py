from typing import Dict, Literal, Optional

from pydantic import BaseModel, Field


class TheoryPrediction(BaseModel):
    """Every closed-form number describing a(k) for one model, law and n"""

    model: Literal["ecm", "irg", "hrg"]
    n: int
    tau: float
    x_min: int = 1
    nu: Optional[float] = None
    c: float
    mu: float
    threshold_k: float
    cutoff_k: float
    plateau_prefactor: float
    plateau_scale: float
    stable_alpha: float
    tail_constant: float
    tail_n_exponent: float
    tail_k_exponent: float
    expected_ak_constant: Optional[float] = None
    hrg_integral: Optional[float] = None
    quad_tolerance: Optional[float] = None
    plateau_quantiles: Dict[str, float] = Field(default_factory=dict)
    provenance: Dict[str, str] = Field(default_factory=dict)

    @property
    def plateau_level(self) -> float:
        """Deterministic part of the plateau; the limit multiplies it by S_alpha"""
        return self.plateau_scale * self.plateau_prefactor

    def tail_value(self, k: float) -> float:
        return self.tail_constant * self.n ** self.tail_n_exponent * k ** self.tail_k_exponent


class PredictedPoint(BaseModel):
    k: float
    regime: Literal["plateau", "tail"]
    value: float

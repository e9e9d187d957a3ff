import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import DomainError
from .graph import SimpleGraph


def check_tau(tau: float) -> float:
    if not 2.0 < tau < 3.0:
        raise DomainError(f"tau must lie in (2, 3), got {tau}")
    return tau


class PowerLawSpec(BaseModel):
    """Floor-Pareto law P(D >= k) = (k / x_min)^(1 - tau) for integer k >= x_min"""

    model_config = ConfigDict(frozen=True)

    tau: float
    x_min: int = Field(1, ge=1)

    @field_validator("tau")
    @classmethod
    def validate_tau(cls, v: float) -> float:
        return check_tau(v)

    @property
    def c(self) -> float:
        from ..sampling.powerlaw import law_constants
        return law_constants(self)[0]

    @property
    def mu(self) -> float:
        from ..sampling.powerlaw import law_constants
        return law_constants(self)[1]


class HrgParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2)
    tau: float
    nu: float = Field(1.0, gt=0)

    @field_validator("tau")
    @classmethod
    def validate_tau(cls, v: float) -> float:
        return check_tau(v)

    @model_validator(mode="after")
    def validate_radius(self) -> "HrgParams":
        if self.n <= self.nu:
            raise DomainError(f"Disk radius needs n > nu, got n={self.n}, nu={self.nu}")
        return self

    @property
    def alpha(self) -> float:
        return (self.tau - 1.0) / 2.0

    @property
    def R(self) -> float:
        return 2.0 * math.log(self.n / self.nu)


class _Outcome(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    graph: SimpleGraph


class EcmOutcome(_Outcome):
    model: str = "ecm"
    sampled_degrees: np.ndarray
    L_n: int

    @property
    def erased_degrees(self) -> np.ndarray:
        return self.graph.degrees

    @property
    def latent(self) -> np.ndarray:
        return self.sampled_degrees

    @property
    def normalization(self) -> float:
        return float(self.L_n)


class IrgOutcome(_Outcome):
    model: str = "irg"
    weights: np.ndarray
    mu_n: float

    @property
    def latent(self) -> np.ndarray:
        return self.weights

    @property
    def normalization(self) -> float:
        return self.mu_n


class HrgOutcome(_Outcome):
    model: str = "hrg"
    radii: np.ndarray
    angles: np.ndarray
    types: np.ndarray
    params: HrgParams

    @property
    def coordinates(self) -> np.ndarray:
        return np.column_stack([self.radii, self.angles])

    @property
    def latent(self) -> np.ndarray:
        return self.types

    @property
    def normalization(self) -> float:
        return float(self.graph.degrees.sum())


class GraphSidecar(BaseModel):
    """Metadata written beside a generated edge list"""

    model: str
    n: int
    tau: Optional[float] = None
    nu: Optional[float] = None
    x_min: Optional[int] = None
    seed: int
    stream: int
    strategy: Optional[str] = None
    L_n: Optional[int] = None
    erased_degree_sum: Optional[int] = None
    edges: int

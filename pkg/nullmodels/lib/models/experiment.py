from pathlib import Path
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .curves import Binning, EpsilonRule
from .schemas import HrgParams, PowerLawSpec, check_tau

MODELS = ("ecm", "irg", "hrg")
STRATEGIES = {
    "ecm": ("matching",),
    "irg": ("naive", "pruned", "skipping"),
    "hrg": ("naive", "band"),
}
DEFAULT_STRATEGY = {"ecm": "matching", "irg": "skipping", "hrg": "band"}
STATISTICS = ("annd", "annd_band", "clustering")


def _check_strategy(model: str, strategy: Optional[str]) -> Optional[str]:
    if strategy is not None and strategy not in STRATEGIES[model]:
        raise ValueError(f"Strategy {strategy!r} not available for {model}; choose from {STRATEGIES[model]}")
    return strategy


class ModelSpec(BaseModel):
    """One null model with its parameters.

    When ``degrees`` is set the ECM uses it as its degree sequence and the IRG
    as its weights; ``tau`` is then optional and ``n`` must equal its length.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    model: Literal["ecm", "irg", "hrg"]
    n: int = Field(ge=2)
    tau: Optional[float] = None
    x_min: int = Field(1, ge=1)
    nu: float = Field(1.0, gt=0)
    strategy: Optional[str] = None
    degrees: Optional[List[int]] = None

    @field_validator("tau")
    @classmethod
    def validate_tau(cls, v: Optional[float]) -> Optional[float]:
        return v if v is None else check_tau(v)

    @model_validator(mode="after")
    def validate_combination(self) -> "ModelSpec":
        _check_strategy(self.model, self.strategy)
        if self.degrees is None:
            if self.tau is None:
                raise ValueError(f"{self.model} needs tau unless a degree sequence is given")
        else:
            if self.model == "hrg":
                raise ValueError("A fixed degree sequence only applies to ecm and irg")
            if len(self.degrees) != self.n:
                raise ValueError(f"n={self.n} does not match {len(self.degrees)} given degrees")
        if self.model == "hrg" and self.n <= self.nu:
            raise ValueError(f"Disk radius needs n > nu, got n={self.n}, nu={self.nu}")
        return self

    @property
    def resolved_strategy(self) -> str:
        return self.strategy or DEFAULT_STRATEGY[self.model]

    @property
    def law(self) -> PowerLawSpec:
        return PowerLawSpec(tau=self.tau, x_min=self.x_min)

    @property
    def hrg_params(self) -> HrgParams:
        return HrgParams(n=self.n, tau=self.tau, nu=self.nu)


class ExperimentConfig(BaseModel):
    """Ensemble experiment as read from a JSON config file"""

    model_config = ConfigDict(extra="forbid")

    model: Literal["ecm", "irg", "hrg"]
    n: Optional[int] = Field(None, ge=2)
    tau: Optional[float] = None
    x_min: int = Field(1, ge=1)
    nu: float = Field(1.0, gt=0)
    strategy: Optional[str] = None
    realizations: int = Field(1, ge=1)
    seed: int = Field(0, ge=0, lt=2 ** 64)
    epsilon: EpsilonRule = Field(default_factory=EpsilonRule)
    binning: Binning = Field(default_factory=Binning)
    stats: List[Literal["annd", "annd_band", "clustering"]] = Field(default_factory=lambda: ["annd"])
    fit_window: Optional[Tuple[float, float]] = None
    overlay: bool = False
    out: Optional[Path] = None
    threads: Optional[int] = Field(None, ge=1)
    degrees_from: Optional[Path] = None

    @field_validator("tau")
    @classmethod
    def validate_tau(cls, v: Optional[float]) -> Optional[float]:
        return v if v is None else check_tau(v)

    @field_validator("stats")
    @classmethod
    def validate_stats(cls, v: List[str]) -> List[str]:
        if not v:
            raise ValueError("Select at least one statistic")
        return sorted(set(v), key=v.index)

    @field_validator("fit_window")
    @classmethod
    def validate_window(cls, v):
        if v is not None and not 0 < v[0] < v[1]:
            raise ValueError(f"Fit window must satisfy 0 < k_lo < k_hi, got {v}")
        return v

    @model_validator(mode="after")
    def validate_combination(self) -> "ExperimentConfig":
        _check_strategy(self.model, self.strategy)
        if self.degrees_from is not None:
            if self.model == "hrg":
                raise ValueError("degrees_from only applies to ecm and irg")
            if self.overlay:
                raise ValueError("Theory overlay needs an i.i.d. degree law; it is not available with degrees_from")
        else:
            if self.n is None or self.tau is None:
                raise ValueError("n and tau are required unless degrees_from is set")
        return self

    def to_model_spec(self, degrees: Optional[List[int]] = None) -> ModelSpec:
        """The ModelSpec of this experiment; degrees come from degrees_from when used"""
        if degrees is not None:
            return ModelSpec(model=self.model, n=len(degrees), tau=self.tau, x_min=self.x_min,
                             nu=self.nu, strategy=self.strategy, degrees=list(degrees))
        return ModelSpec(model=self.model, n=self.n, tau=self.tau, x_min=self.x_min,
                         nu=self.nu, strategy=self.strategy)

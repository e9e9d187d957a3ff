from typing import Dict, List, Literal, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator


class EpsilonRule(BaseModel):
    """How the degree band half-width is chosen for a_eps(k)"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    mode: Literal["fixed", "auto"] = "auto"
    eps: float = Field(0.0, ge=0.0, lt=1.0)
    m_min: int = Field(20, ge=1)
    eps_cap: float = Field(0.25, ge=0.0, lt=1.0)
    step: float = Field(0.01, gt=0.0)

    @classmethod
    def fixed(cls, eps: float) -> "EpsilonRule":
        return cls(mode="fixed", eps=eps)

    @classmethod
    def auto(cls, m_min: int = 20, eps_cap: float = 0.25, step: float = 0.01) -> "EpsilonRule":
        return cls(mode="auto", m_min=m_min, eps_cap=eps_cap, step=step)


class Binning(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    mode: Literal["raw", "geometric"] = "raw"
    bins_per_decade: int = Field(16, ge=1)


class CurvePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: float
    count: int
    eps: float = 0.0
    value: float


class DegreeCurve(BaseModel):
    """Per-degree statistic; points sorted by strictly increasing k"""

    statistic: str
    points: List[CurvePoint] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_order(self) -> "DegreeCurve":
        ks = [p.k for p in self.points]
        if any(b <= a for a, b in zip(ks, ks[1:])):
            raise ValueError("Curve points must have strictly increasing k")
        return self

    def ks(self) -> np.ndarray:
        return np.array([p.k for p in self.points], dtype=float)

    def values(self) -> np.ndarray:
        return np.array([p.value for p in self.points], dtype=float)

    def as_dict(self) -> dict:
        return {p.k: p.value for p in self.points}

    def at(self, k: float) -> Optional[CurvePoint]:
        return next((p for p in self.points if p.k == k), None)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "k": [p.k for p in self.points],
                "count": pd.Series([p.count for p in self.points], dtype="int64"),
                "eps": [p.eps for p in self.points],
                "value": [p.value for p in self.points],
            }
        )

    def __len__(self) -> int:
        return len(self.points)


class AnndCurve(DegreeCurve):
    statistic: str = "annd"


class ClusteringCurve(DegreeCurve):
    statistic: str = "clustering"


class BandResult(BaseModel):
    """a_eps(k) over the band M_eps(k); value is None when the band is empty"""

    model_config = ConfigDict(frozen=True)

    k: int
    eps: float
    count: int
    value: Optional[float] = None
    lower: int
    upper: int

    @property
    def empty(self) -> bool:
        return self.count == 0


class ContributionShare(BaseModel):
    model_config = ConfigDict(frozen=True)

    delta: float
    lower: float
    upper: float
    inside: float
    outside: float


class FitResult(BaseModel):
    slope: float
    intercept: float
    r_squared: float
    points: int
    k_lo: float
    k_hi: float


class EnsembleRow(BaseModel):
    k: float
    count: int
    mean: float
    median: float
    q25: float
    q75: float
    std: float


class EnsembleSummary(BaseModel):
    statistic: str
    binning: Binning
    realizations: int
    rows: List[EnsembleRow] = Field(default_factory=list)

    def ks(self) -> np.ndarray:
        return np.array([r.k for r in self.rows], dtype=float)

    def values(self, column: str = "median") -> np.ndarray:
        return np.array([getattr(r, column) for r in self.rows], dtype=float)

    def to_frame(self) -> pd.DataFrame:
        columns = ["k", "count", "mean", "median", "q25", "q75", "std"]
        frame = pd.DataFrame([r.model_dump() for r in self.rows], columns=columns)
        return frame.astype({"count": "int64"})


class FitReport(BaseModel):
    """Log-log slope fits of an ensemble run, keyed by statistic"""

    model: str
    n: Optional[int] = None
    tau: Optional[float] = None
    fits: Dict[str, FitResult] = Field(default_factory=dict)

import logging
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from ..errors import DomainError
from ..models.prediction import PredictedPoint, TheoryPrediction
from ..models.schemas import PowerLawSpec
from ..sampling.seeds import SeedSpec
from ..sampling.stable import sample_stable
from .constants import (
    DEFAULT_QUAD_TOLERANCE,
    expected_ak_constant,
    hrg_integral,
    plateau_prefactor,
    plateau_scale,
    stable_index,
    tail_constant,
    thresholds,
)

logger = logging.getLogger(__name__)

PROVENANCE = {
    "threshold_k": "degree n^((tau-2)/(tau-1)) where the plateau of a(k) ends",
    "cutoff_k": "natural cutoff n^(1/(tau-1)), the order of the maximal degree",
    "plateau_prefactor": "small-k limit: a(k) n^(-(3-tau)/(tau-1)) converges to this constant times S_alpha",
    "plateau_scale": "n^((3-tau)/(tau-1))",
    "stable_alpha": "index (tau-1)/2 of the totally skewed stable multiplier of the plateau",
    "tail_constant": "large-k limit: a(k) / (n^(3-tau) k^(tau-3)) converges to this constant",
    "expected_ak_constant": "ensemble mean E[a(k)] ~ constant * (n/k)^(3-tau) over the whole k range",
    "hrg_integral": "integral of x^(1-tau) min(arccos(1-2x^2)/pi, 1) over (0, inf)",
}

DEFAULT_QUANTILES = (0.25, 0.5, 0.75)


def predict(model: str, n: int, law: PowerLawSpec, nu: float = 1.0,
            tol: float = DEFAULT_QUAD_TOLERANCE) -> TheoryPrediction:
    """All closed-form constants of a(k) for one model"""
    tau = law.tau
    threshold_k, cutoff_k = thresholds(n, tau)
    c, mu = law.c, law.mu
    hrg = model == "hrg"

    provenance = {key: text for key, text in PROVENANCE.items()
                  if (key != "hrg_integral" or hrg) and (key != "expected_ak_constant" or model == "ecm")}
    return TheoryPrediction(
        model=model,
        n=n,
        tau=tau,
        x_min=law.x_min,
        nu=nu if hrg else None,
        c=c,
        mu=mu,
        threshold_k=threshold_k,
        cutoff_k=cutoff_k,
        plateau_prefactor=plateau_prefactor(model, tau, c, mu, nu),
        plateau_scale=plateau_scale(n, tau),
        stable_alpha=stable_index(tau),
        tail_constant=tail_constant(model, tau, c, mu, nu, tol),
        tail_n_exponent=3.0 - tau,
        tail_k_exponent=tau - 3.0,
        expected_ak_constant=expected_ak_constant(tau, c, mu) if model == "ecm" else None,
        hrg_integral=hrg_integral(tau, tol) if hrg else None,
        quad_tolerance=tol if hrg else None,
        provenance=provenance,
    )


def predicted_curve(prediction: TheoryPrediction, ks: Iterable[float]) -> List[PredictedPoint]:
    """Plateau level up to the threshold, tail law beyond it.

    The two pieces are not joined; they only agree in order of magnitude.
    The random stable multiplier of the plateau is left out of the values.
    """
    points = []
    for k in sorted(float(k) for k in ks):
        if not 1.0 <= k <= prediction.cutoff_k:
            raise DomainError(f"k={k:g} outside [1, {prediction.cutoff_k:g}]")
        if k <= prediction.threshold_k:
            points.append(PredictedPoint(k=k, regime="plateau", value=prediction.plateau_level))
        else:
            points.append(PredictedPoint(k=k, regime="tail", value=prediction.tail_value(k)))
    return points


def heuristic_annd(degrees, k, model: str = "ecm"):
    """Mean-field a(k) given the latent sequence of one realization.

    ecm: k^-1 sum_i D_i (1 - exp(-D_i k / L_n)); irg: k^-1 sum_i h_i min(h_i k / L_n, 1),
    with L_n the sum of the sequence.
    """
    d = np.asarray(degrees, dtype=np.float64)
    L_n = d.sum()
    if L_n <= 0:
        raise DomainError(f"Half-edge total must be positive, got {L_n}")
    ks = np.atleast_1d(np.asarray(k, dtype=np.float64))
    if (ks <= 0).any():
        raise DomainError("k must be positive")

    x = np.outer(ks, d) / L_n
    if model == "ecm":
        values = (d * -np.expm1(-x)).sum(axis=1) / ks
    elif model == "irg":
        values = (d * np.minimum(x, 1.0)).sum(axis=1) / ks
    else:
        raise DomainError(f"No heuristic a(k) for model {model}")
    return float(values[0]) if np.ndim(k) == 0 else values


def plateau_quantiles(model: str, n: int, law: PowerLawSpec, quantiles: Sequence[float] = DEFAULT_QUANTILES,
                      samples: int = 20000, seed: Optional[SeedSpec] = None, nu: float = 1.0) -> Dict[float, float]:
    """Monte-Carlo quantiles of the plateau limit scale * prefactor * S_{(tau-1)/2}"""
    if samples < 1:
        raise DomainError(f"Need at least one sample, got {samples}")
    seed = seed or SeedSpec()
    level = plateau_scale(n, law.tau) * plateau_prefactor(model, law.tau, law.c, law.mu, nu)
    draws = sample_stable(stable_index(law.tau), seed, samples)
    values = np.quantile(level * draws, list(quantiles))
    logger.debug(f"Plateau quantiles from {samples} stable draws: {dict(zip(quantiles, values))}")
    return {float(q): float(v) for q, v in zip(quantiles, values)}

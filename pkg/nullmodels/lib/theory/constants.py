"""Closed-form thresholds, prefactors and limit constants of a(k) and c(k)."""

import logging
import math
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from scipy import integrate
from scipy.special import gamma

from ..errors import DomainError
from ..models.schemas import check_tau

logger = logging.getLogger(__name__)

MODELS = ("ecm", "irg", "hrg")
DEFAULT_QUAD_TOLERANCE = 1e-8


def _check_model(model: str) -> str:
    if model not in MODELS:
        raise DomainError(f"Unknown model: {model}")
    return model


def _require(name: str, value: Optional[float]) -> float:
    if value is None:
        raise DomainError(f"{name} is required for this model")
    return float(value)


def thresholds(n: float, tau: float) -> Tuple[float, float]:
    """(n^((tau-2)/(tau-1)), n^(1/(tau-1))): end of the plateau and the natural cutoff"""
    check_tau(tau)
    if n < 2:
        raise DomainError(f"Need n >= 2, got {n}")
    decades = math.log10(n)
    return 10.0 ** (decades * (tau - 2.0) / (tau - 1.0)), 10.0 ** (decades / (tau - 1.0))


def plateau_scale(n: float, tau: float) -> float:
    check_tau(tau)
    return float(n) ** ((3.0 - tau) / (tau - 1.0))


def tail_scale(n: float, k, tau: float):
    """n^(3-tau) k^(tau-3)"""
    return float(n) ** (3.0 - tau) * np.asarray(k, dtype=float) ** (tau - 3.0)


def _hrg_head_integrand(u: float, tau: float) -> float:
    # x = sin u on [0, 1]; the factor u^(2-tau) is carried by the quadrature weight
    return np.sinc(u / np.pi) ** (1.0 - tau) * (2.0 / np.pi) * math.cos(u)


@lru_cache(maxsize=64)
def hrg_integral_parts(tau: float, tol: float = DEFAULT_QUAD_TOLERANCE) -> Tuple[float, float, float]:
    """(head over [0, 1], tail over [1, inf), quadrature error estimate) of
    the integral of x^(1-tau) min(arccos(1 - 2x^2)/pi, 1)"""
    check_tau(tau)
    head, error = integrate.quad(_hrg_head_integrand, 0.0, math.pi / 2.0, args=(tau,),
                                 weight="alg", wvar=(2.0 - tau, 0.0), epsabs=tol, epsrel=tol, limit=200)
    tail = 1.0 / (tau - 2.0)
    return float(head), tail, float(error)


def hrg_integral(tau: float, tol: float = DEFAULT_QUAD_TOLERANCE) -> float:
    head, tail, _ = hrg_integral_parts(tau, tol)
    return head + tail


def tail_constant(model: str, tau: float, c: Optional[float] = None, mu: Optional[float] = None,
                  nu: float = 1.0, tol: float = DEFAULT_QUAD_TOLERANCE) -> float:
    """Constant in front of n^(3-tau) k^(tau-3) above the threshold"""
    _check_model(model)
    check_tau(tau)
    if model == "ecm":
        c, mu = _require("c", c), _require("mu", mu)
        return -c * mu ** (2.0 - tau) * float(gamma(2.0 - tau))
    if model == "irg":
        c, mu = _require("c", c), _require("mu", mu)
        return c * mu ** (2.0 - tau) / ((3.0 - tau) * (tau - 2.0))
    if nu <= 0:
        raise DomainError(f"nu must be positive, got {nu}")
    front = nu * (tau - 1.0) ** 2 / ((tau - 2.0) * math.pi)
    return front * (math.pi / (2.0 * nu)) ** (2.0 - tau) * hrg_integral(tau, tol)


def plateau_prefactor(model: str, tau: float, c: Optional[float] = None, mu: Optional[float] = None,
                      nu: float = 1.0) -> float:
    """Multiplier of n^((3-tau)/(tau-1)) S_{(tau-1)/2} below the threshold"""
    _check_model(model)
    check_tau(tau)
    shared = float(gamma(2.5 - tau / 2.0)) * math.cos(math.pi * (tau - 1.0) / 4.0)
    power = 2.0 / (tau - 1.0)
    if model == "hrg":
        if nu <= 0:
            raise DomainError(f"nu must be positive, got {nu}")
        return (2.0 * nu / math.pi) * (2.0 / (3.0 - tau) * shared) ** power
    c, mu = _require("c", c), _require("mu", mu)
    return (1.0 / mu) * (2.0 * c * shared / ((tau - 1.0) * (3.0 - tau))) ** power


def stable_index(tau: float) -> float:
    return (check_tau(tau) - 1.0) / 2.0


def expected_ak_constant(tau: float, c: float, mu: float) -> float:
    """Constant of the ensemble mean E[a(k)] ~ const * (n/k)^(3-tau), valid over all k"""
    return tail_constant("ecm", tau, c, mu)


def ck_relation(a_k, mu: float, n: float):
    """c(k) = a(k)^2 / (mu n) in the regime k >> sqrt(n)"""
    a_k = np.asarray(a_k, dtype=float)
    if (a_k < 0).any():
        raise DomainError("a(k) must be non-negative")
    out = a_k ** 2 / (mu * n)
    return float(out) if out.ndim == 0 else out


def ck_direct(n: float, k, tau: float, c: float, mu: float):
    """c^2 Gamma(2-tau)^2 mu^(3-2tau) n^(5-2tau) k^(2tau-6), the large-k c(k) of the ECM"""
    check_tau(tau)
    g = float(gamma(2.0 - tau))
    out = c ** 2 * g ** 2 * mu ** (3.0 - 2.0 * tau) * float(n) ** (5.0 - 2.0 * tau) \
        * np.asarray(k, dtype=float) ** (2.0 * tau - 6.0)
    return float(out) if np.ndim(out) == 0 else out

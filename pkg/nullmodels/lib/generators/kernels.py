"""Connection-probability kernels and the hyperbolic distance."""

import math

import numpy as np

from ..errors import DomainError


def irg_connection_prob(h: float, h_prime: float, mu_n: float) -> float:
    """Chung-Lu kernel min(h h' / mu_n, 1)"""
    if mu_n <= 0:
        raise DomainError(f"Normalization mu_n must be positive, got {mu_n}")
    return min(h * h_prime / mu_n, 1.0)


def ecm_connection_prob(d_u: float, d_v: float, L_n: float) -> float:
    """Approximate erased-configuration edge probability 1 - exp(-d_u d_v / L_n)"""
    if L_n <= 0:
        raise DomainError(f"Half-edge total must be positive, got {L_n}")
    return -math.expm1(-d_u * d_v / L_n)


def relative_angle(phi_u, phi_v):
    """Angle between two directions, in [0, pi]"""
    return np.pi - np.abs(np.pi - np.abs(np.asarray(phi_u) - np.asarray(phi_v)))


def cosh_distance(r_u, phi_u, r_v, phi_v):
    # cosh r_u cosh r_v - sinh r_u sinh r_v cos(theta), rewritten without cancellation
    half = relative_angle(phi_u, phi_v) / 2.0
    arg = np.cosh(np.subtract(r_u, r_v)) + 2.0 * np.sinh(r_u) * np.sinh(r_v) * np.sin(half) ** 2
    return np.maximum(arg, 1.0)


def hyperbolic_distance(u, v) -> float:
    """Distance between points u = (r, phi) and v = (r, phi) on the hyperbolic plane"""
    (r_u, phi_u), (r_v, phi_v) = u, v
    half = (math.pi - abs(math.pi - abs(phi_u - phi_v))) / 2.0
    arg = math.cosh(r_u - r_v) + 2.0 * math.sinh(r_u) * math.sinh(r_v) * math.sin(half) ** 2
    return math.acosh(max(arg, 1.0))


def hyperbolic_distances(r_u, phi_u, r_v, phi_v) -> np.ndarray:
    return np.arccosh(cosh_distance(r_u, phi_u, r_v, phi_v))


def max_connection_angle(r_u, r_v, R: float) -> np.ndarray:
    """Largest relative angle at which points at radii r_u, r_v lie within distance R"""
    r_u, r_v = np.broadcast_arrays(np.asarray(r_u, dtype=float), np.asarray(r_v, dtype=float))
    theta = np.full(r_u.shape, np.pi)
    far = (r_u + r_v) > R
    ru, rv = r_u[far], r_v[far]
    q = (math.cosh(R) - np.cosh(ru - rv)) / (2.0 * np.sinh(ru) * np.sinh(rv))
    theta[far] = 2.0 * np.arcsin(np.sqrt(np.clip(q, 0.0, 1.0)))
    return theta


def hrg_connection_prob(t_u: float, t_v: float, n: int, nu: float) -> float:
    """Approximate P(edge | types) = min(arccos(1 - 2 x^2) / pi, 1), x = nu t_u t_v / n"""
    x = nu * t_u * t_v / n
    if x >= 1.0:
        return 1.0
    return math.acos(1.0 - 2.0 * x * x) / math.pi

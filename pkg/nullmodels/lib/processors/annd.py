"""Average nearest-neighbor degree a(k) and its degree-band version a_eps(k)."""

import logging
import math
from typing import Iterable, List, Optional, Tuple

import numpy as np

from ..errors import DomainError
from ..models.curves import AnndCurve, BandResult, ContributionShare, CurvePoint, EpsilonRule
from ..models.graph import SimpleGraph

logger = logging.getLogger(__name__)

# Band edges k(1 -/+ eps) are snapped to integers with this tolerance
EDGE_TOLERANCE = 1e-9


def annd_curve(g: SimpleGraph) -> AnndCurve:
    """a(k) = (k N_k)^-1 * sum over degree-k vertices of their neighbor degree sums.

    Degrees with N_k = 0 are omitted, and so is k = 0 where a(k) is undefined.
    """
    if g.n == 0:
        return AnndCurve()
    counts = np.bincount(g.degrees)
    sums = np.zeros(counts.shape[0], dtype=np.int64)
    np.add.at(sums, g.degrees, g.neighbor_degree_sums)

    ks = np.flatnonzero(counts)
    ks = ks[ks > 0]
    values = sums[ks] / (ks * counts[ks])
    return AnndCurve(points=[
        CurvePoint(k=int(k), count=int(counts[k]), eps=0.0, value=float(v))
        for k, v in zip(ks, values)
    ])


def band_limits(k: int, eps: float) -> Tuple[int, int]:
    """Integer degrees inside [k(1 - eps), k(1 + eps)]"""
    lower = math.ceil(k * (1.0 - eps) - EDGE_TOLERANCE)
    upper = math.floor(k * (1.0 + eps) + EDGE_TOLERANCE)
    return max(lower, 0), upper


class DegreeBands:
    """Prefix sums over degrees, so any band count or neighbor-degree sum is O(1)"""

    def __init__(self, g: SimpleGraph):
        self.graph = g
        counts = np.bincount(g.degrees) if g.n else np.zeros(1, dtype=np.int64)
        sums = np.zeros(counts.shape[0], dtype=np.int64)
        if g.n:
            np.add.at(sums, g.degrees, g.neighbor_degree_sums)
        self.max_degree = counts.shape[0] - 1
        self._count_prefix = np.concatenate([[0], np.cumsum(counts)])
        self._sum_prefix = np.concatenate([[0], np.cumsum(sums)])

    def _clip(self, lower: int, upper: int) -> Tuple[int, int]:
        return max(lower, 0), min(upper, self.max_degree)

    def count(self, lower: int, upper: int) -> int:
        lo, hi = self._clip(lower, upper)
        if lo > hi:
            return 0
        return int(self._count_prefix[hi + 1] - self._count_prefix[lo])

    def neighbor_sum(self, lower: int, upper: int) -> int:
        lo, hi = self._clip(lower, upper)
        if lo > hi:
            return 0
        return int(self._sum_prefix[hi + 1] - self._sum_prefix[lo])

    def epsilon_grid(self, step: float, eps_cap: float) -> List[float]:
        steps = int(math.floor(eps_cap / step + EDGE_TOLERANCE))
        return [round(i * step, 10) for i in range(steps + 1)]

    def choose_epsilon(self, k: int, m_min: int, eps_cap: float, step: float = 0.01) -> float:
        for eps in self.epsilon_grid(step, eps_cap):
            if self.count(*band_limits(k, eps)) >= m_min:
                return eps
        return eps_cap

    def resolve(self, k: int, rule: EpsilonRule) -> float:
        if rule.mode == "fixed":
            return rule.eps
        return self.choose_epsilon(k, rule.m_min, rule.eps_cap, rule.step)

    def band(self, k: int, rule: EpsilonRule) -> BandResult:
        if k < 1:
            raise DomainError(f"Band degree must be >= 1, got {k}")
        eps = self.resolve(k, rule)
        lower, upper = band_limits(k, eps)
        count = self.count(lower, upper)
        if count == 0:
            return BandResult(k=k, eps=eps, count=0, value=None, lower=lower, upper=upper)
        value = self.neighbor_sum(lower, upper) / (k * count)
        return BandResult(k=k, eps=eps, count=count, value=value, lower=lower, upper=upper)


def epsilon_rule_auto(g: SimpleGraph, k: int, m_min: int = 20, eps_cap: float = 0.25,
                      step: float = 0.01) -> float:
    """Smallest eps on the grid 0, step, 2*step, ... with |M_eps(k)| >= m_min, else eps_cap"""
    if m_min < 1:
        raise DomainError(f"m_min must be >= 1, got {m_min}")
    return DegreeBands(g).choose_epsilon(k, m_min, eps_cap, step)


def annd_band(g: SimpleGraph, k: int, rule: EpsilonRule) -> BandResult:
    """a_eps(k) over M_eps(k) = {i : deg i in [k(1-eps), k(1+eps)]}"""
    return DegreeBands(g).band(k, rule)


def annd_band_curve(g: SimpleGraph, rule: EpsilonRule, ks: Optional[Iterable[int]] = None) -> AnndCurve:
    """a_eps(k) at every k in ks (default 1..max degree); empty bands are left out"""
    bands = DegreeBands(g)
    ks = range(1, bands.max_degree + 1) if ks is None else sorted(set(int(k) for k in ks))
    points = []
    skipped = 0
    for k in ks:
        result = bands.band(k, rule)
        if result.empty:
            skipped += 1
            continue
        points.append(CurvePoint(k=k, count=result.count, eps=result.eps, value=result.value))
    if skipped:
        logger.debug(f"Omitted {skipped} empty bands")
    return AnndCurve(points=points)


def size_biased_mean(degrees, L_n: Optional[float] = None) -> float:
    """sum D_i^2 / L_n, the mean of the size-biased degree"""
    degrees = np.asarray(degrees, dtype=np.float64)
    L_n = float(degrees.sum()) if L_n is None else float(L_n)
    if L_n <= 0:
        raise DomainError(f"Half-edge total must be positive, got {L_n}")
    return float(np.dot(degrees, degrees) / L_n)


def contribution_profile(g: SimpleGraph, k: int, rule: EpsilonRule, delta_grid: Iterable[float],
                         normalization: Optional[float] = None) -> List[ContributionShare]:
    """Split the mass of a_eps(k) by neighbor degree inside or outside
    [delta * mu_n / k, mu_n / (delta * k)].

    mu_n defaults to the realized half-edge total of g.
    """
    bands = DegreeBands(g)
    result = bands.band(k, rule)
    if result.empty:
        logger.warning(f"Band around k={k} is empty at eps={result.eps}; no contribution profile")
        return []

    mu_n = float(g.degrees.sum()) if normalization is None else float(normalization)
    owners = np.repeat(np.arange(g.n), g.degrees)
    in_band = (g.degrees >= result.lower) & (g.degrees <= result.upper)
    neighbor_degrees = g.degrees[g.indices[in_band[owners]]].astype(np.float64)
    total = neighbor_degrees.sum()

    shares = []
    for delta in delta_grid:
        if not 0.0 < delta <= 1.0:
            raise DomainError(f"delta must lie in (0, 1], got {delta}")
        lower, upper = delta * mu_n / k, mu_n / (delta * k)
        inside = neighbor_degrees[(neighbor_degrees >= lower) & (neighbor_degrees <= upper)].sum() / total
        shares.append(ContributionShare(delta=delta, lower=lower, upper=upper,
                                        inside=float(inside), outside=float(1.0 - inside)))
    return shares

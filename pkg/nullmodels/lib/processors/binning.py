"""Geometric (log-spaced) degree bins: bin j holds the integers k with
floor(bins_per_decade * log10 k) == j."""

import math
from typing import Dict, Tuple

import numpy as np
from scipy.stats import gmean

from ..models.curves import AnndCurve, ClusteringCurve, CurvePoint
from ..models.graph import SimpleGraph
from .clustering import local_triangles

INDEX_TOLERANCE = 1e-9


def bin_index(k, bins_per_decade: int = 16):
    """Bin of each degree k >= 1"""
    return np.floor(bins_per_decade * np.log10(np.asarray(k, dtype=np.float64)) + INDEX_TOLERANCE).astype(np.int64)


def bin_integers(j: int, bins_per_decade: int = 16) -> Tuple[int, int]:
    """First and last integer in bin j; first > last when the bin holds none"""
    first = max(1, math.floor(10 ** (j / bins_per_decade)))
    while bin_index(first, bins_per_decade) < j:
        first += 1
    while first > 1 and bin_index(first - 1, bins_per_decade) >= j:
        first -= 1
    last = max(first, math.floor(10 ** ((j + 1) / bins_per_decade)))
    while bin_index(last, bins_per_decade) > j:
        last -= 1
    while bin_index(last + 1, bins_per_decade) <= j:
        last += 1
    return first, last


def bin_center(j: int, bins_per_decade: int = 16) -> float:
    """Geometric mean of the integers in bin j"""
    first, last = bin_integers(j, bins_per_decade)
    if first > last:
        raise ValueError(f"Bin {j} contains no integer")
    return float(gmean(np.arange(first, last + 1, dtype=np.float64)))


def bin_centers(bins, bins_per_decade: int = 16) -> Dict[int, float]:
    return {int(j): bin_center(int(j), bins_per_decade) for j in bins}


def binned_annd(g: SimpleGraph, bins_per_decade: int = 16) -> AnndCurve:
    """Per bin: sum of neighbor degree sums over sum of degrees of the vertices in the bin"""
    present = g.degrees >= 1
    if not present.any():
        return AnndCurve()
    bins = bin_index(g.degrees[present], bins_per_decade)
    labels, inverse, counts = np.unique(bins, return_inverse=True, return_counts=True)
    s = np.zeros(labels.shape[0], dtype=np.int64)
    d = np.zeros(labels.shape[0], dtype=np.int64)
    np.add.at(s, inverse, g.neighbor_degree_sums[present])
    np.add.at(d, inverse, g.degrees[present])
    centers = bin_centers(labels, bins_per_decade)
    return AnndCurve(points=[
        CurvePoint(k=centers[int(j)], count=int(c), eps=0.0, value=float(si / di))
        for j, c, si, di in zip(labels, counts, s, d)
    ])


def binned_clustering(g: SimpleGraph, bins_per_decade: int = 16) -> ClusteringCurve:
    """Per bin: mean local clustering of the vertices of degree >= 2 in the bin"""
    present = g.degrees >= 2
    if not present.any():
        return ClusteringCurve()
    deg = g.degrees[present]
    local = local_triangles(g)[present] / (deg * (deg - 1) / 2.0)
    labels, inverse, counts = np.unique(bin_index(deg, bins_per_decade), return_inverse=True, return_counts=True)
    totals = np.zeros(labels.shape[0], dtype=np.float64)
    np.add.at(totals, inverse, local)
    centers = bin_centers(labels, bins_per_decade)
    return ClusteringCurve(points=[
        CurvePoint(k=centers[int(j)], count=int(c), eps=0.0, value=float(t / c))
        for j, c, t in zip(labels, counts, totals)
    ])

import logging

import numpy as np

from ..models.curves import ClusteringCurve, CurvePoint
from ..models.graph import SimpleGraph

logger = logging.getLogger(__name__)


def local_triangles(g: SimpleGraph) -> np.ndarray:
    """T_i, the number of triangles through each vertex: diag(A^3) / 2 via (A @ A) * A"""
    if g.num_edges == 0:
        return np.zeros(g.n, dtype=np.int64)
    A = g.to_csr()
    closed = (A @ A).multiply(A)
    return np.asarray(closed.sum(axis=1)).ravel().astype(np.int64) // 2


def local_clustering(g: SimpleGraph) -> np.ndarray:
    """2 T_i / (d_i (d_i - 1)); NaN for vertices of degree below 2"""
    d = g.degrees.astype(np.float64)
    pairs = d * (d - 1.0) / 2.0
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(g.degrees >= 2, local_triangles(g) / pairs, np.nan)


def clustering_curve(g: SimpleGraph) -> ClusteringCurve:
    """c(k): mean local clustering over degree-k vertices, for every k >= 2 present"""
    if g.n == 0:
        return ClusteringCurve()
    triangles = local_triangles(g)
    counts = np.bincount(g.degrees)
    tri_sums = np.zeros(counts.shape[0], dtype=np.int64)
    np.add.at(tri_sums, g.degrees, triangles)

    ks = np.flatnonzero(counts)
    ks = ks[ks >= 2]
    values = 2 * tri_sums[ks] / (ks * (ks - 1) * counts[ks])
    logger.debug(f"Clustering over {int(counts[ks].sum())} vertices, {int(triangles.sum()) // 3} triangles")
    return ClusteringCurve(points=[
        CurvePoint(k=int(k), count=int(counts[k]), eps=0.0, value=float(v))
        for k, v in zip(ks, values)
    ])

import logging

import numpy as np
from scipy.stats import linregress

from ..errors import InsufficientDataError
from ..models.curves import DegreeCurve, EnsembleSummary, FitResult

logger = logging.getLogger(__name__)


def fit_loglog_slope(curve, k_lo: float, k_hi: float) -> FitResult:
    """Least squares of ln a(k) on ln k over k_lo <= k <= k_hi.

    Ensemble summaries are fitted on their median column.
    """
    if isinstance(curve, EnsembleSummary):
        ks, values = curve.ks(), curve.values("median")
    elif isinstance(curve, DegreeCurve):
        ks, values = curve.ks(), curve.values()
    else:
        ks, values = (np.asarray(a, dtype=float) for a in curve)

    keep = (ks >= k_lo) & (ks <= k_hi) & (values > 0)
    if keep.sum() < 3:
        raise InsufficientDataError(f"Need at least 3 points in [{k_lo:g}, {k_hi:g}], got {int(keep.sum())}")

    fit = linregress(np.log(ks[keep]), np.log(values[keep]))
    logger.debug(f"Slope fit over {int(keep.sum())} points: slope={fit.slope:.4f}, r={fit.rvalue:.4f}")
    return FitResult(slope=float(fit.slope), intercept=float(fit.intercept), r_squared=float(fit.rvalue ** 2),
                     points=int(keep.sum()), k_lo=float(k_lo), k_hi=float(k_hi))

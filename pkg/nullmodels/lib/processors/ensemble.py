import logging
from abc import ABC, abstractmethod
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from ..errors import ConfigError
from ..generators.service import GeneratorService
from ..models.curves import Binning, DegreeCurve, EnsembleRow, EnsembleSummary, EpsilonRule
from ..models.experiment import ModelSpec
from ..models.graph import SimpleGraph
from ..sampling.seeds import SeedSpec
from .annd import annd_band_curve, annd_curve
from .binning import bin_centers, bin_index, binned_annd, binned_clustering
from .clustering import clustering_curve

logger = logging.getLogger(__name__)


class StatProcessor(ABC):
    @abstractmethod
    def process(self, g: SimpleGraph, rule: EpsilonRule, binning: Binning) -> DegreeCurve:
        """Compute one per-degree curve of a realization"""
        pass


class AnndProcessor(StatProcessor):
    def process(self, g: SimpleGraph, rule: EpsilonRule, binning: Binning) -> DegreeCurve:
        if binning.mode == "geometric":
            return binned_annd(g, binning.bins_per_decade)
        return annd_curve(g)


class AnndBandProcessor(StatProcessor):
    def process(self, g: SimpleGraph, rule: EpsilonRule, binning: Binning) -> DegreeCurve:
        if binning.mode == "geometric":
            present = g.degrees[g.degrees >= 1]
            bins = sorted(set(bin_index(present, binning.bins_per_decade).tolist()))
            ks = [max(1, round(c)) for c in bin_centers(bins, binning.bins_per_decade).values()]
            return annd_band_curve(g, rule, ks)
        return annd_band_curve(g, rule)


class ClusteringProcessor(StatProcessor):
    def process(self, g: SimpleGraph, rule: EpsilonRule, binning: Binning) -> DegreeCurve:
        if binning.mode == "geometric":
            return binned_clustering(g, binning.bins_per_decade)
        return clustering_curve(g)


class StatService:
    def __init__(self):
        self.processors = {
            'annd': AnndProcessor(),
            'annd_band': AnndBandProcessor(),
            'clustering': ClusteringProcessor()
        }

    def compute(self, stat: str, g: SimpleGraph, rule: EpsilonRule, binning: Binning) -> DegreeCurve:
        processor = self.processors.get(stat)
        if not processor:
            raise ValueError(f"Unsupported statistic: {stat}")
        return processor.process(g, rule, binning)


RealizationTask = Tuple[ModelSpec, SeedSpec, Tuple[str, ...], EpsilonRule, Binning]
RealizationCurves = Tuple[int, Dict[str, List[Tuple[float, float]]]]


def run_realization(task: RealizationTask) -> RealizationCurves:
    """Generate one realization and reduce it to (k, value) pairs per statistic"""
    spec, seed, stats, rule, binning = task
    outcome = GeneratorService().generate(spec, seed)
    service = StatService()
    curves = {}
    for stat in stats:
        curve = service.compute(stat, outcome.graph, rule, binning)
        curves[stat] = [(p.k, p.value) for p in curve.points]
    return seed.stream_id, curves


def summarize(statistic: str, per_realization: Sequence[Tuple[int, List[Tuple[float, float]]]],
              binning: Binning, realizations: int) -> EnsembleSummary:
    """Per-k mean, median, quartiles and population std over realizations.

    Rows are sorted by (k, stream) before reducing, so the result does not
    depend on the order in which realizations finished.
    """
    records = [(stream, k, value) for stream, points in per_realization for k, value in points]
    if not records:
        return EnsembleSummary(statistic=statistic, binning=binning, realizations=realizations)

    frame = pd.DataFrame.from_records(records, columns=["stream", "k", "value"])
    frame = frame.sort_values(["k", "stream"], kind="mergesort").reset_index(drop=True)
    grouped = frame.groupby("k", sort=True)["value"]
    table = pd.DataFrame({
        "count": grouped.size(),
        "mean": grouped.mean(),
        "median": grouped.median(),
        "q25": grouped.quantile(0.25),
        "q75": grouped.quantile(0.75),
        "std": grouped.std(ddof=0),
    }).reset_index()

    rows = [EnsembleRow(**record) for record in table.to_dict("records")]
    return EnsembleSummary(statistic=statistic, binning=binning, realizations=realizations, rows=rows)


def ensemble_run(spec: ModelSpec, realizations: int, seed: int = 0, stats: Iterable[str] = ("annd",),
                 binning: Optional[Binning] = None, rule: Optional[EpsilonRule] = None,
                 threads: int = 1) -> Dict[str, EnsembleSummary]:
    """R independent realizations (stream ids 0..R-1), one summary per statistic"""
    if realizations < 1:
        raise ConfigError(f"Need at least one realization, got {realizations}")
    binning = binning or Binning()
    rule = rule or EpsilonRule.fixed(0.0)
    stats = tuple(stats)
    base = SeedSpec(master_seed=seed)
    tasks = [(spec, base.for_stream(i), stats, rule, binning) for i in range(realizations)]

    logger.info(f"Running {realizations} {spec.model} realizations (n={spec.n}) on {threads} worker(s)")
    if threads > 1 and realizations > 1:
        with Pool(min(threads, realizations)) as pool:
            results = pool.map(run_realization, tasks)
    else:
        results = [run_realization(task) for task in tasks]

    summaries = {}
    for stat in stats:
        per_realization = [(stream, curves[stat]) for stream, curves in results]
        summaries[stat] = summarize(stat, per_realization, binning, realizations)
        logger.debug(f"{stat}: {len(summaries[stat].rows)} rows")
    return summaries

import logging
from pathlib import Path
from typing import Dict, Optional, Union

import numpy as np
import pandas as pd

from ..config import Config
from .errors import InsufficientDataError
from .fetch.edgelist import read_edge_list, read_graph, sidecar_path, write_edge_list, write_sidecar
from .generators.service import GeneratorService
from .models.curves import Binning, DegreeCurve, EnsembleSummary, EpsilonRule, FitReport
from .models.experiment import ExperimentConfig, ModelSpec
from .models.graph import SimpleGraph
from .models.prediction import TheoryPrediction
from .models.schemas import EcmOutcome, GraphSidecar, PowerLawSpec
from .output import write_csv, write_json
from .processors.annd import size_biased_mean
from .processors.ensemble import StatService, ensemble_run
from .processors.fitting import fit_loglog_slope
from .sampling.seeds import SeedSpec
from .theory.constants import ck_relation
from .theory.predictions import plateau_quantiles, predict, predicted_curve

logger = logging.getLogger(__name__)

EpsilonArg = Union[None, str, float]


def epsilon_rule(eps: EpsilonArg, m_min: int = Config.DEFAULT_M_MIN,
                 eps_cap: float = Config.DEFAULT_EPS_CAP) -> Optional[EpsilonRule]:
    """None for the plain a(k); 'auto' for the occupancy rule; a number for a fixed eps"""
    if eps is None:
        return None
    if isinstance(eps, str) and eps.lower() == "auto":
        return EpsilonRule.auto(m_min=m_min, eps_cap=eps_cap, step=Config.DEFAULT_EPS_STEP)
    return EpsilonRule.fixed(float(eps))


def degree_curve(g: SimpleGraph, statistic: str, rule: Optional[EpsilonRule], binning: Binning) -> DegreeCurve:
    if statistic == "annd" and rule is not None:
        statistic = "annd_band"
    return StatService().compute(statistic, g, rule or EpsilonRule.fixed(0.0), binning)


def cmd_generate(model: str, n: int, tau: Optional[float], seed: int = Config.DEFAULT_SEED, stream: int = 0,
                 x_min: int = 1, nu: float = 1.0, strategy: Optional[str] = None,
                 out: Optional[Path] = None) -> Path:
    """Generate one realization and write its edge list plus JSON sidecar"""
    try:
        spec = ModelSpec(model=model, n=n, tau=tau, x_min=x_min, nu=nu, strategy=strategy)
        seed_spec = SeedSpec(master_seed=seed, stream_id=stream)
        outcome = GeneratorService().generate(spec, seed_spec)

        out = Path(out) if out else Config.get_output_dir() / f"{model}_n{n}_seed{seed}_stream{stream}.tsv"
        Config.ensure_dirs(out)
        write_edge_list(outcome.graph, out)

        is_ecm = isinstance(outcome, EcmOutcome)
        sidecar = GraphSidecar(
            model=model,
            n=n,
            tau=tau,
            nu=nu if model == "hrg" else None,
            x_min=x_min,
            seed=seed,
            stream=stream,
            strategy=spec.resolved_strategy,
            L_n=outcome.L_n if is_ecm else None,
            erased_degree_sum=int(outcome.graph.degrees.sum()) if is_ecm else None,
            edges=outcome.graph.num_edges,
        )
        meta = write_sidecar(sidecar, sidecar_path(out))
        logger.info(f"Generated {model} graph with {outcome.graph.num_edges} edges: {out} (+ {meta.name})")
        return out

    except Exception as e:
        logger.error(f"Error generating graph: {e}")
        raise


def cmd_annd(path: Path, eps: EpsilonArg = None, m_min: int = Config.DEFAULT_M_MIN,
             eps_cap: float = Config.DEFAULT_EPS_CAP, binning: Optional[Binning] = None,
             out: Optional[Path] = None) -> DegreeCurve:
    """a(k) (or a_eps(k) when eps is given) of an edge-list file as CSV k,count,eps,value"""
    try:
        g = read_graph(path)
        curve = degree_curve(g, "annd", epsilon_rule(eps, m_min, eps_cap), binning or Binning())
        write_csv(curve.to_frame(), out)
        return curve

    except Exception as e:
        logger.error(f"Error computing ANND: {e}")
        raise


def cmd_clustering(path: Path, binning: Optional[Binning] = None, out: Optional[Path] = None) -> DegreeCurve:
    """c(k) of an edge-list file as CSV k,count,eps,value"""
    try:
        g = read_graph(path)
        curve = degree_curve(g, "clustering", None, binning or Binning())
        write_csv(curve.to_frame(), out)
        return curve

    except Exception as e:
        logger.error(f"Error computing clustering: {e}")
        raise


def cmd_ingest(path: Path, out_dir: Optional[Path] = None, eps: EpsilonArg = None,
               m_min: int = Config.DEFAULT_M_MIN, eps_cap: float = Config.DEFAULT_EPS_CAP,
               binning: Optional[Binning] = None) -> Dict[str, Path]:
    """Read an external edge list once and write <stem>_annd.csv and <stem>_clustering.csv"""
    try:
        path = Path(path)
        edge_file = read_edge_list(path)
        g = edge_file.to_graph()
        binning = binning or Binning()

        out_dir = Path(out_dir) if out_dir else Config.get_output_dir()
        Config.ensure_dirs(out_dir / path.name)

        written = {}
        for statistic, rule in (("annd", epsilon_rule(eps, m_min, eps_cap)), ("clustering", None)):
            curve = degree_curve(g, statistic, rule, binning)
            written[statistic] = write_csv(curve.to_frame(), out_dir / f"{path.stem}_{statistic}.csv")

        summary = f"n={g.n}, edges={g.num_edges}, max degree={g.max_degree}"
        if g.num_edges:
            summary += f", size-biased mean degree={size_biased_mean(g.degrees):.4f}"
        logger.info(f"Ingested {path}: {summary}")
        return written

    except Exception as e:
        logger.error(f"Error ingesting {path}: {e}")
        raise


def _skeleton(ks: np.ndarray, prediction: TheoryPrediction) -> np.ndarray:
    """Piecewise plateau/tail prediction at each k; NaN above the cutoff"""
    inside = (ks >= 1.0) & (ks <= prediction.cutoff_k)
    points = {p.k: p.value for p in predicted_curve(prediction, ks[inside])}
    return np.array([points.get(float(k), np.nan) for k in ks])


def _overlay(frame: pd.DataFrame, statistic: str, prediction: TheoryPrediction) -> pd.DataFrame:
    frame = frame.copy()
    ks = frame["k"].to_numpy(dtype=float)
    tail = prediction.tail_value(ks)
    if statistic == "clustering":
        if prediction.model == "hrg":
            logger.warning("No closed-form c(k) overlay for hrg; overlay skipped")
            return frame
        frame["pred_ck"] = ck_relation(tail, prediction.mu, prediction.n)
        return frame
    frame["pred_tail"] = tail
    frame["pred_plateau"] = prediction.plateau_level
    frame["pred_curve"] = _skeleton(ks, prediction)
    if prediction.expected_ak_constant is not None:
        frame["pred_mean"] = prediction.expected_ak_constant * (prediction.n / ks) ** prediction.tail_n_exponent
    return frame


def _stat_path(out: Path, statistic: str, single: bool) -> Path:
    return out if single else out.with_name(f"{out.stem}_{statistic}{out.suffix or '.csv'}")


def cmd_ensemble(config: ExperimentConfig, threads: Optional[int] = None) -> Dict[str, EnsembleSummary]:
    """Run an ensemble experiment and write one CSV k,count,mean,median,q25,q75,std per statistic"""
    try:
        degrees = None
        if config.degrees_from is not None:
            degrees = read_graph(config.degrees_from).degrees.tolist()
            logger.info(f"Using the degree sequence of {config.degrees_from} ({len(degrees)} vertices)")
        spec = config.to_model_spec(degrees)
        workers = Config.threads(threads if threads is not None else config.threads)

        summaries = ensemble_run(spec, config.realizations, config.seed, config.stats,
                                 config.binning, config.epsilon, workers)

        prediction = predict(spec.model, spec.n, spec.law, spec.nu) if config.overlay else None
        out = Path(config.out) if config.out else Config.get_output_dir() / f"{spec.model}_ensemble.csv"
        Config.ensure_dirs(out)

        single = len(summaries) == 1
        for statistic, summary in summaries.items():
            frame = summary.to_frame()
            if prediction is not None:
                frame = _overlay(frame, statistic, prediction)
            write_csv(frame, _stat_path(out, statistic, single))

        if config.fit_window is not None:
            k_lo, k_hi = config.fit_window
            report = FitReport(model=spec.model, n=spec.n, tau=spec.tau)
            for statistic, summary in summaries.items():
                if statistic == "clustering":
                    continue
                try:
                    report.fits[statistic] = fit_loglog_slope(summary, k_lo, k_hi)
                    logger.info(f"{statistic} median slope on [{k_lo:g}, {k_hi:g}]: "
                                f"{report.fits[statistic].slope:.4f}")
                except InsufficientDataError as e:
                    logger.warning(f"Skipping slope fit for {statistic}: {e}")
            write_json(report, out.with_name(f"{out.stem}_fit.json"))

        return summaries

    except Exception as e:
        logger.error(f"Error running ensemble: {e}")
        raise


def cmd_theory(model: str, n: int, tau: float, x_min: int = 1, nu: float = 1.0, tol: float = 1e-8,
               samples: int = Config.DEFAULT_PLATEAU_SAMPLES, seed: int = Config.DEFAULT_SEED,
               out: Optional[Path] = None) -> TheoryPrediction:
    """Closed-form predictions as JSON, with Monte-Carlo plateau quartiles when samples > 0"""
    try:
        law = PowerLawSpec(tau=tau, x_min=x_min)
        prediction = predict(model, n, law, nu, tol)
        if samples > 0:
            q = plateau_quantiles(model, n, law, (0.25, 0.5, 0.75), samples, SeedSpec(master_seed=seed), nu)
            prediction.plateau_quantiles.update({"q25": q[0.25], "median": q[0.5], "q75": q[0.75]})
        write_json(prediction, out)
        return prediction

    except Exception as e:
        logger.error(f"Error evaluating theory: {e}")
        raise

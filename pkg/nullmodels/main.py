#!/usr/bin/env python3

import argparse
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from .config import Config
from .lib.commands import cmd_annd, cmd_clustering, cmd_ensemble, cmd_generate, cmd_ingest, cmd_theory
from .lib.errors import DomainError, ExitCode, NullModelError
from .lib.models.curves import Binning
from .lib.models.experiment import MODELS

logger = logging.getLogger(__name__)


def setup_logging(debug: bool = False):
    """Configure logging"""
    level = logging.DEBUG if debug else logging.INFO
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )


def exit_code_for(error: Exception) -> int:
    """Map an exception to the process exit code"""
    if isinstance(error, NullModelError):
        return int(error.exit_code)
    if isinstance(error, ValidationError):
        causes = [detail.get('ctx', {}).get('error') for detail in error.errors()]
        if any(isinstance(cause, DomainError) for cause in causes):
            return int(ExitCode.DOMAIN)
        return int(ExitCode.CONFIG)
    if isinstance(error, OSError):
        return int(ExitCode.IO)
    return int(ExitCode.FAILURE)


def _add_binning(parser: argparse.ArgumentParser):
    parser.add_argument("--binning", choices=["raw", "geometric"], default="raw")
    parser.add_argument("--bins-per-decade", type=int, default=Config.DEFAULT_BINS_PER_DECADE)


def _add_epsilon(parser: argparse.ArgumentParser):
    parser.add_argument("--eps", help="'auto' or a fixed band half-width; omit for plain a(k)")
    parser.add_argument("--m-min", type=int, default=Config.DEFAULT_M_MIN, help="Band occupancy for --eps auto")
    parser.add_argument("--eps-cap", type=float, default=Config.DEFAULT_EPS_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Scale-free null models and degree-correlation statistics")
    parser.add_argument('--debug', action='store_true', help='Enable debug logging')
    parser.add_argument('--threads', type=int, help='Worker processes (default: NULLMODEL_THREADS or 1)')

    # Create subparsers
    subparsers = parser.add_subparsers(dest="command")

    # Generate command
    generate_parser = subparsers.add_parser("generate", help="Write one realization as an edge list")
    generate_parser.add_argument("--model", required=True, choices=MODELS)
    generate_parser.add_argument("--n", type=int, required=True)
    generate_parser.add_argument("--tau", type=float, required=True)
    generate_parser.add_argument("--x-min", type=int, default=1)
    generate_parser.add_argument("--nu", type=float, default=1.0)
    generate_parser.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    generate_parser.add_argument("--stream", type=int, default=0)
    generate_parser.add_argument("--strategy", help="irg: naive|pruned|skipping, hrg: naive|band")
    generate_parser.add_argument("--out", type=Path)

    # ANND command
    annd_parser = subparsers.add_parser("annd", help="a(k) of an edge-list file as CSV")
    annd_parser.add_argument("path", type=Path)
    _add_epsilon(annd_parser)
    _add_binning(annd_parser)
    annd_parser.add_argument("--out", type=Path, help="CSV path (default: stdout)")

    # Clustering command
    clustering_parser = subparsers.add_parser("clustering", help="c(k) of an edge-list file as CSV")
    clustering_parser.add_argument("path", type=Path)
    _add_binning(clustering_parser)
    clustering_parser.add_argument("--out", type=Path, help="CSV path (default: stdout)")

    # Ingest command
    ingest_parser = subparsers.add_parser("ingest", help="a(k) and c(k) CSVs for an external edge list")
    ingest_parser.add_argument("path", type=Path)
    ingest_parser.add_argument("--out-dir", type=Path)
    _add_epsilon(ingest_parser)
    _add_binning(ingest_parser)

    # Ensemble command
    ensemble_parser = subparsers.add_parser("ensemble", help="Run an ensemble experiment from a JSON config")
    ensemble_parser.add_argument("--config", type=Path, required=True)

    # Theory command
    theory_parser = subparsers.add_parser("theory", help="Closed-form predictions as JSON")
    theory_parser.add_argument("--model", required=True, choices=MODELS)
    theory_parser.add_argument("--n", type=int, required=True)
    theory_parser.add_argument("--tau", type=float, required=True)
    theory_parser.add_argument("--x-min", type=int, default=1)
    theory_parser.add_argument("--nu", type=float, default=1.0)
    theory_parser.add_argument("--tol", type=float, default=1e-8, help="Quadrature tolerance")
    theory_parser.add_argument("--samples", type=int, default=Config.DEFAULT_PLATEAU_SAMPLES,
                               help="Stable draws for plateau quartiles (0 to skip)")
    theory_parser.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    theory_parser.add_argument("--out", type=Path, help="JSON path (default: stdout)")

    return parser


def run(args: argparse.Namespace) -> bool:
    """Dispatch a parsed command line; False when no command was given"""
    if args.command == "generate":
        cmd_generate(args.model, args.n, args.tau, seed=args.seed, stream=args.stream, x_min=args.x_min,
                     nu=args.nu, strategy=args.strategy, out=args.out)
    elif args.command == "annd":
        cmd_annd(args.path, eps=args.eps, m_min=args.m_min, eps_cap=args.eps_cap,
                 binning=Binning(mode=args.binning, bins_per_decade=args.bins_per_decade), out=args.out)
    elif args.command == "clustering":
        cmd_clustering(args.path, binning=Binning(mode=args.binning, bins_per_decade=args.bins_per_decade),
                       out=args.out)
    elif args.command == "ingest":
        cmd_ingest(args.path, out_dir=args.out_dir, eps=args.eps, m_min=args.m_min, eps_cap=args.eps_cap,
                   binning=Binning(mode=args.binning, bins_per_decade=args.bins_per_decade))
    elif args.command == "ensemble":
        logger.debug(f"Running ensemble with config {args.config}, threads={args.threads}")
        cmd_ensemble(Config.load_experiment_config(args.config), threads=args.threads)
    elif args.command == "theory":
        cmd_theory(args.model, args.n, args.tau, x_min=args.x_min, nu=args.nu, tol=args.tol,
                   samples=args.samples, seed=args.seed, out=args.out)
    else:
        return False
    return True


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    # Setup logging
    setup_logging(args.debug)

    # Execute command
    try:
        if not run(args):
            parser.print_help()
            sys.exit(int(ExitCode.FAILURE))

    except Exception as e:
        logger.error(str(e))
        if args.debug:
            raise
        sys.exit(exit_code_for(e))


if __name__ == "__main__":
    main()

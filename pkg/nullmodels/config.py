from pathlib import Path
import os
import json
import logging
from typing import Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from .lib.errors import ConfigError, DomainError, GraphIOError
from .lib.models.experiment import ExperimentConfig

logger = logging.getLogger(__name__)

load_dotenv()


class Config:
    # Defaults for degree-band and binning choices
    DEFAULT_M_MIN = 20
    DEFAULT_EPS_CAP = 0.25
    DEFAULT_EPS_STEP = 0.01
    DEFAULT_BINS_PER_DECADE = 16
    DEFAULT_SEED = 0
    DEFAULT_PLATEAU_SAMPLES = 20000

    # Environment
    THREADS_ENV = "NULLMODEL_THREADS"
    OUTPUT_DIR_ENV = "NULLMODEL_OUTPUT_DIR"
    DEFAULT_OUTPUT_DIR = Path("dist")

    @classmethod
    def threads(cls, override: Optional[int] = None) -> int:
        """Worker count: explicit value, then NULLMODEL_THREADS, then 1"""
        if override is not None:
            value = override
        else:
            raw = os.getenv(cls.THREADS_ENV)
            if not raw:
                return 1
            try:
                value = int(raw)
            except ValueError:
                raise ConfigError(f"{cls.THREADS_ENV} must be an integer, got {raw!r}")
        if value < 1:
            raise ConfigError(f"Thread count must be >= 1, got {value}")
        return value

    @classmethod
    def get_output_dir(cls) -> Path:
        """Output directory (NULLMODEL_OUTPUT_DIR or ./dist)"""
        raw = os.getenv(cls.OUTPUT_DIR_ENV)
        return Path(os.path.expanduser(raw)) if raw else cls.DEFAULT_OUTPUT_DIR

    @classmethod
    def ensure_dirs(cls, *paths: Path):
        """Create the output directory and the parents of the given files"""
        dirs = [cls.get_output_dir()] + [Path(p).parent for p in paths]

        for dir in dirs:
            if not dir.exists():
                dir.mkdir(parents=True)
                logger.debug(f"Created directory: {dir}")

    @classmethod
    def load_experiment_config(cls, path) -> ExperimentConfig:
        """Read and validate an experiment JSON file"""
        path = Path(path)
        try:
            with open(path, 'r') as f:
                raw = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Invalid JSON in {path}: {e}") from e
        except OSError as e:
            raise GraphIOError(f"Cannot read config {path}: {e}") from e

        try:
            config = ExperimentConfig.model_validate(raw)
        except ValidationError as e:
            if any(isinstance(detail.get("ctx", {}).get("error"), DomainError) for detail in e.errors()):
                raise DomainError(f"Out-of-range parameter in {path}: {e}") from e
            raise ConfigError(f"Invalid experiment config {path}: {e}") from e
        logger.debug(f"Loaded experiment config from {path}: {config.model_dump_json()}")
        return config

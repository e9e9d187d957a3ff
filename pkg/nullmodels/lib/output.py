"""CSV and JSON emission: fixed column order, '%.10g' floats, '\n' line endings."""

import logging
import sys
from pathlib import Path
from typing import Optional, Union

import pandas as pd
from pydantic import BaseModel

from .errors import GraphIOError

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.10g"

Target = Optional[Union[str, Path]]


def frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def _emit(text: str, path: Target) -> Optional[Path]:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise GraphIOError(f"Cannot write {path}: {e}") from e
    logger.info(f"Wrote {path}")
    return path


def write_csv(frame: pd.DataFrame, path: Target = None) -> Optional[Path]:
    """Write a frame as CSV to path, or to stdout when path is None"""
    return _emit(frame_to_csv(frame), path)


def write_json(record: BaseModel, path: Target = None) -> Optional[Path]:
    return _emit(record.model_dump_json(indent=2) + "\n", path)

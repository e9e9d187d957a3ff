"""SNAP-style edge-list reading and writing."""

import logging
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..errors import EdgeListParseError, GraphIOError
from ..models.graph import SimpleGraph, build_simple_graph
from ..models.schemas import GraphSidecar

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class EdgeListFile(BaseModel):
    """Edges remapped to 0..n-1; labels[i] is the original id of vertex i"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    edges: np.ndarray
    labels: np.ndarray

    def to_graph(self) -> SimpleGraph:
        return build_simple_graph(self.n, self.edges)


def _parse_line(path: Path, line_number: int, line: str) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) < 2:
        raise EdgeListParseError(path, line_number, line)
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListParseError(path, line_number, line)
    if u < 0 or v < 0:
        raise EdgeListParseError(path, line_number, line)
    return u, v


def read_edge_list(path: PathLike) -> EdgeListFile:
    """Read 'u v' lines, skipping blanks and '#' comments; extra columns are ignored"""
    path = Path(path)
    pairs: List[Tuple[int, int]] = []
    try:
        with open(path, 'r', encoding='utf-8') as f:
            for line_number, raw in enumerate(f, start=1):
                line = raw.strip()
                if not line or line.startswith('#'):
                    continue
                pairs.append(_parse_line(path, line_number, line))
    except (OSError, UnicodeDecodeError) as e:
        raise GraphIOError(f"Cannot read edge list {path}: {e}") from e

    raw_edges = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    labels = np.unique(raw_edges)
    edges = np.searchsorted(labels, raw_edges)
    logger.info(f"Read {raw_edges.shape[0]} edge lines over {labels.shape[0]} vertices from {path}")
    return EdgeListFile(n=int(labels.shape[0]), edges=edges, labels=labels)


def read_graph(path: PathLike) -> SimpleGraph:
    return read_edge_list(path).to_graph()


def write_edge_list(g: SimpleGraph, path: PathLike) -> Path:
    """Write one 'u\\tv' line per edge, u < v, sorted"""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.writelines(f"{u}\t{v}\n" for u, v in g.edges.tolist())
    except OSError as e:
        raise GraphIOError(f"Cannot write edge list {path}: {e}") from e
    logger.debug(f"Wrote {g.num_edges} edges to {path}")
    return path


def sidecar_path(path: PathLike) -> Path:
    return Path(path).with_suffix('.json')


def write_sidecar(sidecar: GraphSidecar, path: PathLike) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(sidecar.model_dump_json(indent=2) + "\n", encoding='utf-8')
    except OSError as e:
        raise GraphIOError(f"Cannot write sidecar {path}: {e}") from e
    return path

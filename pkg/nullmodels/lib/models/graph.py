import logging
from functools import cached_property
from typing import Dict, Iterable, Set, Tuple, Union

import numpy as np
from scipy import sparse

from ..errors import StructuralError

logger = logging.getLogger(__name__)

EdgeArray = np.ndarray
RawEdges = Union[EdgeArray, Iterable[Tuple[int, int]]]


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class SimpleGraph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are stored once as (u, v) rows with u < v in lexicographic order.
    Adjacency is kept in CSR form: the neighbors of i are
    ``indices[indptr[i]:indptr[i + 1]]``, sorted ascending.
    """

    def __init__(self, n: int, edges: EdgeArray):
        self.n = int(n)
        self.edges = _readonly(np.asarray(edges, dtype=np.int64).reshape(-1, 2))

        rows = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        cols = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        order = np.lexsort((cols, rows))

        self.degrees = _readonly(np.bincount(rows, minlength=self.n).astype(np.int64))
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=indptr[1:])
        self.indptr = _readonly(indptr)
        self.indices = _readonly(cols[order])

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    @property
    def adjacency(self):
        """Per-vertex sorted neighbor arrays"""
        return [self.neighbors(i) for i in range(self.n)]

    def edge_set(self) -> Set[Tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}

    @cached_property
    def neighbor_degree_sums(self) -> np.ndarray:
        """s_i = sum of deg(j) over neighbors j of i (exact integers)"""
        owners = np.repeat(np.arange(self.n), self.degrees)
        sums = np.zeros(self.n, dtype=np.int64)
        np.add.at(sums, owners, self.degrees[self.indices])
        return _readonly(sums)

    def to_csr(self) -> sparse.csr_matrix:
        data = np.ones(self.indices.shape[0], dtype=np.int64)
        return sparse.csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.num_edges})"


def build_simple_graph(n: int, raw_edges: RawEdges) -> SimpleGraph:
    """Build a simple graph, dropping self-loops and merging parallel edges"""
    if n < 0:
        raise StructuralError(f"Vertex count must be non-negative, got {n}")

    arr = np.asarray(list(raw_edges) if not isinstance(raw_edges, np.ndarray) else raw_edges,
                     dtype=np.int64).reshape(-1, 2)
    if arr.size:
        lo, hi = int(arr.min()), int(arr.max())
        if lo < 0 or hi >= n:
            raise StructuralError(f"Vertex id out of range [0, {n}): min={lo}, max={hi}")

    loops = arr[:, 0] == arr[:, 1]
    if loops.any():
        logger.debug(f"Dropping {int(loops.sum())} self-loops")
    arr = arr[~loops]

    canonical = np.sort(arr, axis=1)
    unique = np.unique(canonical, axis=0) if canonical.size else canonical
    if unique.shape[0] < canonical.shape[0]:
        logger.debug(f"Merged {canonical.shape[0] - unique.shape[0]} parallel edges")

    return SimpleGraph(n, unique)


def degree_histogram(g: SimpleGraph) -> Dict[int, int]:
    """Map k -> N_k over the degrees present in g"""
    counts = np.bincount(g.degrees) if g.n else np.zeros(0, dtype=np.int64)
    return {int(k): int(c) for k, c in enumerate(counts) if c}

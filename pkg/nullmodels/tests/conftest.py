import numpy as np
import pytest

from nullmodels.lib.models.graph import SimpleGraph, build_simple_graph


@pytest.fixture
def random_graph():
    """Simple graph from m random vertex pairs (loops and repeats are dropped)"""
    def _build(n: int, m: int, seed: int) -> SimpleGraph:
        rng = np.random.default_rng(seed)
        return build_simple_graph(n, rng.integers(0, n, size=(m, 2)))
    return _build


@pytest.fixture
def star():
    """K_{1,4}: center 0, leaves 1..4"""
    return build_simple_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


@pytest.fixture
def path3():
    return build_simple_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def triangle():
    return build_simple_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def pendant_triangle():
    """Triangle 0-1-2 with a pendant vertex 3 on vertex 2; degrees (2, 2, 3, 1)"""
    return build_simple_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@pytest.fixture
def k4_minus_edge():
    """K4 without the edge 2-3; degrees (3, 3, 2, 2)"""
    return build_simple_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def cycle6():
    return build_simple_graph(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def write_edges(tmp_path):
    """Write an edge list file under tmp_path and return its path"""
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path
    return _write


@pytest.fixture
def star_file(write_edges):
    return write_edges("star.tsv", "0\t1\n0\t2\n0\t3\n0\t4\n")


@pytest.fixture(autouse=True)
def output_dir(tmp_path, monkeypatch):
    """Default output directory under tmp_path; no worker count from the environment"""
    out = tmp_path / "dist"
    monkeypatch.delenv("NULLMODEL_THREADS", raising=False)
    monkeypatch.setenv("NULLMODEL_OUTPUT_DIR", str(out))
    return out

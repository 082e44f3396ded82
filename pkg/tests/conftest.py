"""
Shared fixtures: the torus and double-torus models, small complexes and point clouds.
"""
import json

import numpy as np
import pytest

from lib.complex import SimplicialComplex2, VertexFunction
from lib.config import reset_project_config, reset_settings
from lib.covers import cover_from_pairs
from lib.diagram import DiagramPoint, ExtendedDiagram, PointKind
from lib.mapper import PointCloud
from lib.telescope import CombinatorialTelescope

TORUS = {
    "crit": [0, 1, 2, 3],
    "slices": [["m"], ["s"], ["t"], ["M"]],
    "cylinders": [
        {"labels": ["c1"], "lower": {"c1": "m"}, "upper": {"c1": "s"}},
        {"labels": ["e1", "e2"], "lower": {"e1": "s", "e2": "s"}, "upper": {"e1": "t", "e2": "t"}},
        {"labels": ["c2"], "lower": {"c2": "t"}, "upper": {"c2": "M"}},
    ],
}

# Genus two: split at 1, merge at 2, split at 3, merge at 4
DOUBLE_TORUS = {
    "crit": [0, 1, 2, 3, 4, 5],
    "slices": [["m"], ["s1"], ["t1"], ["s2"], ["t2"], ["M"]],
    "cylinders": [
        {"labels": ["c0"], "lower": {"c0": "m"}, "upper": {"c0": "s1"}},
        {"labels": ["u", "v"], "lower": {"u": "s1", "v": "s1"}, "upper": {"u": "t1", "v": "t1"}},
        {"labels": ["c2"], "lower": {"c2": "t1"}, "upper": {"c2": "s2"}},
        {"labels": ["p", "q"], "lower": {"p": "s2", "q": "s2"}, "upper": {"p": "t2", "q": "t2"}},
        {"labels": ["c4"], "lower": {"c4": "t2"}, "upper": {"c4": "M"}},
    ],
}


@pytest.fixture(autouse=True)
def fresh_config():
    """Settings and project config are re-read for every test."""
    reset_settings()
    reset_project_config()
    yield
    reset_settings()
    reset_project_config()


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def torus_telescope():
    return CombinatorialTelescope.from_dict(TORUS)


@pytest.fixture
def torus_cover():
    return cover_from_pairs([(-0.5, 1.6), (1.4, 3.5)])


@pytest.fixture
def torus_diagram():
    return ExtendedDiagram((DiagramPoint(0, 3, PointKind.EXT_PLUS, 0),
                            DiagramPoint(2, 1, PointKind.EXT_MINUS, 1)))


@pytest.fixture
def double_torus_telescope():
    return CombinatorialTelescope.from_dict(DOUBLE_TORUS)


@pytest.fixture
def double_torus_cover():
    return cover_from_pairs([(-0.5, 1.5), (1.4, 1.9), (1.8, 3.6), (3.5, 5.5)])


@pytest.fixture
def path_graph():
    """Path 0-1-2-3 with values [0, 2, 1, 3]."""
    return SimplicialComplex2(4, ((0, 1), (1, 2), (2, 3))), VertexFunction((0, 2, 1, 3))


@pytest.fixture
def square_cycle():
    """4-cycle with the tied values [0, 1, 2, 1]."""
    return SimplicialComplex2(4, ((0, 1), (1, 2), (2, 3), (0, 3))), VertexFunction((0, 1, 2, 1))


@pytest.fixture
def octahedron():
    """Sphere with poles at -1 and 1 and a generic equator near 0."""
    equator = [2, 3, 4, 5]
    triangles = []
    for k in range(4):
        a, b = equator[k], equator[(k + 1) % 4]
        triangles.extend([(0, a, b), (1, a, b)])
    edges = sorted({tuple(sorted(e)) for t in triangles for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))})
    return (SimplicialComplex2(6, tuple(edges), tuple(triangles)),
            VertexFunction((-1.0, 1.0, 0.1, -0.2, 0.3, -0.1)))


@pytest.fixture
def seven_vertex_torus():
    """Minimal torus triangulation on Z/7 with triangles {i, i+1, i+3} and {i, i+2, i+3}."""
    triangles = set()
    for i in range(7):
        triangles.add(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        triangles.add(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    edges = sorted({(a, b) for a in range(7) for b in range(a + 1, 7)})
    return (SimplicialComplex2(7, tuple(edges), tuple(sorted(triangles))),
            VertexFunction(tuple(float(v) for v in range(7))))


def circle_cloud(n: int) -> PointCloud:
    theta = 2 * np.pi * np.arange(n) / n
    coordinates = np.column_stack([np.cos(theta), np.sin(theta)])
    return PointCloud(coordinates[:, 1].copy(), coordinates=coordinates)


@pytest.fixture
def circle8():
    return circle_cloud(8)


@pytest.fixture
def circle100():
    return circle_cloud(100)


@pytest.fixture
def circle_cover():
    return cover_from_pairs([(-1.1, 0.2), (-0.2, 1.1)])


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON payload under tmp_path and return the path as a string."""
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return write

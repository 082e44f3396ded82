"""
Input file readers.

Every reader raises ParseError with the file path, and the line when it is
known, for malformed input; semantic errors of the parsed objects (an invalid
cover, a bad complex) pass through unchanged.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from ..complex import SimplicialComplex2, VertexFunction
from ..covers import GomicCover, cover_from_pairs
from ..diagram import ExtendedDiagram
from ..errors import MapperSignatureError, ParseError
from ..mapper import PointCloud
from ..reeb import LeveledMultigraph
from ..telescope import CombinatorialTelescope

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def load_json(path: PathLike) -> Any:
    """Parse a JSON file, reporting the failing line."""
    path = str(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise ParseError("File not found", path)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", path, e.lineno)


def _require(condition: bool, message: str, path: str):
    if not condition:
        raise ParseError(message, path)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def read_cover(path: PathLike) -> GomicCover:
    """Cover file: JSON array of [lo, hi] pairs of open intervals."""
    data = load_json(path)
    _require(isinstance(data, list) and data, "Cover must be a non-empty array of [lo, hi] pairs", str(path))
    for k, pair in enumerate(data):
        _require(isinstance(pair, list) and len(pair) == 2 and all(_is_number(x) for x in pair),
                 f"Cover entry {k} is not a [lo, hi] pair of numbers", str(path))
    cover = cover_from_pairs(data)
    logger.debug(f"Read cover with {len(cover)} interval(s) from {path}")
    return cover


def read_complex(path: PathLike) -> Tuple[SimplicialComplex2, VertexFunction]:
    """
    Complex file: {vertices: [{id, value}], edges: [[i, j]], triangles: [[i, j, k]]}.

    Vertex ids may be arbitrary distinct integers or strings; they are
    renumbered 0..n-1 in file order.
    """
    path = str(path)
    data = load_json(path)
    _require(isinstance(data, dict) and isinstance(data.get("vertices"), list),
             "Complex must be an object with a 'vertices' array", path)

    index: Dict[Any, int] = {}
    values: List[float] = []
    for k, vertex in enumerate(data["vertices"]):
        _require(isinstance(vertex, dict) and "id" in vertex and _is_number(vertex.get("value")),
                 f"Vertex entry {k} needs an id and a numeric value", path)
        _require(vertex["id"] not in index, f"Duplicate vertex id {vertex['id']!r}", path)
        index[vertex["id"]] = len(values)
        values.append(float(vertex["value"]))

    def remap(name: str, size: int) -> Tuple[Tuple[int, ...], ...]:
        simplices = []
        for k, simplex in enumerate(data.get(name, [])):
            _require(isinstance(simplex, list) and len(simplex) == size,
                     f"{name} entry {k} must list {size} vertex ids", path)
            for v in simplex:
                _require(v in index, f"{name} entry {k} refers to unknown vertex {v!r}", path)
            simplices.append(tuple(index[v] for v in simplex))
        return tuple(simplices)

    complex_ = SimplicialComplex2(len(values), remap("edges", 2), remap("triangles", 3))
    logger.debug(f"Read complex with {len(values)} vertices from {path}")
    return complex_, VertexFunction(tuple(values))


def read_telescope(path: PathLike) -> CombinatorialTelescope:
    """Telescope file: {crit, slices, cylinders: [{labels, lower, upper}]}."""
    path = str(path)
    data = load_json(path)
    _require(isinstance(data, dict), "Telescope must be a JSON object", path)
    try:
        return CombinatorialTelescope.from_dict(data)
    except MapperSignatureError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed telescope: {e}", path)


def read_diagram(path: PathLike) -> ExtendedDiagram:
    """Diagram file: JSON array of {birth, death, kind, dim}."""
    path = str(path)
    data = load_json(path)
    _require(isinstance(data, list), "Diagram must be a JSON array of points", path)
    try:
        return ExtendedDiagram.from_list(data)
    except MapperSignatureError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed diagram point: {e}", path)


def read_multigraph(path: PathLike) -> LeveledMultigraph:
    """Multigraph file: {nodes: [{id, level}], edges: [[i, j]]}."""
    path = str(path)
    data = load_json(path)
    _require(isinstance(data, dict) and isinstance(data.get("nodes"), list),
             "Multigraph must be an object with a 'nodes' array", path)
    try:
        return LeveledMultigraph.from_dict(data)
    except MapperSignatureError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed multigraph: {e}", path)


def _scan_csv(path: str) -> Tuple[int, List[int]]:
    """Raw lines to skip up to and including a header, and the line number of every data row."""
    skip, rows = 0, []
    with open(path, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if not rows and not skip:
                try:
                    [float(token) for token in line.split(",")]
                except ValueError:
                    skip = number
                    continue
            rows.append(number)
    return skip, rows


def read_point_cloud(path: PathLike) -> PointCloud:
    """
    Point cloud file.

    CSV: one row per point with columns x1..xd,f and an optional header.
    JSON: {values: [...], distances: [[...]]} or {values: [...], points: [[...]]}.
    """
    path = str(path)
    if path.lower().endswith(".json"):
        data = load_json(path)
        _require(isinstance(data, dict) and isinstance(data.get("values"), list),
                 "Point cloud must be an object with a 'values' array", path)
        try:
            if "distances" in data:
                return PointCloud(np.array(data["values"], dtype=float),
                                  distances=np.array(data["distances"], dtype=float))
            return PointCloud(np.array(data["values"], dtype=float),
                              coordinates=np.array(data["points"], dtype=float))
        except MapperSignatureError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Malformed point cloud: {e}", path)

    try:
        skip, lines = _scan_csv(path)
    except FileNotFoundError:
        raise ParseError("File not found", path)
    _require(bool(lines), "CSV has no data rows", path)
    try:
        table = np.genfromtxt(path, delimiter=",", dtype=float, comments="#",
                              skip_header=skip, invalid_raise=True, ndmin=2)
    except ValueError as e:
        raise ParseError(f"Malformed CSV: {e}", path)

    _require(table.shape[1] >= 2, "CSV needs at least one coordinate column and a value column", path)
    bad_rows = np.nonzero(~np.all(np.isfinite(table), axis=1))[0]
    if len(bad_rows):
        raise ParseError("Non-numeric or missing entry", path, lines[int(bad_rows[0])])

    logger.debug(f"Read {table.shape[0]} point(s) in R^{table.shape[1] - 1} from {path}")
    return PointCloud(table[:, -1], coordinates=table[:, :-1])

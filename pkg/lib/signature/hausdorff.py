"""
Hausdorff distance between the staircases of two covers.

The distance to a half-square is a maximum of six affine pieces, so the
distance to a staircase is piecewise affine. Its supremum over another
staircase is attained at a vertex of the line arrangement where two pieces
agree, and those vertices are evaluated directly.
"""
import logging
from typing import Dict, Union

import numpy as np

from ..config import get_settings
from ..covers import GomicCover, StairKind, Staircase, build_staircase
from ..diagram import Variant, ext_stair_kind

logger = logging.getLogger(__name__)


def _pieces(stair: Staircase) -> np.ndarray:
    """Affine pieces (cx, cy, c0) of every half-square distance, shape (squares, 6, 3)."""
    rows = []
    for sq in stair.squares:
        a, b = sq.interval.lo, sq.interval.hi
        sign = 1.0 if sq.side == "above" else -1.0
        rows.append([
            [0.0, 0.0, 0.0],
            [-1.0, 0.0, a],
            [0.0, 1.0, -b],
            [0.0, -1.0, a],
            [1.0, 0.0, -b],
            [0.5 * sign, -0.5 * sign, 0.0],
        ])
    return np.array(rows, dtype=float).reshape(-1, 6, 3)


def _distances(points: np.ndarray, pieces: np.ndarray) -> np.ndarray:
    """l-infinity distance of each point to the staircase closure."""
    homogeneous = np.column_stack([points, np.ones(len(points))])
    values = np.einsum("skc,nc->nsk", pieces, homogeneous)
    return values.max(axis=2).min(axis=1)


def _arrangement_vertices(pieces: np.ndarray) -> np.ndarray:
    flat = np.unique(pieces.reshape(-1, 3), axis=0)
    i, j = np.triu_indices(len(flat), k=1)
    lines = np.unique(flat[i] - flat[j], axis=0)
    lines = lines[np.any(lines[:, :2] != 0, axis=1)]

    p, q = np.triu_indices(len(lines), k=1)
    a1, b1, c1 = lines[p].T
    a2, b2, c2 = lines[q].T
    det = a1 * b2 - a2 * b1
    ok = det != 0
    x = (b1 * c2 - b2 * c1)[ok] / det[ok]
    y = (c1 * a2 - c2 * a1)[ok] / det[ok]
    return np.unique(np.column_stack([x, y]), axis=0)


def _directed(source: Staircase, target: Staircase) -> float:
    """sup over the closure of source of the distance to target."""
    source_pieces, target_pieces = _pieces(source), _pieces(target)
    corners = np.array([c for sq in source.squares for c in sq.corners()], dtype=float)
    vertices = np.vstack([corners, _arrangement_vertices(np.concatenate([source_pieces, target_pieces]))])

    tolerance = get_settings().tolerance
    inside = vertices[_distances(vertices, source_pieces) <= tolerance]
    return float(_distances(inside, target_pieces).max(initial=0.0))


def _interval_hausdorff(first: GomicCover, second: GomicCover) -> float:
    """Hausdorff distance between the covers seen as point sets (lo, hi) in the plane."""
    a = np.array(first.to_list(), dtype=float)
    b = np.array(second.to_list(), dtype=float)
    cost = np.max(np.abs(a[:, None, :] - b[None, :, :]), axis=2)
    return float(max(cost.min(axis=1).max(), cost.min(axis=0).max()))


def staircase_hausdorff(first: GomicCover, second: GomicCover, kind: Union[StairKind, str]) -> float:
    """
    Hausdorff distance between one staircase of each cover.

    The Ext- staircase uses the closed form over the intervals' endpoint
    pairs; the other kinds are evaluated on the arrangement.
    """
    kind = StairKind.parse(kind) if isinstance(kind, str) else kind
    if kind is StairKind.EXT_MINUS:
        return _interval_hausdorff(first, second)

    a, b = build_staircase(first, kind), build_staircase(second, kind)
    value = max(_directed(a, b), _directed(b, a))
    logger.debug(f"Hausdorff distance of {kind.value} staircases: {value:g}")
    return value


def max_staircase_hausdorff(first: GomicCover, second: GomicCover,
                            variant: Union[Variant, str] = Variant.MULTINERVE) -> Dict[str, float]:
    """Hausdorff distance for each staircase a signature of the variant uses, plus their max."""
    kinds = {"ord": StairKind.ORD, "ext": ext_stair_kind(Variant(variant)), "rel": StairKind.REL}
    values = {name: staircase_hausdorff(first, second, kind) for name, kind in kinds.items()}
    values["max"] = max(values.values())
    return values

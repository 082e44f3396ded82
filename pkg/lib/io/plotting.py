"""
SVG rendering of extended diagrams with cover staircases.
"""
import io
import logging
from typing import List, Optional

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402

from ..config import get_project_config  # noqa: E402
from ..covers import GomicCover, StairKind, build_staircase  # noqa: E402
from ..diagram import ExtendedDiagram  # noqa: E402

logger = logging.getLogger(__name__)


def _limits(diagram: ExtendedDiagram, cover: Optional[GomicCover]) -> List[float]:
    values = list(diagram.coordinates())
    if cover is not None:
        values.extend(cover.endpoints())
    if not values:
        return [0.0, 1.0]
    lo, hi = min(values), max(values)
    margin = 0.05 * (hi - lo) if hi > lo else 0.5
    return [lo - margin, hi + margin]


def render_diagram_svg(diagram: ExtendedDiagram, cover: Optional[GomicCover] = None) -> str:
    """
    Diagram as SVG text.

    Points are colored by dimension and drawn as squares when extended, disks
    otherwise; each (kind, dim) class is an SVG group with id
    points-<kind>-<dim>. With a cover, its four staircases are outlined in
    groups stair-<kind> with distinct dash patterns.
    """
    config = get_project_config()
    plot = config.plot
    lo, hi = _limits(diagram, cover)

    fig = Figure(figsize=tuple(plot.figure_size))
    ax = fig.subplots()
    ax.plot([lo, hi], [lo, hi], color="black", linewidth=0.8, gid="diagonal")

    if cover is not None:
        for kind in StairKind:
            xs: List[float] = []
            ys: List[float] = []
            for square in build_staircase(cover, kind).squares:
                corners = square.corners()
                xs.extend([c[0] for c in corners] + [corners[0][0], float("nan")])
                ys.extend([c[1] for c in corners] + [corners[0][1], float("nan")])
            ax.plot(xs, ys, linestyle=config.get_stair_style(kind.value), color="gray",
                    linewidth=1.0, label=kind.value, gid=f"stair-{kind.value}")

    for kind, dim in diagram.classes():
        points = diagram.subdiagram(kind, dim)
        ax.scatter([p.birth for p in points], [p.death for p in points],
                   s=plot.marker_size, marker="s" if kind.is_extended else "o",
                   color=config.get_dim_color(dim), label=f"{kind.label}_{dim}",
                   gid=f"points-{kind.value}-{dim}", zorder=3)

    ax.set_xlim(lo, hi)
    ax.set_ylim(lo, hi)
    ax.set_aspect("equal")
    ax.set_xlabel("birth")
    ax.set_ylabel("death")
    if diagram or cover is not None:
        ax.legend(loc="lower right", fontsize="small")
    fig.tight_layout()

    buffer = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": plot.svg_hashsalt}):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    logger.debug(f"Rendered {len(diagram)} point(s) to SVG")
    return buffer.getvalue()

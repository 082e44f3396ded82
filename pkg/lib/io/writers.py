"""
JSON and DOT emitters.
"""
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Union

from ..config import get_project_config
from ..reeb import LeveledMultigraph

logger = logging.getLogger(__name__)


def to_json(payload: Any) -> str:
    """Serialize with the configured indentation and key order, newline-terminated."""
    output = get_project_config().output
    return json.dumps(payload, indent=output.json_indent, sort_keys=output.sort_keys) + "\n"


def multigraph_to_dot(graph: LeveledMultigraph, name: str = "mapper") -> str:
    """
    DOT text of a leveled multigraph.

    Every copy of a parallel edge gets its own statement; node ranks follow
    levels so renderers stack nodes by height.
    """
    lines = [f"graph {name} {{", "  rankdir=BT;"]
    for k, level in enumerate(graph.levels):
        lines.append(f'  {k} [label="{k}", level={float(level)!r}];')
    by_level = {}
    for k, level in enumerate(graph.levels):
        by_level.setdefault(level, []).append(k)
    for level in sorted(by_level):
        members = "; ".join(str(k) for k in by_level[level])
        lines.append(f"  {{ rank=same; {members}; }}")
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_text(text: str, path: Optional[Union[str, Path]] = None):
    """Write to a file, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        return
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {path}")

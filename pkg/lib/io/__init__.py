"""
I/O package - file readers, JSON/DOT emitters and SVG plots.
"""

from .plotting import render_diagram_svg
from .readers import (load_json, read_complex, read_cover, read_diagram,
                      read_multigraph, read_point_cloud, read_telescope)
from .writers import multigraph_to_dot, to_json, write_text

__all__ = [
    'load_json',
    'read_cover',
    'read_complex',
    'read_telescope',
    'read_diagram',
    'read_multigraph',
    'read_point_cloud',
    'to_json',
    'multigraph_to_dot',
    'write_text',
    'render_diagram_svg',
]

"""
Project configuration backed by config/project_config.yaml.
Holds CLI defaults, plot styling and the sizes of the verification sweeps.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

logger = logging.getLogger(__name__)


@dataclass
class DefaultsConfig:
    """Default parameters for CLI verbs."""
    delta: float = 0.5
    connectivity: str = "edge"
    variant: str = "multinerve"
    overlap_fraction: float = 0.25
    intervals: int = 4


@dataclass
class PlotConfig:
    """SVG diagram styling."""
    figure_size: List[float] = None
    dim_colors: Dict[int, str] = None
    stair_styles: Dict[str, Any] = None
    marker_size: float = 36.0
    svg_hashsalt: str = "mapper-signatures"

    def __post_init__(self):
        if self.figure_size is None:
            self.figure_size = [5.0, 5.0]
        if self.dim_colors is None:
            self.dim_colors = {0: "tab:green", 1: "tab:purple", 2: "tab:orange"}
        else:
            self.dim_colors = {int(k): v for k, v in self.dim_colors.items()}
        if self.stair_styles is None:
            self.stair_styles = {
                "ord": "--",
                "rel": "-.",
                "ext_minus": ":",
                "ext": [0, [3, 1, 1, 1, 1, 1]],
            }


@dataclass
class CheckConfig:
    """Number of random trials per verification sweep."""
    transform_trials: int = 200
    invariance_trials: int = 100
    structure_trials: int = 100
    coincidence_trials: int = 200
    stability_trials: int = 500
    discrepancy_trials: int = 100


@dataclass
class OutputConfig:
    """Serialization settings."""
    json_indent: int = 2
    sort_keys: bool = True


_ROOT_MARKERS = ("main.py", "requirements.txt", ".git")


def _repository_root() -> Path:
    here = Path(__file__).resolve().parent
    for candidate in here.parents:
        if any((candidate / marker).exists() for marker in _ROOT_MARKERS):
            return candidate
    logger.warning(f"No repository marker above {here}; using {here.parents[1]}")
    return here.parents[1]


class ProjectConfig:
    """Typed view over the project YAML file.

    Sections missing from the file keep their dataclass defaults.
    """

    def __init__(self, config_file: Optional[str] = None):
        self.config_file = str(config_file or _repository_root() / "config" / "project_config.yaml")
        self.config = self._load_config()

        self.defaults = DefaultsConfig(**self.config.get("defaults", {}))
        self.plot = PlotConfig(**self.config.get("plot", {}))
        self.checks = CheckConfig(**self.config.get("checks", {}))
        self.output = OutputConfig(**self.config.get("output", {}))

    def _load_config(self) -> Dict[str, Any]:
        path = Path(self.config_file)
        if not path.is_file():
            raise FileNotFoundError(f"Project configuration file not found: {path}")
        try:
            loaded = yaml.safe_load(path.read_text(encoding="utf-8"))
        except yaml.YAMLError as exc:
            raise ValueError(f"Invalid YAML in {path}: {exc}") from exc
        logger.debug(f"Project configuration loaded from {path}")
        return loaded or {}

    def get_stair_style(self, kind: str) -> Any:
        """Line style for a staircase kind, as a matplotlib linestyle."""
        style = self.plot.stair_styles.get(kind, "-")
        if isinstance(style, list):
            offset, pattern = style
            return (offset, tuple(pattern))
        return style

    def get_dim_color(self, dim: int) -> str:
        return self.plot.dim_colors.get(dim, "black")


_project_config: Optional[ProjectConfig] = None


def get_project_config() -> ProjectConfig:
    """Process-wide configuration, loaded on first use."""
    global _project_config
    if _project_config is None:
        _project_config = ProjectConfig()
    return _project_config


def reset_project_config():
    global _project_config
    _project_config = None

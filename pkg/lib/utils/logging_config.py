"""
Logging setup for the CLI and the verification sweeps.

Console records go to stderr so stdout only ever carries command results.
"""

import logging
import logging.handlers
import os
import platform
import sys
from pathlib import Path
from typing import Optional

FILE_FORMAT = logging.Formatter(
    "%(asctime)s %(levelname)-8s %(name)s [%(funcName)s:%(lineno)d] %(message)s",
    datefmt="%Y-%m-%dT%H:%M:%S",
)
CONSOLE_FORMAT = logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s",
                                   datefmt="%H:%M:%S")

_MB = 1024 * 1024


def _resolve_log_dir(log_dir: Optional[str]) -> Path:
    path = Path(log_dir) if log_dir else Path.cwd() / "logs"
    path.mkdir(parents=True, exist_ok=True)
    return path


def _rotating(path: Path, level: int, formatter: logging.Formatter,
              max_bytes: int, backups: int) -> logging.Handler:
    handler = logging.handlers.RotatingFileHandler(
        path, maxBytes=max_bytes, backupCount=backups, encoding="utf-8")
    handler.setLevel(level)
    handler.setFormatter(formatter)
    return handler


def setup_application_logging(
    log_level: str = "INFO",
    log_dir: Optional[str] = None,
    enable_file_logging: bool = False,
    console_formatter: Optional[logging.Formatter] = None,
    enable_console_logging: bool = True,
    max_bytes: int = 10 * _MB,
    backups: int = 5,
) -> logging.Logger:
    """Replace the root logger's handlers and return the root logger.

    With file logging on, ``mapper_signatures.log`` receives everything at
    ``log_level`` and ``errors.log`` only ERROR and above. Unknown level
    names fall back to INFO.
    """
    level = logging.getLevelName(log_level.upper())
    if not isinstance(level, int):
        level = logging.INFO

    root = logging.getLogger()
    root.setLevel(level)
    for handler in list(root.handlers):
        root.removeHandler(handler)

    if enable_console_logging:
        console = logging.StreamHandler(sys.stderr)
        console.setLevel(level)
        console.setFormatter(console_formatter or CONSOLE_FORMAT)
        root.addHandler(console)

    if enable_file_logging:
        directory = _resolve_log_dir(log_dir)
        root.addHandler(_rotating(directory / "mapper_signatures.log", level,
                                  FILE_FORMAT, max_bytes, backups))
        root.addHandler(_rotating(directory / "errors.log", logging.ERROR,
                                  FILE_FORMAT, max_bytes, backups))
    return root


def configure_module_loggers(debug_mode: bool = False):
    """Quiet third-party loggers and set the package levels."""
    for noisy in ("matplotlib", "PIL"):
        logging.getLogger(noisy).setLevel(logging.WARNING)

    levels = {
        "lib": logging.DEBUG if debug_mode else logging.INFO,
        # per-simplex reduction traces
        "lib.complex.boundary": logging.DEBUG if debug_mode else logging.WARNING,
        "lib.config": logging.WARNING,
    }
    for name, level in levels.items():
        logging.getLogger(name).setLevel(level)


def log_system_info(logger: logging.Logger):
    import matplotlib
    import networkx
    import numpy
    import scipy

    stack = ", ".join(f"{module.__name__} {module.__version__}"
                      for module in (numpy, scipy, networkx, matplotlib))
    logger.info("mapper-signatures on Python %s (%s, %s CPUs)",
                sys.version.split()[0], platform.platform(), os.cpu_count())
    logger.info("numeric stack: %s", stack)
    logger.info("cwd=%s level=%s", os.getcwd(),
                logging.getLevelName(logger.getEffectiveLevel()))


def create_performance_logger(log_dir: Optional[str] = None,
                              enable_file_logging: bool = False) -> logging.Logger:
    """Return the ``performance`` logger used for sweep timings.

    Handlers are attached once; the logger does not propagate to root.
    """
    perf = logging.getLogger("performance")
    if perf.handlers:
        return perf

    formatter = logging.Formatter("%(asctime)s PERF %(message)s", datefmt="%Y-%m-%dT%H:%M:%S")
    if enable_file_logging:
        handler = _rotating(_resolve_log_dir(log_dir) / "performance.log",
                            logging.INFO, formatter, 5 * _MB, 3)
    else:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(formatter)
    perf.addHandler(handler)
    perf.setLevel(logging.INFO)
    perf.propagate = False
    return perf

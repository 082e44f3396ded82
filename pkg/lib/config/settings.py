"""
Environment configuration for mapper-signatures.
"""
import logging
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

_TRUTHY = ("true", "1", "yes")


class ConfigError(Exception):
    """Configuration error exception."""
    pass


class Settings:
    """Runtime settings read from the environment.

    Numeric values are parsed by :meth:`validate`, so malformed variables
    surface as :class:`ConfigError`.
    """

    def __init__(self):
        # Logging Configuration
        self.log_level = os.getenv("LOG_LEVEL", "INFO").upper()
        self.debug_mode = os.getenv("DEBUG_MODE", "false").lower() == "true"
        self.log_dir = os.getenv("LOG_DIR", "logs")
        self.enable_file_logging = os.getenv("ENABLE_FILE_LOGGING", "false").lower() in _TRUTHY

        # Reproducibility and execution
        self.perturb_ties = os.getenv("MAPPER_PERTURB_TIES", "true").lower() in _TRUTHY
        self._raw_seed = os.getenv("MAPPER_SEED", "0")
        self._raw_workers = os.getenv("MAPPER_WORKERS", "1")
        self._raw_tolerance = os.getenv("MAPPER_TOLERANCE", "1e-9")
        self.seed = 0
        self.workers = 1
        self.tolerance = 1e-9

    def validate(self) -> None:
        """Parse and check the numeric values."""
        try:
            self.seed = int(self._raw_seed)
            self.workers = int(self._raw_workers)
            self.tolerance = float(self._raw_tolerance)
            assert self.log_level in (
                "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"), \
                f"Unknown log level {self.log_level}"
            assert self.seed >= 0, "Seed must be non-negative"
            assert self.workers > 0, "Worker count must be positive"
            assert 0 <= self.tolerance < 1e-3, "Tolerance must be in [0, 1e-3)"
        except (AssertionError, ValueError) as e:
            raise ConfigError(f"Invalid configuration value: {e}") from e

        logger.debug("Configuration validation successful")


# Global settings instance
_settings = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        settings = Settings()
        try:
            settings.validate()
        except ConfigError as e:
            logger.error(f"Configuration validation failed: {e}")
            raise
        _settings = settings
    return _settings


def reset_settings():
    """Reset the global settings instance (useful for testing)."""
    global _settings
    _settings = None

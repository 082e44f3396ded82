"""
Configuration package for mapper-signatures.
Provides unified access to environment settings and the YAML project configuration.
"""
from .project_config import (CheckConfig, DefaultsConfig, OutputConfig,
                             PlotConfig, ProjectConfig, get_project_config,
                             reset_project_config)
from .settings import ConfigError, Settings, get_settings, reset_settings

__all__ = [
    'get_project_config', 'reset_project_config', 'ProjectConfig',
    'DefaultsConfig', 'PlotConfig', 'CheckConfig', 'OutputConfig',
    'get_settings', 'reset_settings', 'Settings', 'ConfigError'
]

"""配置管理模块."""

from .loader import ConfigError, ConfigLoader, load_config
from .schema import SweepConfig
from .settings import HerfamSettings, get_settings

__all__ = [
    "ConfigError",
    "ConfigLoader",
    "HerfamSettings",
    "SweepConfig",
    "get_settings",
    "load_config",
]

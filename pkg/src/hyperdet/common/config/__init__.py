# ABOUTME: Configuration for hyperdet: constants, env-backed settings and the YAML loader.

from hyperdet.common.config.hyperdet_settings import (
    HyperdetSettings,
    get_hyperdet_settings,
    set_hyperdet_settings,
)
from hyperdet.common.config.settings_loader import load_settings_file

__all__ = [
    "HyperdetSettings",
    "get_hyperdet_settings",
    "load_settings_file",
    "set_hyperdet_settings",
]

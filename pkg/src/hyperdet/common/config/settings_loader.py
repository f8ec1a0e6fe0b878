# ABOUTME: Loads an optional YAML settings file (top-level "hyperdet:" mapping).
# ABOUTME: File values override environment values; validation errors propagate.

from __future__ import annotations

from typing import TYPE_CHECKING

import yaml

from hyperdet.common.config.constants import SETTINGS_FILE_KEY
from hyperdet.common.config.hyperdet_settings import HyperdetSettings
from hyperdet.common.observability.logging_utils import get_logger

if TYPE_CHECKING:
    from pathlib import Path

logger = get_logger(__name__)


def load_settings_file(path: Path) -> HyperdetSettings:
    """Build settings from a YAML file such as::

        hyperdet:
          nullspace_tol: 1.0e-10
          max_retries: 5

    Raises:
        FileNotFoundError: If the file does not exist.
        yaml.YAMLError: If the file contains invalid YAML.
        pydantic.ValidationError: If a value fails validation.
    """
    if not path.exists():
        raise FileNotFoundError(f"Settings file not found: {path}")

    logger.info(f"Loading hyperdet settings from {path}")
    with path.open(encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}

    section = raw.get(SETTINGS_FILE_KEY, {}) if isinstance(raw, dict) else {}
    if not isinstance(section, dict):
        raise ValueError(f"'{SETTINGS_FILE_KEY}' in {path} must be a mapping")

    settings = HyperdetSettings(**section)
    logger.debug(f"Settings overrides from file: {sorted(section)}")
    return settings

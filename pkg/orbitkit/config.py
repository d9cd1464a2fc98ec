"""Settings for verification runs."""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional, Union

from .constants import (
    DEFAULT_CONFIG_FILE,
    DEFAULT_SAMPLE_BUDGET,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    DEFAULT_XI_SAMPLES,
    ENV_CONFIG,
    ENV_SEED,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    """Defaults for the verification driver and the CLI."""

    seed: int = DEFAULT_SEED
    xi_samples: int = DEFAULT_XI_SAMPLES
    sample_budget: int = DEFAULT_SAMPLE_BUDGET
    workers: int = DEFAULT_WORKERS
    debug_enabled: bool = False

    def __post_init__(self):
        """Validate ranges."""
        if self.xi_samples < 1:
            raise ValueError(f"xi_samples must be >= 1, got {self.xi_samples}")
        if self.sample_budget < 1:
            raise ValueError(f"sample_budget must be >= 1, got {self.sample_budget}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


def _load_config(path: Path) -> dict:
    """Load the JSON settings file; unreadable files count as empty."""
    if path.exists():
        try:
            with open(path, "r") as f:
                data = json.load(f)
            if isinstance(data, dict):
                return data
            _LOGGER.warning(f"Ignoring {path}: expected a JSON object")
        except Exception as e:
            _LOGGER.warning(f"Ignoring {path}: {e}")
    return {}


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """Settings from ``path``, $ORBITKIT_CONFIG or ./orbitkit.json, then $ORBITKIT_SEED."""
    if path is None:
        path = os.environ.get(ENV_CONFIG, DEFAULT_CONFIG_FILE)
    raw = _load_config(Path(path))
    known = {f.name for f in fields(Settings)}
    try:
        values = {}
        for key, value in raw.items():
            if key not in known:
                _LOGGER.warning(f"Ignoring unknown setting {key!r}")
                continue
            values[key] = bool(value) if key == "debug_enabled" else int(value)
        settings = Settings(**values)
    except (TypeError, ValueError) as e:
        _LOGGER.warning(f"Ignoring settings from {path}: {e}")
        settings = Settings()

    env_seed = os.environ.get(ENV_SEED)
    if env_seed is not None:
        try:
            settings = replace(settings, seed=int(env_seed))
        except ValueError:
            _LOGGER.warning(f"Ignoring {ENV_SEED}={env_seed!r}: not an integer")
    return settings

"""
Configuration utilities for sgdigit.

Settings are resolved in three layers: built-in defaults, an optional YAML or
JSON settings file, and ``SGDIGIT_*`` environment variables.
"""
import os
import json
import threading
from dataclasses import dataclass, replace
from typing import Dict, Any, Optional

import yaml

from sgdigit.utils.validators import validate_settings_config

ENV_PREFIX = "SGDIGIT_"

_ENV_KEYS = {
    "max_table": int,
    "closure_bound": int,
    "frontier_cap": int,
    "log_level": str,
    "log_file": str,
}


@dataclass(frozen=True)
class Settings:
    """Resource limits and logging options.

    Attributes:
        max_table: Largest membership table a submonoid may allocate
        closure_bound: Default iteration bound of the closure algorithm
        frontier_cap: Largest breadth-first frontier of a genus enumeration
        log_level: Level name for the package logger
        log_file: Optional path of a rotating log file
    """
    max_table: int = 10_000_000
    closure_bound: int = 1000
    frontier_cap: int = 200_000
    log_level: str = "WARNING"
    log_file: Optional[str] = None


def load_settings_file(config_path: str) -> Dict[str, Any]:
    """Load a settings file.

    Args:
        config_path: Path to the settings file

    Returns:
        The settings as a dictionary
    """
    with open(config_path, "r") as f:
        if config_path.endswith((".yaml", ".yml")):
            data = yaml.safe_load(f)
        elif config_path.endswith(".json"):
            data = json.load(f)
        else:
            raise ValueError(f"Unsupported file format: {config_path}")
    return data or {}


def settings_from_env(environ: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    """Read ``SGDIGIT_*`` overrides from the environment.

    Args:
        environ: The environment to read (defaults to ``os.environ``)

    Returns:
        The overrides found, converted to their setting types
    """
    environ = os.environ if environ is None else environ
    overrides = {}
    for key, kind in _ENV_KEYS.items():
        raw = environ.get(ENV_PREFIX + key.upper())
        if raw is None:
            continue
        if kind is int:
            try:
                overrides[key] = int(raw)
            except ValueError:
                raise ValueError(f"Environment variable {ENV_PREFIX + key.upper()} must be an integer, got {raw!r}")
        else:
            overrides[key] = raw
    return overrides


def load_settings(config_path: Optional[str] = None, environ: Optional[Dict[str, str]] = None) -> Settings:
    """Resolve settings from defaults, a settings file and the environment.

    Args:
        config_path: Settings file; falls back to ``SGDIGIT_CONFIG`` when None
        environ: The environment to read (defaults to ``os.environ``)

    Returns:
        The validated settings
    """
    environ = os.environ if environ is None else environ
    config_path = config_path or environ.get(ENV_PREFIX + "CONFIG")

    values: Dict[str, Any] = {}
    if config_path:
        values.update(load_settings_file(config_path))
    values.update(settings_from_env(environ))

    is_valid, errors = validate_settings_config(values)
    if not is_valid:
        raise ValueError(f"Invalid sgdigit settings: {errors}")

    return replace(Settings(), **values)


_lock = threading.Lock()
_current: Optional[Settings] = None


def get_settings() -> Settings:
    """Return the active settings, loading them on first use."""
    global _current
    with _lock:
        if _current is None:
            _current = load_settings()
        return _current


def set_settings(settings: Optional[Settings]) -> None:
    """Replace the active settings (None forces a reload on next use)."""
    global _current
    with _lock:
        _current = settings

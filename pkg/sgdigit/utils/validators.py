"""
Validation utilities for sgdigit.

This module provides parsers for the textual inputs of the command line and
validation for settings files.
"""
from typing import Dict, Any, List, Tuple

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def parse_int_list(text: str) -> List[int]:
    """Parse a comma-separated list of decimal integers such as ``"3,5,7"``.

    Args:
        text: The list as typed by the user

    Returns:
        The integers in the order given

    Raises:
        ValueError: If an item is empty or not a decimal integer
    """
    items = [item.strip() for item in text.split(",")]
    values = []
    for i, item in enumerate(items):
        if not item:
            raise ValueError(f"Item {i+1} of '{text}' is empty")
        try:
            values.append(int(item, 10))
        except ValueError:
            raise ValueError(f"Item {i+1} of '{text}' is not an integer: {item!r}")
    return values


def parse_generator_list(text: str) -> List[int]:
    """Parse a generator list; every generator must be a positive integer.

    Args:
        text: The list, e.g. ``"4,6,7,9"``

    Returns:
        The generators in the order given
    """
    values = parse_int_list(text)
    for value in values:
        if value < 1:
            raise ValueError(f"Generators must be positive integers, got {value}")
    return values


def validate_settings_config(config: Dict[str, Any]) -> Tuple[bool, List[str]]:
    """Validate a settings dictionary.

    Args:
        config: The settings as read from a file or the environment

    Returns:
        A tuple containing a boolean indicating whether the settings are valid
        and a list of error messages
    """
    errors = []

    for key in ("max_table", "closure_bound", "frontier_cap"):
        if key not in config:
            continue
        value = config[key]
        if isinstance(value, bool) or not isinstance(value, int):
            errors.append(f"'{key}' must be an integer, got {value!r}")
        elif key == "closure_bound" and value < 0:
            errors.append(f"'{key}' must be nonnegative, got {value}")
        elif key != "closure_bound" and value < 1:
            errors.append(f"'{key}' must be positive, got {value}")

    if "log_level" in config:
        level = config["log_level"]
        if not isinstance(level, str) or level.upper() not in LOG_LEVELS:
            errors.append(f"'log_level' must be one of {', '.join(LOG_LEVELS)}, got {level!r}")

    if "log_file" in config and config["log_file"] is not None:
        if not isinstance(config["log_file"], str):
            errors.append("'log_file' must be a path")

    known = {"max_table", "closure_bound", "frontier_cap", "log_level", "log_file"}
    for key in config:
        if key not in known:
            errors.append(f"Unknown setting: {key}")

    return len(errors) == 0, errors

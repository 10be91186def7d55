"""
Utilities package for sgdigit.

This package contains configuration, logging and input validation helpers.
"""

from sgdigit.utils.config import Settings, load_settings, get_settings, set_settings
from sgdigit.utils.validators import parse_int_list, parse_generator_list, validate_settings_config
from sgdigit.utils.logging import configure_logging, get_logger, timed

__all__ = [
    'Settings',
    'load_settings',
    'get_settings',
    'set_settings',
    'parse_int_list',
    'parse_generator_list',
    'validate_settings_config',
    'configure_logging',
    'get_logger',
    'timed',
]

"""
Command-line interface for sgdigit.
"""

from sgdigit.cli.commands import app

__all__ = ['app']

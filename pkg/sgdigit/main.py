"""
Main entry point for sgdigit.

This module provides the main entry point for the sgdigit CLI.
"""
from sgdigit.cli.commands import app
from sgdigit.utils.logging import configure_logging


def main():
    """Main entry point for sgdigit."""
    # Settings-driven logging is applied again once --config is parsed
    configure_logging()

    app()


if __name__ == "__main__":
    main()

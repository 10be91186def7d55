"""
Shared pytest fixtures for the sgdigit test suite.
"""
import logging

import pytest

from sgdigit.utils.config import set_settings


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-range sweeps, deselect with -m \"not slow\"")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Run every test against default settings, unaffected by the caller's environment."""
    for key in ("CONFIG", "MAX_TABLE", "CLOSURE_BOUND", "FRONTIER_CAP", "LOG_LEVEL", "LOG_FILE"):
        monkeypatch.delenv(f"SGDIGIT_{key}", raising=False)
    set_settings(None)
    yield
    set_settings(None)
    # handlers installed by the CLI hold streams that are closed after each invocation
    logger = logging.getLogger("sgdigit")
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
    logger.propagate = True

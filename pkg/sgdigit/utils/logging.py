"""
Logging for sgdigit.

All package loggers hang below the ``sgdigit`` logger, which writes to the
console and, when a path is configured, to a rotating log file.
"""
import os
import time
import logging
from contextlib import contextmanager
from logging.handlers import RotatingFileHandler
from typing import Iterator, Optional, Union

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _level(log_level: Union[int, str]) -> int:
    if isinstance(log_level, int):
        return log_level
    level = logging.getLevelName(log_level.upper())
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {log_level!r}")
    return level


def _file_handler(log_file: str) -> logging.Handler:
    os.makedirs(os.path.dirname(os.path.abspath(log_file)), exist_ok=True)
    # 10 MB per file, five backups
    return RotatingFileHandler(log_file, maxBytes=10 * 1024 * 1024, backupCount=5)


def configure_logging(
    log_level: Union[int, str] = logging.WARNING,
    log_file: Optional[str] = None,
    log_format: str = DEFAULT_FORMAT,
) -> None:
    """Configure the ``sgdigit`` logger, replacing any earlier handlers.

    Args:
        log_level: The logging level, as a number or a name such as ``"info"``
        log_file: Path to a rotating log file (if None, logs to the console only)
        log_format: The log message format
    """
    level = _level(log_level)
    logger = logging.getLogger("sgdigit")
    logger.setLevel(level)
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    handlers = [logging.StreamHandler()]
    if log_file:
        handlers.append(_file_handler(log_file))
    formatter = logging.Formatter(log_format)
    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    logger.propagate = False


def get_logger(name: str) -> logging.Logger:
    """Return the package logger ``sgdigit.<name>``."""
    return logging.getLogger(f"sgdigit.{name}")


@contextmanager
def timed(logger: logging.Logger, what: str) -> Iterator[None]:
    """Log how long the enclosed block took, at INFO level."""
    logger.debug(f"Starting {what}")
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.info(f"{what} took {time.perf_counter() - start:.3f}s")

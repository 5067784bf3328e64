"""Centralized logger for circlespace.

Handlers write to standard error so that tables and reports on standard
output stay byte-stable.
"""

import logging

logger = logging.getLogger("circlespace")
logger.setLevel(logging.INFO)
if not logger.handlers:
    ch = logging.StreamHandler()
    formatter = logging.Formatter("%(asctime)s [%(levelname)s] %(message)s")
    ch.setFormatter(formatter)
    logger.addHandler(ch)


def set_level(level: int) -> None:
    """Set the level of the package logger and its handlers."""
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)

"""
Logging Configuration

This module sets up structured logging for the command line tool.
Diagnostics go to stderr; stdout is reserved for result payloads.
"""

import logging
import sys
from typing import Optional

from kronring.core.config import settings


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """Configure application logging"""
    level = (level or settings.LOG_LEVEL).upper()

    # Create logger
    logger = logging.getLogger("kronring")
    logger.setLevel(level)

    # Console handler, rebuilt on every call so it follows the current sys.stderr.
    # The old stream may already be closed; it is dropped without a flush.
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(
        logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    )
    logger.addHandler(handler)

    return logger

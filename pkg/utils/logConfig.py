"""Logging setup for the command-line entry point."""

import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setupLogging(level: str = "WARNING") -> None:
    """
    Configure root logging to stderr.

    Args:
        level: Level name such as DEBUG, INFO or WARNING
    """
    numericLevel = getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(level=numericLevel, format=LOG_FORMAT, stream=sys.stderr, force=True)

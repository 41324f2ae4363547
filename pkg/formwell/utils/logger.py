import logging
import sys
from typing import Optional, Union

from pythonjsonlogger import jsonlogger

from formwell.config.config import LOG_FILE, LOG_LEVEL

LOG_FORMAT = "[%(asctime)s] %(levelname)s {%(filename)s:%(lineno)d} - %(message)s"

logger = logging.getLogger("formwell")
logger.propagate = False

# stdout is reserved for command output
_stream_handler = logging.StreamHandler(sys.stderr)
_stream_handler.setFormatter(logging.Formatter(LOG_FORMAT))
logger.addHandler(_stream_handler)


def add_json_file_handler(path: str) -> logging.Handler:
    """
    Attach a handler writing one JSON object per log record to `path`.

    Parameters:
    - path (str): Destination file, opened in append mode.

    Returns:
    - logging.Handler: The handler, so callers may detach it again.
    """
    handler = logging.FileHandler(path, encoding="utf-8")
    handler.setFormatter(
        jsonlogger.JsonFormatter("%(asctime)s %(levelname)s %(name)s %(filename)s %(lineno)d %(message)s")
    )
    logger.addHandler(handler)
    return handler


def set_log_level(level: Union[str, int]) -> None:
    """
    Set the log level for the logger.

    Parameters:
    - level (Union[str, int]): A string or logging level such as 'debug', 'info', 'warning', 'error', or 'critical', or the corresponding logging constants like logging.DEBUG, logging.INFO, etc.
    """
    if isinstance(level, str):
        level = level.upper()
        numeric_level = getattr(logging, level, None)
        if not isinstance(numeric_level, int):
            raise ValueError(f"Invalid log level: {level}")
        logger.setLevel(numeric_level)
    else:
        logger.setLevel(level)


def _configure(level: str, log_file: Optional[str]) -> None:
    try:
        set_log_level(level)
    except ValueError:
        logger.setLevel(logging.WARNING)
        logger.warning("Ignoring invalid FORMWELL_LOG_LEVEL %r", level)
    if log_file:
        add_json_file_handler(log_file)


_configure(LOG_LEVEL, LOG_FILE)

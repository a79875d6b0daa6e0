"""Application logging utility."""

import logging
import sys
from datetime import datetime
from pathlib import Path

from acylbounds.utils.settings import Settings

# Global logger instance
_logger: logging.Logger | None = None
_file_handler: logging.FileHandler | None = None
_console_handler: logging.StreamHandler | None = None

LOGGER_NAME = "acylbounds"


def get_log_path() -> Path:
    """Get the log file path (next to the settings file)."""
    return Path(Settings().file_name()).parent / "acylbounds.log"


def setup_logging(level: str | None = None) -> logging.Logger:
    """Setup and return the application logger.

    Console output goes to stderr so that reports on stdout stay byte-stable.
    """
    global _logger, _console_handler

    if _logger is not None:
        if level is not None and _console_handler is not None:
            _console_handler.setLevel(level.upper())
        return _logger

    settings = Settings()

    _logger = logging.getLogger(LOGGER_NAME)
    _logger.setLevel(logging.DEBUG)
    _logger.propagate = False

    _console_handler = logging.StreamHandler(sys.stderr)
    _console_handler.setLevel((level or settings.load_log_level()).upper())
    _console_handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    _logger.addHandler(_console_handler)

    if settings.load_logging_enabled():
        _enable_file_logging()

    return _logger


def _enable_file_logging():
    """Enable file logging."""
    global _file_handler

    if _file_handler is not None or _logger is None:
        return

    log_path = get_log_path()

    try:
        log_path.parent.mkdir(parents=True, exist_ok=True)
        # Overwrite log file each time (mode='w')
        _file_handler = logging.FileHandler(log_path, mode="w", encoding="utf-8")
        _file_handler.setLevel(logging.DEBUG)
        _file_handler.setFormatter(
            logging.Formatter(
                "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )
        _logger.addHandler(_file_handler)

        from acylbounds import __version__

        _logger.info("=" * 50)
        _logger.info(f"acylbounds v{__version__}")
        _logger.info(f"Started: {datetime.now()}")
        _logger.info(f"Log file: {log_path}")
        _logger.info(f"Python: {sys.version}")
        _logger.info(f"Platform: {sys.platform}")
        _logger.info("=" * 50)
    except OSError as e:
        _logger.warning(f"Could not create log file: {e}")


def _disable_file_logging():
    """Disable file logging."""
    global _file_handler

    if _file_handler is not None and _logger is not None:
        _logger.removeHandler(_file_handler)
        _file_handler.close()
        _file_handler = None


def set_logging_enabled(enabled: bool):
    """Enable or disable file logging."""
    Settings().save_logging_enabled(enabled)

    if enabled:
        _enable_file_logging()
    else:
        _disable_file_logging()

"""Tests for Settings and the logging setup."""

import logging
import sys

import pytest

from acylbounds.utils import logger as logger_module
from acylbounds.utils.settings import MAX_COORD_CAP, MAX_SECTORS_CAP, MAX_TETS_CAP, Settings


@pytest.fixture
def fresh_logger():
    """Reset the module-level logger state around a test."""
    saved = (logger_module._logger, logger_module._file_handler, logger_module._console_handler)
    logger_module._logger = None
    logger_module._file_handler = None
    logger_module._console_handler = None
    yield logger_module
    app_logger = logging.getLogger(logger_module.LOGGER_NAME)
    for handler in list(app_logger.handlers):
        app_logger.removeHandler(handler)
        handler.close()
    logger_module._logger, logger_module._file_handler, logger_module._console_handler = saved


class TestSettings:
    """Test persistent settings."""

    def test_defaults(self, settings):
        """Test default values on an empty file."""
        assert settings.load_max_coord() == 4
        assert settings.load_max_tets() == MAX_TETS_CAP
        assert settings.load_workers() == 1
        assert settings.load_max_sectors() == MAX_SECTORS_CAP
        assert settings.load_log_level() == "WARNING"
        assert not settings.load_logging_enabled()

    def test_file_from_environment(self, settings, isolated_settings):
        """Test that the environment variable selects the INI file."""
        assert settings.file_name() == str(isolated_settings)

    def test_round_trip(self, settings, isolated_settings):
        """Test that saved values are read back by a new instance."""
        settings.save_max_coord(6)
        settings.save_workers(3)
        settings.save_log_level("debug")
        settings.sync()
        reloaded = Settings(isolated_settings)
        assert reloaded.load_max_coord() == 6
        assert reloaded.load_workers() == 3
        assert reloaded.load_log_level() == "DEBUG"

    def test_caps_are_enforced(self, settings):
        """Test that settings can lower the hard caps but never raise them."""
        settings.save_max_coord(1000)
        settings.save_max_tets(99)
        settings.save_max_sectors(99)
        assert settings.load_max_coord() == MAX_COORD_CAP
        assert settings.load_max_tets() == MAX_TETS_CAP
        assert settings.load_max_sectors() == MAX_SECTORS_CAP
        settings.save_max_tets(2)
        assert settings.load_max_tets() == 2

    def test_unknown_log_level(self, settings):
        """Test that an unknown level falls back to WARNING."""
        settings.save_log_level("chatty")
        assert settings.load_log_level() == "WARNING"


class TestLogging:
    """Test logger setup."""

    def test_console_on_stderr(self, fresh_logger):
        """Test that console logging goes to stderr at the requested level."""
        app_logger = fresh_logger.setup_logging("info")
        assert app_logger.name == "acylbounds"
        handler = fresh_logger._console_handler
        assert handler.stream is sys.stderr
        assert handler.level == logging.INFO

    def test_setup_is_idempotent(self, fresh_logger):
        """Test that a second setup only adjusts the level."""
        first = fresh_logger.setup_logging()
        second = fresh_logger.setup_logging("debug")
        assert first is second
        assert len(first.handlers) == 1
        assert fresh_logger._console_handler.level == logging.DEBUG

    def test_file_logging(self, fresh_logger, settings):
        """Test that enabling file logging writes next to the settings file."""
        fresh_logger.setup_logging()
        fresh_logger.set_logging_enabled(True)
        log_path = fresh_logger.get_log_path()
        assert log_path.exists()
        fresh_logger.set_logging_enabled(False)
        assert fresh_logger._file_handler is None
        assert not settings.load_logging_enabled()

"""Application settings management."""

import os
from pathlib import Path

from PySide6.QtCore import QSettings

SETTINGS_ENV_VAR = "ACYLBOUNDS_SETTINGS"

# Hard caps; settings may lower them but never raise them.
MAX_TETS_CAP = 8
MAX_COORD_CAP = 32
MAX_SECTORS_CAP = 16

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings:
    """Manage persistent settings using QSettings (INI format).

    The backing file defaults to the per-user config location. Pass ``path`` or set
    ``ACYLBOUNDS_SETTINGS`` to use a specific file instead.
    """

    def __init__(self, path: Path | str | None = None):
        if path is None:
            path = os.environ.get(SETTINGS_ENV_VAR)
        if path:
            self._settings = QSettings(str(path), QSettings.Format.IniFormat)
        else:
            self._settings = QSettings(
                QSettings.Format.IniFormat,
                QSettings.Scope.UserScope,
                "acylbounds",
                "acylbounds",
            )

    def file_name(self) -> str:
        """Path of the backing INI file."""
        return self._settings.fileName()

    def sync(self):
        self._settings.sync()

    # Enumeration
    def save_max_coord(self, max_coord: int):
        """Save default coordinate bound for vertex enumeration."""
        self._settings.setValue("enumeration/max_coord", int(max_coord))

    def load_max_coord(self) -> int:
        """Load default coordinate bound for vertex enumeration."""
        value = self._settings.value("enumeration/max_coord", 4, type=int)
        return max(1, min(value, MAX_COORD_CAP))

    def save_max_tets(self, max_tets: int):
        """Save tetrahedron cap for enumeration."""
        self._settings.setValue("enumeration/max_tets", int(max_tets))

    def load_max_tets(self) -> int:
        """Load tetrahedron cap for enumeration."""
        value = self._settings.value("enumeration/max_tets", MAX_TETS_CAP, type=int)
        return max(1, min(value, MAX_TETS_CAP))

    def save_workers(self, workers: int):
        """Save worker thread count for enumeration."""
        self._settings.setValue("enumeration/workers", int(workers))

    def load_workers(self) -> int:
        """Load worker thread count for enumeration."""
        return max(1, self._settings.value("enumeration/workers", 1, type=int))

    # Branched surfaces
    def save_max_sectors(self, max_sectors: int):
        self._settings.setValue("cone/max_sectors", int(max_sectors))

    def load_max_sectors(self) -> int:
        value = self._settings.value("cone/max_sectors", MAX_SECTORS_CAP, type=int)
        return max(1, min(value, MAX_SECTORS_CAP))

    # Logging
    def save_logging_enabled(self, enabled: bool):
        """Save file logging enabled setting."""
        self._settings.setValue("logging/enabled", enabled)

    def load_logging_enabled(self) -> bool:
        """Load file logging enabled setting."""
        return self._settings.value("logging/enabled", False, type=bool)

    def save_log_level(self, level: str):
        """Save console log level."""
        self._settings.setValue("logging/level", level.upper())

    def load_log_level(self) -> str:
        """Load console log level."""
        level = str(self._settings.value("logging/level", "WARNING", type=str)).upper()
        return level if level in LOG_LEVELS else "WARNING"

"""Bundled example inputs: triangulations, PD codes, decompositions and branched specs."""

import logging
import threading
from pathlib import Path
from typing import Optional

_logger = logging.getLogger(__name__)

TRIANGULATIONS = ("t2_closed", "l41_onetet", "l31_twist")
DIAGRAMS = ("trefoil", "figure8", "rational_sum")


class FixtureLibrary:
    """Loads and caches the files under ``acylbounds/fixtures``."""

    _instance: Optional["FixtureLibrary"] = None
    _lock = threading.Lock()

    def __new__(cls):
        with cls._lock:
            if cls._instance is None:
                cls._instance = super().__new__(cls)
                cls._instance._initialized = False
            return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self._initialized = True
        self._cache: dict[str, object] = {}
        self._cache_lock = threading.Lock()

    def fixtures_dir(self) -> Path:
        return Path(__file__).parent.parent / "fixtures"

    def path(self, file_name: str) -> Path:
        return self.fixtures_dir() / file_name

    def read_text(self, file_name: str) -> str:
        return self.path(file_name).read_text(encoding="utf-8")

    def _cached(self, key: str, loader):
        with self._cache_lock:
            if key not in self._cache:
                _logger.debug(f"Loading fixture {key}")
                self._cache[key] = loader()
            return self._cache[key]

    def triangulation(self, name: str):
        from acylbounds.core.triangulation import parse_triangulation

        return self._cached(
            f"{name}.tri", lambda: parse_triangulation(self.read_text(f"{name}.tri"))
        )

    def diagram(self, name: str):
        from acylbounds.core.knot_tangles import parse_pd

        return self._cached(f"{name}.pd", lambda: parse_pd(self.read_text(f"{name}.pd")))

    def decomposition(self, name: str):
        from acylbounds.core.knot_tangles import parse_decomposition

        return self._cached(
            f"{name}.dec", lambda: parse_decomposition(self.read_text(f"{name}.dec"))
        )

    def branched(self, name: str):
        from acylbounds.core.branched import parse_branched_spec

        return self._cached(
            f"{name}.bsf", lambda: parse_branched_spec(self.read_text(f"{name}.bsf"))
        )

    def clear(self):
        with self._cache_lock:
            self._cache.clear()


def get_fixture_library() -> FixtureLibrary:
    """Get the global fixture library instance."""
    return FixtureLibrary()

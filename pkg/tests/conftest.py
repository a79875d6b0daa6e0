"""Pytest fixtures for acylbounds tests."""

import shutil
import tempfile
from pathlib import Path

import pytest


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    tmp = Path(tempfile.mkdtemp())
    yield tmp
    # Cleanup
    shutil.rmtree(tmp, ignore_errors=True)


@pytest.fixture(autouse=True)
def isolated_settings(temp_dir: Path, monkeypatch):
    """Point Settings at a throwaway INI file."""
    from acylbounds.utils.settings import SETTINGS_ENV_VAR

    path = temp_dir / "acylbounds.ini"
    monkeypatch.setenv(SETTINGS_ENV_VAR, str(path))
    return path


@pytest.fixture
def settings(isolated_settings: Path):
    """Get a Settings instance backed by the temp INI file."""
    from acylbounds.utils.settings import Settings

    return Settings()


@pytest.fixture
def fixture_library():
    """Get a fresh FixtureLibrary instance."""
    from acylbounds.core.fixtures import FixtureLibrary

    # Reset singleton for testing
    FixtureLibrary._instance = None
    lib = FixtureLibrary()
    yield lib
    # Cleanup
    FixtureLibrary._instance = None


@pytest.fixture
def t2_closed(fixture_library):
    return fixture_library.triangulation("t2_closed")


@pytest.fixture
def l41(fixture_library):
    return fixture_library.triangulation("l41_onetet")


@pytest.fixture
def l31(fixture_library):
    return fixture_library.triangulation("l31_twist")


@pytest.fixture
def trefoil(fixture_library):
    return fixture_library.diagram("trefoil")


@pytest.fixture
def fig14(fixture_library):
    return fixture_library.branched("fig14")


@pytest.fixture
def fixtures_dir(fixture_library) -> Path:
    return fixture_library.fixtures_dir()

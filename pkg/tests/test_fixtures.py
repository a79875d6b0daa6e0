"""Tests for the bundled fixture library."""

from acylbounds.core.fixtures import DIAGRAMS, TRIANGULATIONS, FixtureLibrary, get_fixture_library


class TestFixtureLibrary:
    """Test loading and caching of bundled inputs."""

    def test_singleton(self, fixture_library):
        """Test that the accessor returns the shared instance."""
        assert get_fixture_library() is fixture_library
        assert FixtureLibrary() is fixture_library

    def test_all_fixtures_load(self, fixture_library):
        """Test that every bundled file parses."""
        for name in TRIANGULATIONS:
            assert fixture_library.triangulation(name).census().euler == 0
        for name in DIAGRAMS:
            assert fixture_library.diagram(name).n >= 3
        assert len(fixture_library.decomposition("rational_sum")) == 2
        assert len(fixture_library.branched("fig14").sectors) == 6

    def test_cached(self, fixture_library):
        """Test that a fixture is parsed once until the cache is cleared."""
        first = fixture_library.triangulation("l41_onetet")
        assert fixture_library.triangulation("l41_onetet") is first
        fixture_library.clear()
        second = fixture_library.triangulation("l41_onetet")
        assert second is not first
        assert second == first

    def test_paths(self, fixture_library):
        """Test that fixture paths point into the package."""
        path = fixture_library.path("trefoil.pd")
        assert path.exists()
        assert path.parent.name == "fixtures"
        assert fixture_library.read_text("trefoil.pd").startswith("#")

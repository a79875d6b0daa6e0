"""Tests for branched-surface specs, the weight cone and carried surfaces."""

import numpy as np
import pytest

from acylbounds.core.branched import (
    branch_matrix,
    carried_surface,
    figure14_family,
    figure14_weights,
    format_branched_spec,
    parse_branched_spec,
    parse_weights,
    satisfies_equations,
    sheet_trace,
    solve_general,
    specialize,
    weight_cone,
)
from acylbounds.core.errors import (
    BelowRange,
    DanglingCircle,
    InconsistentWeights,
    LengthMismatch,
    MalformedLine,
    SlotReuse,
    TooLarge,
)

TORUS = "sector T chi 0 circles 0\n"


class TestParse:
    """Test the branched-surface text format."""

    def test_fixture(self, fig14):
        """Test that the bundled complex has six sectors and four curves."""
        assert fig14.sector_ids == ("a", "b", "c", "d", "e", "f")
        assert [c.id for c in fig14.curves] == ["C1", "C2", "C3", "C4"]
        assert fig14.sectors[fig14.index("e")].euler == -3
        assert fig14.index("d") == 3

    def test_round_trip(self, fig14):
        """Test that formatting then parsing gives back the same spec."""
        assert parse_branched_spec(format_branched_spec(fig14)) == fig14

    def test_slot_reuse(self):
        """Test that a boundary circle can sit on only one branch curve."""
        text = (
            "sector a chi 0 circles 2\n"
            "sector b chi -1 circles 3\n"
            "branch C merged b:1 lower a:2 upper a:2 order lu\n"
        )
        with pytest.raises(SlotReuse) as info:
            parse_branched_spec(text)
        assert info.value.line_no == 3

    def test_dangling_circle(self):
        """Test that every boundary circle must be used."""
        with pytest.raises(DanglingCircle):
            parse_branched_spec("sector a chi 0 circles 1\n")

    @pytest.mark.parametrize(
        "text",
        [
            "sector a chi zero circles 1\n",
            "sector a chi 0 circles 3\nbranch C merged x:1 lower a:2 upper a:3 order lu\n",
            "sector a chi 0 circles 3\nbranch C merged a:4 lower a:2 upper a:3 order lu\n",
            "sector a chi 0 circles 3\nbranch C merged a:1 lower a:2 upper a:3 order up\n",
            "sector a chi 0 circles 0\nsector a chi 0 circles 0\n",
            "sector a chi 0 circles 3\nbranch C merged a:1 lower a:2 upper a:3 order lu\n"
            "sector b chi 0 circles 0\n",
        ],
    )
    def test_malformed(self, text: str):
        """Test syntax and reference errors."""
        with pytest.raises(MalformedLine):
            parse_branched_spec(text)


class TestWeightCone:
    """Test the cone of nonnegative branch-equation solutions."""

    def test_branch_matrix(self, fig14):
        """Test one row per curve in sector order."""
        assert branch_matrix(fig14)[0] == [-1, -1, 1, 0, 0, 0]

    def test_fixture_rays(self, fig14):
        """Test the two extreme rays of the bundled complex."""
        cone = weight_cone(fig14)
        assert cone.dimension == 2
        assert cone.rays == ((0, 2, 2, 2, 1, 1), (1, 3, 4, 2, 2, 0))
        assert all(satisfies_equations(fig14, ray) for ray in cone.rays)

    def test_cone_covers_small_solutions(self, fig14):
        """Test that every solution with weights up to 10 is a nonnegative ray combination."""
        cone = weight_cone(fig14)
        grid = np.indices((11,) * 6).reshape(6, -1).T
        matrix = np.array(branch_matrix(fig14), dtype=np.int64)
        solutions = grid[np.all(grid @ matrix.T == 0, axis=1)]
        assert len(solutions) > 10
        for row in solutions:
            assert cone.contains(tuple(int(x) for x in row))

    def test_contains(self, fig14):
        """Test points outside the span and outside the positive side."""
        cone = weight_cone(fig14)
        assert cone.coefficients((1, 5, 6, 4, 3, 1)) == (1, 1)
        assert not cone.contains((1, 0, 0, 0, 0, 0))
        assert not cone.contains((-1, -1, -2, 0, -1, 1))

    def test_no_curves(self):
        """Test that a lone closed sector spans a one-dimensional cone."""
        cone = weight_cone(parse_branched_spec(TORUS))
        assert cone.dimension == 1
        assert cone.rays == ((1,),)

    def test_sector_cap(self):
        """Test that too many sectors are refused."""
        spec = parse_branched_spec("".join(f"sector s{k} chi 0 circles 0\n" for k in range(17)))
        with pytest.raises(TooLarge):
            weight_cone(spec)

    def test_general_solution(self, fig14):
        """Test that the rational basis spans a two-dimensional solution space."""
        basis = solve_general(fig14)
        assert len(basis) == 2
        assert all(satisfies_equations(fig14, vec) for vec in basis)

    @pytest.mark.parametrize("n", [3, 4, 10, 25])
    def test_general_solution_gives_family(self, fig14, n: int):
        """Test that fixing a = 1 and e = n in the general solution gives the family."""
        assert specialize(fig14, {"a": 1, "e": n}) == figure14_weights(n)

    @pytest.mark.parametrize("fixed", [{"a": 1}, {"z": 1}, {}])
    def test_specialize_needs_a_unique_solution(self, fig14, fixed):
        """Test that underdetermined or unknown weights are refused."""
        with pytest.raises(InconsistentWeights):
            specialize(fig14, fixed)


class TestCarriedSurface:
    """Test gluing weighted sectors into surfaces."""

    def test_family_start(self, fig14):
        """Test n = 3: a connected genus-9 surface."""
        surface = carried_surface(fig14, figure14_weights(3))
        assert surface.weights == (1, 5, 6, 4, 3, 1)
        assert surface.connected
        assert surface.euler == -16
        assert surface.genus == 9

    def test_dict_weights(self, fig14):
        """Test that weights can be given by sector id."""
        weights = dict(zip(fig14.sector_ids, figure14_weights(4)))
        assert carried_surface(fig14, weights).genus == 12

    @pytest.mark.parametrize("n", [3, 4, 10, 25])
    def test_family(self, fig14, n: int):
        """Test that the family carries connected surfaces of genus 3n."""
        weights, surface = figure14_family(n, fig14)
        assert surface.genus == 3 * n
        assert sheet_trace(fig14, weights) == 1

    def test_family_weights(self):
        """Test the n = 10 weights."""
        assert figure14_weights(10) == (1, 19, 20, 18, 10, 8)

    def test_family_range(self):
        """Test that n must be at least 3."""
        with pytest.raises(BelowRange):
            figure14_weights(2)

    def test_disconnected(self):
        """Test that parallel copies of a closed sector stay apart."""
        spec = parse_branched_spec(TORUS)
        surface = carried_surface(spec, (3,))
        assert surface.components == 3
        assert surface.component_genera == [1, 1, 1]
        assert surface.genus is None
        assert sheet_trace(spec, (3,)) == 3

    def test_trace_agrees_on_cone_rays(self, fig14):
        """Test the union-find count against breadth-first search."""
        for ray in weight_cone(fig14).rays:
            assert carried_surface(fig14, ray).components == sheet_trace(fig14, ray)

    def test_inconsistent(self, fig14):
        """Test that weights must satisfy every branch equation."""
        with pytest.raises(InconsistentWeights):
            carried_surface(fig14, (1, 1, 1, 1, 1, 1))
        with pytest.raises(InconsistentWeights):
            carried_surface(fig14, (-1, 0, 0, 0, 0, 0))

    def test_length(self, fig14):
        """Test that one weight per sector is required."""
        with pytest.raises(LengthMismatch):
            carried_surface(fig14, (1, 2))
        with pytest.raises(LengthMismatch):
            carried_surface(fig14, {"a": 1})

    def test_parse_weights(self):
        """Test comma-separated weights."""
        assert parse_weights("1, 5,6") == (1, 5, 6)
        with pytest.raises(MalformedLine):
            parse_weights("1,x")

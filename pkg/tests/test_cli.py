"""Tests for the command-line front end."""

from fractions import Fraction
from pathlib import Path

import pytest

from acylbounds.cli import build_parser, run_cli
from acylbounds.cli.report import Report, command_line, format_value, input_digest

GOLDEN_DIR = Path(__file__).parent / "golden"


def body(text: str) -> list[str]:
    """Report lines without the comment header and trailer."""
    return [line for line in text.splitlines() if not line.startswith("#")]


def values(text: str) -> dict[str, str]:
    return dict(line.split(" = ", 1) for line in body(text))


def run(capsys, settings, *argv: str) -> tuple[int, str, str]:
    code = run_cli(list(argv), settings=settings)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestReport:
    """Test report formatting."""

    def test_format_value(self):
        """Test value rendering rules."""
        assert format_value(None) == "none"
        assert format_value(True) == "true"
        assert format_value(Fraction(1, 2)) == "1/2"
        assert format_value(Fraction(4, 2)) == "2"
        assert format_value((1, Fraction(-3, 4), 5)) == "1,-3/4,5"

    def test_render(self):
        """Test header, body, hypothesis and warning order."""
        report = Report("acylbounds x", "abc")
        report.add("k", 3)
        report.hypotheses(["h1", "h1", "h2"])
        report.warn("w")
        assert report.render() == (
            "# command: acylbounds x\n# input-digest: abc\nk = 3\n"
            "# hypothesis: h1\n# hypothesis: h2\n# warning: w\n"
        )
        assert report.value("k") == "3"
        assert report.value("missing") is None

    def test_command_line(self, temp_dir: Path):
        """Test that runtime options are dropped and input paths shortened."""
        path = temp_dir / "in.tri"
        argv = ["--log-level", "debug", "tri", "certify", str(path), "--workers=4"]
        argv += ["--max-coord", "3"]
        assert command_line(argv, [path]) == "acylbounds tri certify in.tri --max-coord 3"
        assert command_line(["heegaard", "--g", "2"]) == "acylbounds heegaard --g 2"

    def test_digest(self, temp_dir: Path):
        """Test that the digest follows file bytes, else the argument string."""
        path = temp_dir / "a.txt"
        path.write_text("tets 1\n")
        assert input_digest([path]) == input_digest([path], "ignored")
        assert input_digest(None, "a") != input_digest(None, "b")


class TestGolden:
    """Test reports against stored expected output."""

    def test_census(self, capsys, settings, fixtures_dir):
        """Test the census report of the doubled tetrahedron."""
        code, out, _ = run(capsys, settings, "tri", "census", str(fixtures_dir / "t2_closed.tri"))
        assert code == 0
        expected = (GOLDEN_DIR / "t2_closed.census").read_text().splitlines()
        assert body(out) == expected
        assert out.startswith("# command: acylbounds tri census")

    def test_enumerate(self, capsys, settings, fixtures_dir):
        """Test the vertex surfaces of L(4,1)."""
        path = str(fixtures_dir / "l41_onetet.tri")
        code, out, _ = run(capsys, settings, "tri", "enumerate", path, "--max-coord", "4")
        assert code == 0
        assert body(out) == (GOLDEN_DIR / "l41_onetet.enumerate").read_text().splitlines()

    def test_fig14(self, capsys, settings):
        """Test the first member of the carried family."""
        code, out, _ = run(capsys, settings, "branched", "fig14", "--n", "3")
        assert code == 0
        assert body(out) == (GOLDEN_DIR / "fig14_n3.carry").read_text().splitlines()
        assert "# warning: branched complex is a reconstruction" in out


class TestCommands:
    """Test individual subcommands."""

    def test_census_is_byte_stable(self, capsys, settings, fixtures_dir):
        """Test that repeated runs give identical output."""
        path = str(fixtures_dir / "l31_twist.tri")
        first = run(capsys, settings, "tri", "census", path)[1]
        assert run(capsys, settings, "tri", "census", path)[1] == first

    @pytest.mark.parametrize("command", ["enumerate", "classify", "certify"])
    def test_workers_do_not_change_output(self, capsys, settings, fixtures_dir, command):
        """Test that the worker count leaves the whole report unchanged."""
        path = str(fixtures_dir / "l31_twist.tri")
        one = run(capsys, settings, "tri", command, path, "--max-coord", "2", "--workers", "1")
        many = run(capsys, settings, "tri", command, path, "--max-coord", "2", "--workers=3")
        assert one == many

    def test_header_names_inputs_by_base_name(self, capsys, settings, fixtures_dir):
        """Test that the command header omits the directory and runtime options."""
        path = str(fixtures_dir / "l31_twist.tri")
        argv = ("tri", "enumerate", path, "--max-coord", "2", "--workers", "2")
        out = run(capsys, settings, *argv)[1]
        header = out.splitlines()[0]
        assert header == "# command: acylbounds tri enumerate l31_twist.tri --max-coord 2"

    def test_classify_one_sided(self, capsys, settings, fixtures_dir):
        """Test that a one-sided vector is reported and skipped."""
        path = str(fixtures_dir / "l41_onetet.tri")
        code, out, _ = run(
            capsys, settings, "tri", "classify", path, "--vector", "nsv 1 0 0 0 0 0 1 0"
        )
        assert code == 0
        assert values(out)["surface.0.two_sided"] == "false"
        assert "# warning: surface 0 is one-sided" in out

    def test_certify(self, capsys, settings, fixtures_dir):
        """Test the certificate for twice the L(4,1) quad."""
        path = str(fixtures_dir / "l41_onetet.tri")
        code, out, _ = run(
            capsys, settings, "tri", "certify", path, "--vector", "nsv 1 0 0 0 0 0 2 0"
        )
        assert code == 0
        result = values(out)
        assert result["bound"] == "1"
        assert result["surface.0.bad_total"] == "4"
        assert result["surface.0.good_total"] == "4"
        assert "surface.0.fair_total" in result
        assert result["surface.0.rank_h1"] == "4"
        assert result["surface.0.genus_from_counting"] == "1"
        assert result["surface.0.verdict"] == "consistent"

    def test_heegaard(self, capsys, settings):
        """Test the Heegaard bound."""
        code, out, _ = run(capsys, settings, "heegaard", "--g", "2", "--n", "3,3")
        assert code == 0
        assert values(out)["heegaard_bound"] == "3"
        assert values(out)["bad_edge_caps"] == "6,6"

    def test_knot_bounds(self, capsys, settings, fixtures_dir):
        """Test the crossing bound of the trefoil."""
        code, out, _ = run(capsys, settings, "knot", "bounds", str(fixtures_dir / "trefoil.pd"))
        assert code == 0
        result = values(out)
        assert result["prop3_bound"] == "1"
        assert result["face_sizes"] == "2,2,2,3,3"
        assert result["alternating"] == "true"

    def test_knot_tangles(self, capsys, settings, fixtures_dir):
        """Test the rational tangle bounds on the bundled decomposition."""
        code, out, _ = run(
            capsys,
            settings,
            "knot",
            "tangles",
            str(fixtures_dir / "rational_sum.pd"),
            "--dec",
            str(fixtures_dir / "rational_sum.dec"),
        )
        assert code == 0
        result = values(out)
        assert result["tangle.T1.vector"] == "2"
        assert result["tangle.T1.fraction"] == "2"
        assert result["rational_bound"] == "0"
        assert result["rational_bound_sharper"] == "1/2"
        assert result["s0_arcs"] == "4"

    def test_knot_geodesic(self, capsys, settings):
        """Test one geodesic row per input."""
        code, out, _ = run(capsys, settings, "knot", "geodesic", "--t", "4", "--c", "5")
        assert code == 0
        result = values(out)
        assert result["geodesic.tetrahedra"] == "6"
        assert result["geodesic.crossings.value"] == "9/2"
        assert result["geodesic.crossings"] == "4"

    def test_geodesic_needs_both_heegaard_inputs(self, capsys, settings):
        """Test that --g without --n is an input error."""
        code, _, err = run(capsys, settings, "knot", "geodesic", "--g", "2")
        assert code == 1
        assert err.startswith("error: MalformedLine")

    def test_branched_cone(self, capsys, settings, fixtures_dir):
        """Test the weight cone report."""
        code, out, _ = run(capsys, settings, "branched", "cone", str(fixtures_dir / "fig14.bsf"))
        assert code == 0
        result = values(out)
        assert result["dimension"] == "2"
        assert result["ray.0"] == "0,2,2,2,1,1"
        assert result["ray.1"] == "1,3,4,2,2,0"

    def test_branched_carry(self, capsys, settings, fixtures_dir):
        """Test carrying weights given on the command line."""
        path = str(fixtures_dir / "fig14.bsf")
        code, out, _ = run(capsys, settings, "branched", "carry", path, "--weights", "0,2,2,2,1,1")
        assert code == 0
        assert values(out)["euler"] == "-6"

    def test_construct(self, capsys, settings):
        """Test the graph family and tunnel bound."""
        code, out, _ = run(capsys, settings, "construct", "gamma", "--n", "2")
        assert code == 0
        assert values(out)["betti"] == "2"
        assert values(out)["condition.1"].startswith("UNVERIFIED: ")
        code, out, _ = run(capsys, settings, "construct", "tunnel", "--b", "2", "--g", "1")
        assert code == 0
        assert values(out)["tunnel_bound"] == "2"


class TestExitCodes:
    """Test error reporting and exit codes."""

    def test_domain_error(self, capsys, settings, fixtures_dir):
        """Test that domain errors exit 1 with the error name."""
        path = str(fixtures_dir / "fig14.bsf")
        code, out, err = run(
            capsys, settings, "branched", "carry", path, "--weights", "1,1,1,1,1,1"
        )
        assert code == 1
        assert out == ""
        assert err.startswith("error: InconsistentWeights: ")

    def test_below_range(self, capsys, settings):
        """Test that the family range is enforced."""
        code, _, err = run(capsys, settings, "branched", "fig14", "--n", "2")
        assert code == 1
        assert "BelowRange" in err

    def test_parse_error(self, capsys, settings, temp_dir: Path):
        """Test that a malformed file exits 1."""
        path = temp_dir / "bad.tri"
        path.write_text("tets 1\n")
        code, _, err = run(capsys, settings, "tri", "census", str(path))
        assert code == 1
        assert err.startswith("error: UnpairedFace")

    def test_missing_file(self, capsys, settings, temp_dir: Path):
        """Test that an unreadable file exits 2."""
        code, _, _ = run(capsys, settings, "tri", "census", str(temp_dir / "missing.tri"))
        assert code == 2

    def test_usage_error(self, capsys, settings):
        """Test that argument errors exit 2."""
        assert run(capsys, settings, "tri")[0] == 2
        assert run(capsys, settings, "heegaard", "--g", "2", "--n", "x")[0] == 2

    def test_parser_groups(self):
        """Test that every command group is registered."""
        parser = build_parser()
        args = parser.parse_args(["knot", "tangles", "a.pd", "--dec", "a.dec", "--prime"])
        assert (args.group, args.command, args.prime) == ("knot", "tangles", True)


class TestSelftest:
    """Test the bundled invariant checks."""

    @pytest.mark.slow
    def test_all_checks_pass(self, capsys, settings):
        """Test that every check reports ok."""
        code, out, _ = run(capsys, settings, "selftest")
        lines = out.splitlines()
        assert code == 0
        assert lines
        assert all(line.startswith("check.") and line.endswith(" = ok") for line in lines)

"""Argument parsing and subcommand handlers."""

import argparse
import logging
import sys
from pathlib import Path

from acylbounds import __version__
from acylbounds.cli.report import Report, command_line, input_digest
from acylbounds.core import acyl_bounds, branched, constructions, knot_tangles
from acylbounds.core.errors import AcylBoundsError, MalformedLine, OneSided
from acylbounds.core.normal_surface import (
    NormalVector,
    build_surface,
    enumerate_vertex_surfaces,
    parse_normal_vector,
)
from acylbounds.core.triangulation import Triangulation, parse_triangulation, vertex_link_vector
from acylbounds.utils.settings import LOG_LEVELS, Settings

_logger = logging.getLogger(__name__)


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acylbounds",
        description="Genus bounds for acylindrical and totally geodesic surfaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=None)
    groups = parser.add_subparsers(dest="group", required=True)

    # tri
    tri = groups.add_parser("tri", help="triangulations and normal surfaces")
    tri_cmds = tri.add_subparsers(dest="command", required=True)
    for name in ("census", "enumerate", "classify", "certify"):
        sub = tri_cmds.add_parser(name)
        sub.add_argument("file", type=Path)
        if name != "census":
            sub.add_argument("--max-coord", type=int, default=None)
            sub.add_argument("--workers", type=int, default=None)
        if name in ("classify", "certify"):
            sub.add_argument("--vector", default=None, help='a vector "nsv <t> ..."')

    heegaard = groups.add_parser("heegaard", help="bound from Heegaard disc intersections")
    heegaard.add_argument("--g", type=int, required=True)
    heegaard.add_argument("--n", type=_csv_ints, required=True, dest="n_i")

    # knot
    knot = groups.add_parser("knot", help="knot diagrams and tangle decompositions")
    knot_cmds = knot.add_subparsers(dest="command", required=True)
    bounds = knot_cmds.add_parser("bounds")
    bounds.add_argument("file", type=Path)
    tangles = knot_cmds.add_parser("tangles")
    tangles.add_argument("file", type=Path)
    tangles.add_argument("--dec", type=Path, required=True)
    tangles.add_argument("--prime", action="store_true")
    geodesic = knot_cmds.add_parser("geodesic")
    geodesic.add_argument("--t", type=int)
    geodesic.add_argument("--g", type=int)
    geodesic.add_argument("--n", type=_csv_ints, dest="n_i")
    geodesic.add_argument("--c", type=int)
    geodesic.add_argument("--r", type=int)
    geodesic.add_argument("--r-alt", type=int)

    # branched
    br = groups.add_parser("branched", help="branched surfaces and carried surfaces")
    br_cmds = br.add_subparsers(dest="command", required=True)
    cone = br_cmds.add_parser("cone")
    cone.add_argument("file", type=Path)
    carry = br_cmds.add_parser("carry")
    carry.add_argument("file", type=Path)
    carry.add_argument("--weights", type=_csv_ints, required=True)
    fig14 = br_cmds.add_parser("fig14")
    fig14.add_argument("--n", type=int, required=True)

    # construct
    con = groups.add_parser("construct", help="chained-loop graphs and tunnel numbers")
    con_cmds = con.add_subparsers(dest="command", required=True)
    gamma = con_cmds.add_parser("gamma")
    gamma.add_argument("--n", type=int, required=True)
    tunnel = con_cmds.add_parser("tunnel")
    tunnel.add_argument("--b", type=int, required=True)
    tunnel.add_argument("--g", type=int, required=True)

    groups.add_parser("selftest", help="run the invariant checks on bundled fixtures")
    return parser


def run_cli(argv: list[str] | None = None, settings: Settings | None = None) -> int:
    """Run one command; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.log_level:
        from acylbounds.utils.logger import setup_logging

        setup_logging(args.log_level)

    settings = settings or Settings()
    if args.group == "selftest":
        from acylbounds.cli.selftest import run_selftest

        return run_selftest(sys.stdout)

    handler = HANDLERS[(args.group, getattr(args, "command", None))]
    files = [p for p in (getattr(args, "file", None), getattr(args, "dec", None)) if p]
    try:
        command = command_line(argv, files)
        report = Report(command, input_digest(files, command))
        handler(args, settings, report)
    except AcylBoundsError as e:
        _logger.debug(f"{e.name}: {e}")
        print(f"error: {e.name}: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    sys.stdout.write(report.render())
    return 0


# --------------------------------------------------------------------------- tri


def _load_tri(path: Path) -> Triangulation:
    return parse_triangulation(path.read_text(encoding="utf-8"))


def _vectors(args, settings: Settings, tri: Triangulation) -> list[NormalVector]:
    if getattr(args, "vector", None):
        return [parse_normal_vector(args.vector)]
    return enumerate_vertex_surfaces(
        tri,
        args.max_coord or settings.load_max_coord(),
        workers=args.workers or settings.load_workers(),
        max_tets=settings.load_max_tets(),
    )


def tri_census(args, settings: Settings, report: Report):
    tri = _load_tri(args.file)
    census = tri.census()
    report.add("tetrahedra", census.tetrahedra)
    report.add("vertices", census.vertices)
    report.add("edges", census.edges)
    report.add("faces", census.faces)
    report.add("euler", census.euler)
    report.add("edge_degrees", census.edge_degrees)
    report.add("orientable", tri.is_orientable())
    for k in range(census.vertices):
        report.add(f"vertex_link.{k}", str(NormalVector(vertex_link_vector(tri, k))))
    report.add("prop1_bound", acyl_bounds.prop1_bound(tri.tet_count))
    report.hypotheses(acyl_bounds.PROP1_HYPOTHESES)


def tri_enumerate(args, settings: Settings, report: Report):
    tri = _load_tri(args.file)
    vectors = _vectors(args, settings, tri)
    report.add("surfaces", len(vectors))
    for k, v in enumerate(vectors):
        surface = build_surface(tri, v)
        report.add(f"surface.{k}", str(v))
        report.add(f"surface.{k}.chi", surface.euler)
        report.add(f"surface.{k}.components", surface.component_count)
        report.add(f"surface.{k}.orientable", surface.orientable)
        report.add(f"surface.{k}.two_sided", surface.two_sided)


def tri_classify(args, settings: Settings, report: Report):
    tri = _load_tri(args.file)
    for k, v in enumerate(_vectors(args, settings, tri)):
        report.add(f"surface.{k}", str(v))
        try:
            labelled = acyl_bounds.classify_edges(tri, v)
        except OneSided:
            report.add(f"surface.{k}.two_sided", False)
            report.warn(f"surface {k} is one-sided; edge classification skipped")
            continue
        report.add(f"surface.{k}.good_total", labelled.good_total)
        report.add(f"surface.{k}.fair_total", labelled.fair_total)
        report.add(f"surface.{k}.bad_total", labelled.bad_total)
        report.add(f"surface.{k}.good_fair_disjoint", labelled.good_fair_disjoint())
        report.add(f"surface.{k}.max_face_nongood", labelled.max_face_nongood())
        report.add(f"surface.{k}.tet_excess", [t.excess for t in labelled.per_tet])


def tri_certify(args, settings: Settings, report: Report):
    tri = _load_tri(args.file)
    report.add("bound", acyl_bounds.prop1_bound(tri.tet_count))
    for k, v in enumerate(_vectors(args, settings, tri)):
        report.add(f"surface.{k}", str(v))
        try:
            labelled = acyl_bounds.classify_edges(tri, v)
        except OneSided:
            report.warn(f"surface {k} is one-sided; no certificate")
            continue
        cert = acyl_bounds.counting_certificate(tri, v, labelled)
        report.add(f"surface.{k}.bad_total", cert.bad_total)
        report.add(f"surface.{k}.fair_total", labelled.fair_total)
        report.add(f"surface.{k}.good_total", labelled.good_total)
        report.add(f"surface.{k}.rank_h1", cert.rank_h1_fbar)
        report.add(f"surface.{k}.chi_fbar", cert.chi_fbar)
        report.add(f"surface.{k}.chi_fs_bound", cert.chi_fs_bound)
        report.add(f"surface.{k}.excess_total", cert.excess_total)
        report.add(f"surface.{k}.genus_from_counting", cert.genus_from_counting)
        report.add(f"surface.{k}.chi_accounting_holds", cert.chi_accounting_holds)
        report.add(f"surface.{k}.verdict", cert.verdict.value)
    report.hypotheses(acyl_bounds.PROP1_HYPOTHESES)


def heegaard(args, settings: Settings, report: Report):
    result = acyl_bounds.heegaard_bound(args.g, args.n_i)
    report.add("genus", result.genus)
    report.add("complexity", result.complexity)
    report.add("bad_edge_caps", result.bad_edge_caps)
    report.add("cap_total", result.cap_total)
    report.add("heegaard_bound_value", result.bound)
    report.add("heegaard_bound", result.integer_bound)
    report.hypotheses(acyl_bounds.HEEGAARD_HYPOTHESES)


# --------------------------------------------------------------------------- knot


def _load_pd(path: Path) -> knot_tangles.KnotDiagram:
    return knot_tangles.parse_pd(path.read_text(encoding="utf-8"))


def knot_bounds(args, settings: Settings, report: Report):
    diagram = _load_pd(args.file)
    result = knot_tangles.crossing_bound(diagram)
    report.add("crossings", diagram.n)
    report.add("components", diagram.component_count())
    report.add("faces", len(diagram.faces))
    report.add("face_sizes", diagram.face_sizes())
    report.add("alternating", knot_tangles.is_alternating(diagram))
    report.add("total_budget", result.total_budget)
    report.add("prop3_bound", result.bound)
    report.hypotheses(result.hypotheses)


def knot_tangles_cmd(args, settings: Settings, report: Report):
    diagram = _load_pd(args.file)
    specs = knot_tangles.parse_decomposition(args.dec.read_text(encoding="utf-8"))
    result = knot_tangles.decomposition_bounds(diagram, specs, prime=args.prime)
    report.add("crossings", diagram.n)
    report.add("knot", result.is_knot)
    for tangle in result.tangles:
        key = f"tangle.{tangle.spec.name}"
        report.add(f"{key}.claimed", tangle.spec.claimed)
        report.add(f"{key}.verified", tangle.verified)
        if tangle.vector is not None:
            report.add(f"{key}.vector", tangle.vector)
            report.add(f"{key}.fraction", tangle.fraction)
    report.add("rational_tangles", result.rational_count)
    report.add("s0_arcs", result.s0_arcs)
    if result.rational_bound is not None:
        report.add("rational_bound", result.rational_bound)
        report.add("rational_bound_sharper", result.rational_sharper)
        report.add("rational_bound_sharper_floor", result.rational_sharper_floor)
    if result.alternating_bound is not None:
        report.add("alternating_prime_bound", result.alternating_bound)
    if result.two_alternating_verdict is not None:
        report.add("two_alternating_verdict", result.two_alternating_verdict)
    if result.geodesic_bound is not None:
        report.add("geodesic_total_genus_bound", result.geodesic_bound)
    report.hypotheses(result.hypotheses)
    for warning in result.warnings:
        report.warn(warning)


def knot_geodesic(args, settings: Settings, report: Report):
    heegaard_data = None
    if args.g is not None or args.n_i is not None:
        if args.g is None or args.n_i is None:
            raise MalformedLine("--g and --n must be given together")
        heegaard_data = (args.g, args.n_i)
    rows = knot_tangles.geodesic_bounds(
        t=args.t, heegaard=heegaard_data, c=args.c, r=args.r, r_alt=args.r_alt
    )
    if not rows:
        report.warn("no inputs given")
    for row in rows:
        report.add(f"geodesic.{row.key}.formula", row.formula)
        report.add(f"geodesic.{row.key}.value", row.value)
        report.add(f"geodesic.{row.key}", row.bound)
    if rows:
        report.hypotheses(knot_tangles.GEODESIC_HYPOTHESES)


# --------------------------------------------------------------------------- branched


def _load_bsf(path: Path) -> branched.BranchedSpec:
    return branched.parse_branched_spec(path.read_text(encoding="utf-8"))


def branched_cone(args, settings: Settings, report: Report):
    spec = _load_bsf(args.file)
    cone = branched.weight_cone(spec, max_sectors=settings.load_max_sectors())
    report.add("sectors", spec.sector_ids)
    report.add("branch_curves", len(spec.curves))
    for curve, row in zip(spec.curves, cone.matrix):
        report.add(f"equation.{curve.id}", row)
    report.add("dimension", cone.dimension)
    report.add("rays", len(cone.rays))
    for k, ray in enumerate(cone.rays):
        report.add(f"ray.{k}", ray)
    for k, vec in enumerate(branched.solve_general(spec)):
        report.add(f"basis.{k}", vec)


def _carried(report: Report, surface: branched.CarriedSurface):
    report.add("weights", surface.weights)
    report.add("components", surface.components)
    report.add("euler", surface.euler)
    report.add("connected", surface.connected)
    if surface.genus is not None:
        report.add("genus", surface.genus)
    else:
        report.add("component_euler", surface.component_euler)
    report.hypotheses(branched.CARRY_HYPOTHESES)


def branched_carry(args, settings: Settings, report: Report):
    spec = _load_bsf(args.file)
    _carried(report, branched.carried_surface(spec, args.weights))


def branched_fig14(args, settings: Settings, report: Report):
    weights, surface = branched.figure14_family(args.n)
    report.add("n", args.n)
    report.add("equations_hold", True)
    _carried(report, surface)
    report.warn("branched complex is a reconstruction consistent with the weight family")


# --------------------------------------------------------------------------- construct


def construct_gamma(args, settings: Settings, report: Report):
    family = constructions.gamma_family(args.n)
    report.add("n", args.n)
    report.add("vertices", len(family.graph.vertices))
    report.add("edges", len(family.graph.edges))
    report.add("trivalent", family.graph.is_trivalent())
    report.add("betti", family.betti)
    report.add("handlebody_genus", family.handlebody_genus)
    for k, (condition, status) in enumerate(family.checklist, start=1):
        report.add(f"condition.{k}", f"{status}: {condition}")


def construct_tunnel(args, settings: Settings, report: Report):
    record = constructions.PresentationRecord(args.b, args.g)
    report.add("b", record.b)
    report.add("g", record.g)
    report.add("heegaard_genus_bound", record.heegaard_genus_bound)
    report.add("tunnel_bound", constructions.tunnel_bound(args.b, args.g))
    report.hypotheses(constructions.TUNNEL_HYPOTHESES)


HANDLERS = {
    ("tri", "census"): tri_census,
    ("tri", "enumerate"): tri_enumerate,
    ("tri", "classify"): tri_classify,
    ("tri", "certify"): tri_certify,
    ("heegaard", None): heegaard,
    ("knot", "bounds"): knot_bounds,
    ("knot", "tangles"): knot_tangles_cmd,
    ("knot", "geodesic"): knot_geodesic,
    ("branched", "cone"): branched_cone,
    ("branched", "carry"): branched_carry,
    ("branched", "fig14"): branched_fig14,
    ("construct", "gamma"): construct_gamma,
    ("construct", "tunnel"): construct_tunnel,
}

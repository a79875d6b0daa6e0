"""Invariant checks over the bundled fixtures, one ``check.<name> = ok|FAIL`` line each."""

import logging
import random
from collections.abc import Callable
from fractions import Fraction
from typing import TextIO

import numpy as np

from acylbounds.core import acyl_bounds, branched, constructions, knot_tangles
from acylbounds.core.errors import AcylBoundsError
from acylbounds.core.fixtures import DIAGRAMS, TRIANGULATIONS, get_fixture_library
from acylbounds.core.normal_surface import (
    build_surface,
    enumerate_vertex_surfaces,
    euler_characteristic,
    is_admissible,
)
from acylbounds.core.triangulation import vertex_link_vector

_logger = logging.getLogger(__name__)

SEED = 20240521


def random_twist_vector(rng: random.Random, max_len: int = 6, bound: int = 4) -> list[int]:
    """Twist vector with entries in [-bound, bound] and a nonzero first entry."""
    length = rng.randint(1, max_len)
    first = rng.choice([x for x in range(-bound, bound + 1) if x])
    return [first] + [rng.randint(-bound, bound) for _ in range(length - 1)]


def check_census() -> bool:
    lib = get_fixture_library()
    for name in TRIANGULATIONS:
        census = lib.triangulation(name).census()
        if census.euler != 0 or sum(census.edge_degrees) != 6 * census.tetrahedra:
            return False
    return True


def check_enumeration() -> bool:
    lib = get_fixture_library()
    for name in TRIANGULATIONS:
        tri = lib.triangulation(name)
        for v in enumerate_vertex_surfaces(tri, max_coord=2):
            if not is_admissible(tri, v):
                return False
            euler_characteristic(tri, v)
        for k in range(tri.census().vertices):
            if euler_characteristic(tri, vertex_link_vector(tri, k)) != 2:
                return False
    return True


def check_classification() -> bool:
    lib = get_fixture_library()
    for name in TRIANGULATIONS:
        tri = lib.triangulation(name)
        for v in enumerate_vertex_surfaces(tri, max_coord=2):
            if not build_surface(tri, v).two_sided:
                continue
            labelled = acyl_bounds.classify_edges(tri, v)
            if not labelled.good_fair_disjoint() or labelled.max_face_nongood() > 6:
                return False
            if any(t.excess > 2 for t in labelled.per_tet):
                return False
            cert = acyl_bounds.counting_certificate(tri, v, labelled)
            if cert.bound_value != acyl_bounds.prop1_bound(tri.tet_count):
                return False
    return True


def check_prop1() -> bool:
    return all(acyl_bounds.prop1_bound(t) == (t + 1) // 2 for t in range(1, 101))


def check_heegaard() -> bool:
    rng = random.Random(SEED)
    if acyl_bounds.heegaard_bound(2, [3, 3]).integer_bound != 3:
        return False
    for _ in range(1000):
        g = rng.randint(1, 6)
        n_i = [rng.randint(2, 12) for _ in range(g)]
        caps = acyl_bounds.heegaard_bound(g, n_i).bad_edge_caps
        if sum(caps) != 4 * sum(n_i) - 6 * g:
            return False
    return True


def check_diagrams() -> bool:
    lib = get_fixture_library()
    for name in DIAGRAMS:
        diagram = lib.diagram(name)
        if len(diagram.faces) != diagram.n + 2:
            return False
    if knot_tangles.crossing_bound(lib.diagram("trefoil")).bound != 1:
        return False
    if knot_tangles.crossing_bound(lib.diagram("figure8")).bound != 3:
        return False
    rng = random.Random(SEED)
    for _ in range(1000):
        diagram = knot_tangles.random_diagram(rng)
        result = knot_tangles.crossing_bound(diagram)
        if len(diagram.faces) != diagram.n + 2 or result.total_budget != 6 * diagram.n - 12:
            return False
    return True


def check_rational_round_trip() -> bool:
    rng = random.Random(SEED)
    for _ in range(300):
        vector = random_twist_vector(rng)
        reduced = knot_tangles.rational_reduce(knot_tangles.build_tangle(vector))
        if isinstance(reduced, knot_tangles.Unrecognized):
            return False
        if knot_tangles.tangle_fraction(reduced) != knot_tangles.tangle_fraction(vector):
            return False
    return True


def check_rational_decompositions() -> bool:
    for n in range(2, 21):
        diagram, specs = knot_tangles.tangle_sum([(1,)] * n)
        report = knot_tangles.decomposition_bounds(diagram, specs)
        if report.rational_bound != 2 * n - 4 or report.rational_sharper != Fraction(4 * n - 7, 2):
            return False
    return True


def check_figure14() -> bool:
    spec = get_fixture_library().branched("fig14")
    for n in range(3, 51):
        weights, surface = branched.figure14_family(n, spec)
        if surface.genus != 3 * n or branched.sheet_trace(spec, weights) != 1:
            return False
    return True


def check_weight_cone() -> bool:
    spec = get_fixture_library().branched("fig14")
    cone = branched.weight_cone(spec)
    if cone.dimension != 2:
        return False
    if not all(branched.satisfies_equations(spec, ray) for ray in cone.rays):
        return False
    width = len(spec.sectors)
    grid = np.indices((11,) * width).reshape(width, -1).T
    matrix = np.array(branched.branch_matrix(spec), dtype=np.int64)
    solutions = grid[np.all(grid @ matrix.T == 0, axis=1)]
    if not all(cone.contains(tuple(int(x) for x in row)) for row in solutions):
        return False
    return all(
        branched.specialize(spec, {"a": 1, "e": n}) == branched.figure14_weights(n)
        for n in range(3, 51)
    )


def check_constructions() -> bool:
    if any(constructions.gamma_family(n).betti != n for n in range(2, 101)):
        return False
    return [constructions.tunnel_bound(b, g) for b, g in ((2, 1), (1, 0), (3, 2))] == [2, 0, 4]


CHECKS: dict[str, Callable[[], bool]] = {
    "census": check_census,
    "enumeration": check_enumeration,
    "classification": check_classification,
    "prop1": check_prop1,
    "heegaard": check_heegaard,
    "diagrams": check_diagrams,
    "rational_round_trip": check_rational_round_trip,
    "rational_decompositions": check_rational_decompositions,
    "figure14": check_figure14,
    "weight_cone": check_weight_cone,
    "constructions": check_constructions,
}


def run_checks() -> dict[str, bool]:
    results = {}
    for name, check in CHECKS.items():
        try:
            results[name] = bool(check())
        except AcylBoundsError as e:
            _logger.error(f"check {name} raised {e.name}: {e}")
            results[name] = False
    return results


def run_selftest(out: TextIO) -> int:
    results = run_checks()
    for name, passed in results.items():
        out.write(f"check.{name} = {'ok' if passed else 'FAIL'}\n")
    return 0 if all(results.values()) else 1

"""Normal surfaces in standard coordinates.

A vector has 7 entries per tetrahedron: triangles at corners 0..3, then quads of the
three types ``{01|23}``, ``{02|13}``, ``{03|12}``. Surfaces are realised as explicit
cell complexes (points on edges, arcs on faces, discs in tetrahedra) so that components,
orientability, sidedness and Euler characteristic come from the cells themselves.

Stacking conventions, shared with the edge classifier:

* at a corner ``v`` of a face, arcs are stacked outward from ``v``: triangles at ``v``
  first (index 0 nearest ``v``), then quads;
* parallel quads of one type are indexed from the block containing vertex 0.
"""

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from acylbounds.core.errors import (
    LengthMismatch,
    MalformedLine,
    NonOrientableDouble,
    NonPositive,
    NotAdmissible,
    TooLarge,
    ValidationError,
)
from acylbounds.core.triangulation import Triangulation, face_vertices, invert
from acylbounds.core.union_find import UnionFind
from acylbounds.utils.settings import MAX_COORD_CAP, MAX_TETS_CAP

_logger = logging.getLogger(__name__)

QUAD_BLOCKS: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((0, 1), (2, 3)),
    ((0, 2), (1, 3)),
    ((0, 3), (1, 2)),
)

PointKey = tuple[int, int]  # (edge orbit, position from the orbit's low end)
ArcKey = tuple[int, int, int]  # (face pair, corner in the pair's source frame, stack position)
DiscKey = tuple[int, int, int]  # (tet, coordinate 0..6, index in its stack)


def quad_type(a: int, b: int) -> int:
    """Quad type (0..2) having {a, b} as one of its blocks."""
    other = {a, b}
    for q, blocks in enumerate(QUAD_BLOCKS):
        if other in ({*blocks[0]}, {*blocks[1]}):
            return q
    raise ValueError(f"not a vertex pair: {a}, {b}")


@dataclass(frozen=True, order=True)
class NormalVector:
    """Standard normal coordinates, 7 per tetrahedron."""

    coords: tuple[int, ...]

    @classmethod
    def of(cls, values: "NormalVector | Iterable[int]") -> "NormalVector":
        if isinstance(values, NormalVector):
            return values
        return cls(tuple(int(x) for x in values))

    @classmethod
    def zero(cls, tet_count: int) -> "NormalVector":
        return cls((0,) * (7 * tet_count))

    @property
    def tet_count(self) -> int:
        return len(self.coords) // 7

    def triangle(self, tet: int, corner: int) -> int:
        return self.coords[7 * tet + corner]

    def quad(self, tet: int, q: int) -> int:
        return self.coords[7 * tet + 4 + q]

    def quads_in(self, tet: int) -> tuple[int, int, int]:
        return self.coords[7 * tet + 4 : 7 * tet + 7]  # type: ignore[return-value]

    def active_quad(self, tet: int) -> tuple[int | None, int]:
        """(quad type, count) of the one nonzero quad, or (None, 0)."""
        for q, n in enumerate(self.quads_in(tet)):
            if n:
                return q, n
        return None, 0

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "NormalVector") -> "NormalVector":
        if len(other.coords) != len(self.coords):
            raise LengthMismatch("vectors of different length")
        return NormalVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scaled(self, k: int) -> "NormalVector":
        return NormalVector(tuple(k * a for a in self.coords))

    def __str__(self) -> str:
        return format_normal_vector(self)


def format_normal_vector(v: NormalVector) -> str:
    return f"nsv {v.tet_count} " + " ".join(str(x) for x in v.coords)


def parse_normal_vector(text: str) -> NormalVector:
    """Parse ``nsv <t> <7t integers>``."""
    tokens = text.split()
    if len(tokens) < 2 or tokens[0] != "nsv":
        raise MalformedLine(f"expected 'nsv <t> ...', got {text.strip()!r}")
    try:
        values = [int(tok) for tok in tokens[1:]]
    except ValueError:
        raise MalformedLine(f"non-integer entry in {text.strip()!r}") from None
    t, coords = values[0], values[1:]
    if len(coords) != 7 * t:
        raise LengthMismatch(f"expected {7 * t} coordinates for t={t}, got {len(coords)}")
    return NormalVector(tuple(coords))


def _check_length(tri: Triangulation, v: NormalVector):
    if len(v.coords) != 7 * tri.tet_count:
        raise LengthMismatch(
            f"vector has {len(v.coords)} coordinates, triangulation needs {7 * tri.tet_count}"
        )


# --------------------------------------------------------------------------- matching


def matching_row_labels(tri: Triangulation) -> list[tuple[int, int]]:
    """(face pair, source corner) for each row of the matching system."""
    return [(pair.index, v) for pair in tri.face_pairs() for v in face_vertices(pair.source[1])]


def matching_system(tri: Triangulation) -> np.ndarray:
    """Matching equations: one row per face pair and arc type, 7t columns."""
    rows = []
    for pair in tri.face_pairs():
        i, f = pair.source
        j, g = pair.target
        for v in face_vertices(f):
            row = np.zeros(7 * tri.tet_count, dtype=np.int64)
            w = pair.perm[v]
            row[7 * i + v] += 1
            row[7 * i + 4 + quad_type(v, f)] += 1
            row[7 * j + w] -= 1
            row[7 * j + 4 + quad_type(w, g)] -= 1
            rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), 7 * tri.tet_count)


@dataclass
class AdmissibilityReport:
    """Outcome of an admissibility check; truthy when admissible."""

    admissible: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.admissible


def is_admissible(tri: Triangulation, v: NormalVector | Sequence[int]) -> AdmissibilityReport:
    """Nonnegativity, matching equations and the quad condition."""
    v = NormalVector.of(v)
    _check_length(tri, v)
    violations = []

    negative = [k for k, x in enumerate(v.coords) if x < 0]
    if negative:
        violations.append(f"Negative: coordinates {negative}")

    for i in range(tri.tet_count):
        used = [q for q, n in enumerate(v.quads_in(i)) if n]
        if len(used) > 1:
            violations.append(f"QuadCondition: tetrahedron {i} uses quad types {used}")

    residual = matching_system(tri) @ np.array(v.coords, dtype=np.int64)
    labels = matching_row_labels(tri)
    for r in np.flatnonzero(residual):
        pair, corner = labels[r]
        violations.append(f"Matching: face pair {pair}, corner {corner}, residual {residual[r]}")

    return AdmissibilityReport(not violations, violations)


def _require_admissible(tri: Triangulation, v: NormalVector):
    report = is_admissible(tri, v)
    if not report:
        raise NotAdmissible("; ".join(report.violations))


# --------------------------------------------------------------------------- enumeration


def enumerate_vertex_surfaces(
    tri: Triangulation,
    max_coord: int,
    workers: int = 1,
    max_tets: int = MAX_TETS_CAP,
) -> list[NormalVector]:
    """Admissible vectors in the box [0, max_coord] that are not a sum of two nonzero
    admissible vectors, sorted lexicographically.

    The search branches on the quad type used in each tetrahedron (none or one of three)
    and the branches are spread over ``workers`` threads.
    """
    if max_coord < 1:
        raise NonPositive(f"max_coord must be positive, got {max_coord}")
    if max_coord > MAX_COORD_CAP:
        raise TooLarge(f"max_coord {max_coord} exceeds cap {MAX_COORD_CAP}")
    cap = min(max_tets, MAX_TETS_CAP)
    if tri.tet_count > cap:
        raise TooLarge(f"{tri.tet_count} tetrahedra exceeds cap {cap}")

    matrix = matching_system(tri)
    selections = list(product(range(4), repeat=tri.tet_count))
    _logger.info(
        f"Enumerating {len(selections)} quad selections, box {max_coord}, {workers} worker(s)"
    )

    found: set[tuple[int, ...]] = set()
    if workers <= 1:
        for sel in selections:
            found |= _solve_selection(matrix, sel, max_coord)
    else:
        chunks = [selections[k::workers] for k in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(lambda chunk: _solve_chunk(matrix, chunk, max_coord), chunks):
                found |= part

    found.discard((0,) * matrix.shape[1])
    minimal = minimal_vectors(found)
    _logger.info(f"{len(found)} admissible vectors in box, {len(minimal)} irreducible")
    return [NormalVector(c) for c in sorted(minimal)]


def minimal_vectors(vectors: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Componentwise-minimal elements of a set of nonzero vectors."""
    ordered = sorted(set(vectors), key=lambda c: (sum(c), c))
    kept: list[tuple[int, ...]] = []
    stack: np.ndarray | None = None
    for c in ordered:
        arr = np.array(c, dtype=np.int64)
        if stack is not None and bool(np.any(np.all(stack <= arr, axis=1))):
            continue
        kept.append(c)
        stack = arr[None, :] if stack is None else np.vstack([stack, arr])
    return kept


def _solve_chunk(matrix: np.ndarray, chunk: list[tuple[int, ...]], max_coord: int):
    found: set[tuple[int, ...]] = set()
    for sel in chunk:
        found |= _solve_selection(matrix, sel, max_coord)
    return found


def _solve_selection(
    matrix: np.ndarray, selection: tuple[int, ...], max_coord: int
) -> set[tuple[int, ...]]:
    """All box solutions of the matching system supported on one quad selection."""
    columns: list[int] = []
    for i, q in enumerate(selection):
        if q:
            columns.append(7 * i + 3 + q)
        columns.extend(7 * i + k for k in range(4))

    sub = matrix[:, columns]
    n = len(columns)
    # rows are checked (and usually solved) at their last nonzero column
    closing: list[list[int]] = [[] for _ in range(n)]
    for r in range(sub.shape[0]):
        nz = np.flatnonzero(sub[r])
        if len(nz):
            closing[int(nz[-1])].append(r)
    coef = sub.tolist()

    results: set[tuple[int, ...]] = set()
    values = [0] * n
    partial = [0] * sub.shape[0]
    width = matrix.shape[1]

    def candidates(k: int):
        for r in closing[k]:
            c = coef[r][k]
            if c:
                if -partial[r] % c:
                    return ()
                x = -partial[r] // c
                return (x,) if 0 <= x <= max_coord else ()
        return range(max_coord + 1)

    def descend(k: int):
        if k == n:
            full = [0] * width
            for col, x in zip(columns, values):
                full[col] = x
            results.add(tuple(full))
            return
        for x in candidates(k):
            for r in range(len(partial)):
                partial[r] += coef[r][k] * x
            if all(partial[r] == 0 for r in closing[k]):
                values[k] = x
                descend(k + 1)
            for r in range(len(partial)):
                partial[r] -= coef[r][k] * x

    descend(0)
    return results


# --------------------------------------------------------------------------- realisation


def edge_weights(tri: Triangulation, v: NormalVector | Sequence[int]) -> tuple[int, ...]:
    """Number of surface points on each edge orbit."""
    v = NormalVector.of(v)
    _check_length(tri, v)
    weights = []
    for orbit in tri.census().edge_orbits:
        seen = {_tet_edge_weight(v, i, a, b) for i, a, b in orbit}
        if len(seen) != 1:
            raise NotAdmissible(f"inconsistent edge weights {sorted(seen)} on edge orbit")
        weights.append(seen.pop())
    return tuple(weights)


def _tet_edge_weight(v: NormalVector, tet: int, a: int, b: int) -> int:
    q, n = v.active_quad(tet)
    crossing = n if q is not None and q != quad_type(a, b) else 0
    return v.triangle(tet, a) + v.triangle(tet, b) + crossing


def _arc_count(v: NormalVector, tet: int, face: int, corner: int) -> int:
    return v.triangle(tet, corner) + v.quad(tet, quad_type(corner, face))


@dataclass(frozen=True)
class DiscPiece:
    """One normal disc with its boundary in cyclic order.

    ``arcs[k]`` joins ``points[k]`` to ``points[k + 1]``; ``directions[k]`` is +1 when
    that traversal agrees with the arc's reference direction, ``sides[k]`` is +1 when the
    disc's positive side faces the corner the arc cuts off.
    """

    key: DiscKey
    points: tuple[PointKey, ...]
    arcs: tuple[ArcKey, ...]
    directions: tuple[int, ...]
    sides: tuple[int, ...]


@dataclass(frozen=True)
class SurfaceComponent:
    index: int
    discs: tuple[DiscKey, ...]
    points: int
    arcs: int
    euler: int
    orientable: bool
    two_sided: bool

    @property
    def genus(self) -> int | None:
        """Genus of a closed orientable component, else None."""
        if not self.orientable:
            return None
        return (2 - self.euler) // 2

    @property
    def rank_h1(self) -> int:
        return 2 - self.euler if self.orientable else 1 - self.euler


@dataclass(frozen=True)
class SurfaceModel:
    """Explicit cell complex of a realised normal surface."""

    vector: NormalVector
    doubled: bool
    points: tuple[PointKey, ...]
    arcs: tuple[ArcKey, ...]
    discs: tuple[DiscPiece, ...]
    components: tuple[SurfaceComponent, ...]

    @property
    def euler(self) -> int:
        return len(self.points) - len(self.arcs) + len(self.discs)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def orientable(self) -> bool:
        return all(c.orientable for c in self.components)

    @property
    def two_sided(self) -> bool:
        return all(c.two_sided for c in self.components)

    def rank_h1(self) -> int:
        return sum(c.rank_h1 for c in self.components)

    def arc_endpoints(self) -> dict[ArcKey, tuple[PointKey, PointKey]]:
        ends: dict[ArcKey, tuple[PointKey, PointKey]] = {}
        for disc in self.discs:
            k = len(disc.points)
            for n, arc in enumerate(disc.arcs):
                ends.setdefault(arc, (disc.points[n], disc.points[(n + 1) % k]))
        return ends


class _Realiser:
    """Builds the cells of one normal vector."""

    def __init__(self, tri: Triangulation, v: NormalVector):
        self.tri = tri
        self.v = v
        self.frames = tri.edge_frames()
        self.weights = edge_weights(tri, v)

    def point(self, tet: int, x: int, y: int, m: int) -> PointKey:
        """Point on edge xy of ``tet`` at position m counted from x."""
        a, b = min(x, y), max(x, y)
        w = _tet_edge_weight(self.v, tet, a, b)
        pos = m if x == a else w - 1 - m
        orbit, flipped = self.frames[(tet, a, b)]
        return orbit, (w - 1 - pos if flipped else pos)

    def arc(self, tet: int, face: int, corner: int, u1: int, u2: int, pos: int):
        """Global key, reference direction and side sign of a local arc.

        The arc cuts corner ``corner`` of ``face`` and is traversed from edge
        (corner, u1) to edge (corner, u2).
        """
        pair = self.tri.pair_of_slot(tet, face)
        if pair.source == (tet, face):
            return (pair.index, corner, pos), (1 if u1 < u2 else -1)
        back = invert(pair.perm)
        return (pair.index, back[corner], pos), (1 if back[u1] < back[u2] else -1)

    def quad_position(self, tet: int, face: int, corner: int, k: int) -> int:
        _, n = self.v.active_quad(tet)
        return self.v.triangle(tet, corner) + quad_stack_offset(corner, face, k, n)

    def discs(self) -> list[DiscPiece]:
        pieces = []
        for tet in range(self.tri.tet_count):
            for corner in range(4):
                for m in range(self.v.triangle(tet, corner)):
                    pieces.append(self._triangle(tet, corner, m))
            q, n = self.v.active_quad(tet)
            for k in range(n):
                pieces.append(self._quad(tet, q, k))
        return pieces

    def _triangle(self, tet: int, v: int, m: int) -> DiscPiece:
        a, b, c = face_vertices(v)
        ring = (a, b, c)
        points = tuple(self.point(tet, v, u, m) for u in ring)
        arcs, dirs = [], []
        for u1, u2, face in ((a, b, c), (b, c, a), (c, a, b)):
            key, d = self.arc(tet, face, v, u1, u2, m)
            arcs.append(key)
            dirs.append(d)
        return DiscPiece((tet, v, m), points, tuple(arcs), tuple(dirs), (1, 1, 1))

    def _quad(self, tet: int, q: int, k: int) -> DiscPiece:
        (a, b), (c, d) = QUAD_BLOCKS[q]  # a == 0 always
        t = self.v.triangle
        points = (
            self.point(tet, a, c, t(tet, a) + k),
            self.point(tet, b, c, t(tet, b) + k),
            self.point(tet, b, d, t(tet, b) + k),
            self.point(tet, a, d, t(tet, a) + k),
        )
        # (corner, face, from-vertex, to-vertex) for each side of the ring ac-cb-bd-da
        sides_spec = ((c, d, a, b), (b, a, c, d), (d, c, b, a), (a, b, d, c))
        arcs, dirs, sides = [], [], []
        for corner, face, u1, u2 in sides_spec:
            pos = self.quad_position(tet, face, corner, k)
            key, direction = self.arc(tet, face, corner, u1, u2, pos)
            arcs.append(key)
            dirs.append(direction)
            sides.append(1 if 0 in (corner, face) else -1)
        return DiscPiece((tet, 4 + q, k), points, tuple(arcs), tuple(dirs), tuple(sides))


def _realise(tri: Triangulation, v: NormalVector, doubled: bool) -> SurfaceModel:
    realiser = _Realiser(tri, v)
    discs = realiser.discs()

    incidences: dict[ArcKey, list[tuple[int, int, int]]] = {}
    for n, disc in enumerate(discs):
        for arc, d, s in zip(disc.arcs, disc.directions, disc.sides):
            incidences.setdefault(arc, []).append((n, d, s))
    for arc, inc in incidences.items():
        if len(inc) != 2:
            raise ValidationError(f"arc {arc} meets {len(inc)} discs, expected 2")

    uf = UnionFind(len(discs))
    for (n1, _, _), (n2, _, _) in incidences.values():
        uf.union(n1, n2)

    orient = _propagate(len(discs), incidences, lambda d1, s1, d2, s2: -d1 * d2)
    sided = _propagate(len(discs), incidences, lambda d1, s1, d2, s2: s1 * s2)

    components = []
    for index, members in enumerate(uf.groups()):
        member_set = set(members)
        points = {p for n in members for p in discs[n].points}
        arcs = {a for n in members for a in discs[n].arcs}
        euler = len(points) - len(arcs) + len(members)
        components.append(
            SurfaceComponent(
                index=index,
                discs=tuple(discs[n].key for n in members),
                points=len(points),
                arcs=len(arcs),
                euler=euler,
                orientable=not (orient & member_set),
                two_sided=not (sided & member_set),
            )
        )

    return SurfaceModel(
        vector=v,
        doubled=doubled,
        points=tuple(sorted({p for disc in discs for p in disc.points})),
        arcs=tuple(sorted(incidences)),
        discs=tuple(discs),
        components=tuple(components),
    )


def _propagate(count: int, incidences, relation) -> set[int]:
    """Two-colour discs across arcs; return the discs of components with a conflict.

    ``relation(d1, s1, d2, s2)`` gives the required product of the two discs' signs.
    """
    neighbours: list[list[tuple[int, int]]] = [[] for _ in range(count)]
    for (n1, d1, s1), (n2, d2, s2) in incidences.values():
        need = relation(d1, s1, d2, s2)
        neighbours[n1].append((n2, need))
        neighbours[n2].append((n1, need))

    sign: list[int] = [0] * count
    bad: set[int] = set()
    for start in range(count):
        if sign[start]:
            continue
        sign[start] = 1
        members, stack, conflict = [start], [start], False
        while stack:
            n = stack.pop()
            for other, need in neighbours[n]:
                want = sign[n] * need
                if not sign[other]:
                    sign[other] = want
                    members.append(other)
                    stack.append(other)
                elif sign[other] != want:
                    conflict = True
        if conflict:
            bad.update(members)
    return bad


def euler_characteristic(tri: Triangulation, v: NormalVector | Sequence[int]) -> int:
    """Euler characteristic, by corner counting and by explicit cells; both must agree."""
    v = NormalVector.of(v)
    _check_length(tri, v)
    _require_admissible(tri, v)

    points = sum(edge_weights(tri, v))
    arcs = sum(
        _arc_count(v, pair.source[0], pair.source[1], corner)
        for pair in tri.face_pairs()
        for corner in face_vertices(pair.source[1])
    )
    linear = points - arcs + sum(v.coords)

    cells = _realise(tri, v, doubled=False).euler
    if cells != linear:
        raise ValidationError(f"Euler characteristic mismatch: linear {linear}, cells {cells}")
    return linear


def build_surface(
    tri: Triangulation, v: NormalVector | Sequence[int], doubled: bool = False
) -> SurfaceModel:
    """Realise ``v``; with ``doubled`` realise the boundary of its regular neighbourhood."""
    v = NormalVector.of(v)
    _check_length(tri, v)
    _require_admissible(tri, v)

    surface = _realise(tri, v, doubled=False)
    if not doubled:
        return surface
    if not surface.two_sided:
        raise NonOrientableDouble(
            "surface is one-sided; its neighbourhood boundary is not two copies of it"
        )
    double = _realise(tri, v.scaled(2), doubled=True)
    if double.component_count != 2 * surface.component_count or double.euler != 2 * surface.euler:
        raise ValidationError(
            f"doubling gave {double.component_count} components and chi {double.euler}, "
            f"expected {2 * surface.component_count} and {2 * surface.euler}"
        )
    return double


def quad_stack_offset(corner: int, face: int, k: int, count: int) -> int:
    """Offset of the k-th parallel quad within the arc stack at ``corner`` of ``face``."""
    return k if 0 in (corner, face) else count - 1 - k


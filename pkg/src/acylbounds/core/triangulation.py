"""Closed (pseudo)triangulations: parsing, validation and skeleton census.

Face ``f`` of a tetrahedron is the face opposite vertex ``f``. A gluing of face ``f`` of
tetrahedron ``i`` to face ``g`` of tetrahedron ``j`` is a permutation ``p`` of the vertex
labels with ``p[f] == g``: vertex ``k`` of ``i`` is identified with vertex ``p[k]`` of ``j``.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations

from acylbounds.core.errors import (
    CensusMismatch,
    MalformedLine,
    NonInvolutiveGluing,
    ReversedEdge,
    SelfGluedFace,
    UnpairedFace,
)
from acylbounds.core.union_find import KeyedUnionFind

_logger = logging.getLogger(__name__)

Perm = tuple[int, int, int, int]
Slot = tuple[int, int]
TetEdge = tuple[int, int, int]

IDENTITY: Perm = (0, 1, 2, 3)
ALL_PERMS: frozenset[Perm] = frozenset(permutations(range(4)))  # type: ignore[arg-type]
EDGE_PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(4), 2))


def invert(p: Perm) -> Perm:
    inv = [0, 0, 0, 0]
    for k, image in enumerate(p):
        inv[image] = k
    return tuple(inv)  # type: ignore[return-value]


def perm_sign(p: Perm) -> int:
    """+1 for even permutations, -1 for odd."""
    inversions = sum(1 for a in range(4) for b in range(a + 1, 4) if p[a] > p[b])
    return -1 if inversions % 2 else 1


def face_vertices(face: int) -> tuple[int, int, int]:
    return tuple(v for v in range(4) if v != face)  # type: ignore[return-value]


@dataclass(frozen=True)
class Gluing:
    """Target of one face-slot."""

    tet: int
    face: int
    perm: Perm


@dataclass(frozen=True)
class FacePair:
    """One identified pair of face-slots, listed from the lower slot."""

    index: int
    source: Slot
    target: Slot
    perm: Perm


@dataclass(frozen=True)
class SkeletonCensus:
    """Counts of vertex, edge, face and tetrahedron classes."""

    vertices: int
    edges: int
    faces: int
    tetrahedra: int
    edge_orbits: tuple[tuple[TetEdge, ...], ...]
    vertex_orbits: tuple[tuple[Slot, ...], ...]

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces - self.tetrahedra

    @property
    def edge_degrees(self) -> tuple[int, ...]:
        return tuple(len(orbit) for orbit in self.edge_orbits)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.vertices, self.edges, self.faces, self.tetrahedra)


@dataclass(frozen=True)
class Triangulation:
    """A closed triangulation given by its face gluings.

    ``gluings[i][f]`` is where face ``f`` of tetrahedron ``i`` goes. Values are never
    mutated after construction.
    """

    tet_count: int
    gluings: tuple[tuple[Gluing, ...], ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def glued(self, tet: int, face: int) -> Gluing:
        return self.gluings[tet][face]

    def slots(self) -> list[Slot]:
        return [(i, f) for i in range(self.tet_count) for f in range(4)]

    def face_pairs(self) -> tuple[FacePair, ...]:
        """The 2t gluing pairs in slot order."""
        if "face_pairs" not in self._cache:
            pairs = []
            for i, f in self.slots():
                g = self.glued(i, f)
                if (i, f) < (g.tet, g.face):
                    pairs.append(FacePair(len(pairs), (i, f), (g.tet, g.face), g.perm))
            self._cache["face_pairs"] = tuple(pairs)
        return self._cache["face_pairs"]

    def pair_of_slot(self, tet: int, face: int) -> FacePair:
        if "slot_pairs" not in self._cache:
            lookup = {}
            for pair in self.face_pairs():
                lookup[pair.source] = pair
                lookup[pair.target] = pair
            self._cache["slot_pairs"] = lookup
        return self._cache["slot_pairs"][(tet, face)]

    def census(self) -> SkeletonCensus:
        if "census" not in self._cache:
            self._cache["census"] = skeleton_census(self)
        return self._cache["census"]

    def edge_frames(self) -> dict[TetEdge, tuple[int, bool]]:
        """Map every tetrahedron edge (i, a, b), a < b, to (orbit index, reversed).

        ``reversed`` tells whether a->b runs against the orbit representative's
        low->high direction.
        """
        if "edge_frames" not in self._cache:
            self._cache["edge_frames"] = _edge_frames(self)
        return self._cache["edge_frames"]

    def vertex_orbit_of(self) -> dict[Slot, int]:
        if "vertex_index" not in self._cache:
            index = {}
            for n, orbit in enumerate(self.census().vertex_orbits):
                for corner in orbit:
                    index[corner] = n
            self._cache["vertex_index"] = index
        return self._cache["vertex_index"]

    def is_orientable(self) -> bool:
        """Propagate tetrahedron orientations across gluings."""
        sign: dict[int, int] = {0: 1}
        stack = [0]
        while stack:
            i = stack.pop()
            for f in range(4):
                g = self.glued(i, f)
                # a consistent gluing reverses the induced face orientation
                want = -sign[i] * perm_sign(g.perm)
                if g.tet not in sign:
                    sign[g.tet] = want
                    stack.append(g.tet)
                elif sign[g.tet] != want:
                    return False
        return True

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for f in range(4):
                j = self.glued(i, f).tet
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.tet_count


def build_triangulation(
    tet_count: int, pairs: list[tuple[int, int, int, int, Perm]]
) -> Triangulation:
    """Build and validate a triangulation from (i, f, j, g, perm) gluing pairs.

    Each pair may be given from either side; the inverse side is filled in.
    """
    if tet_count < 1:
        raise MalformedLine("tetrahedron count must be positive")
    table: dict[Slot, Gluing] = {}
    for i, f, j, g, perm in pairs:
        _add_gluing(table, tet_count, i, f, j, g, perm, line_no=None)
    return _finish(tet_count, table)


def parse_triangulation(text: str) -> Triangulation:
    """Parse a gluing-format document into a validated Triangulation."""
    tet_count: int | None = None
    table: dict[Slot, Gluing] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tet_count is None:
            if len(tokens) != 2 or tokens[0] != "tets":
                raise MalformedLine("expected 'tets <t>'", line_no)
            tet_count = _parse_int(tokens[1], line_no)
            if tet_count < 1:
                raise MalformedLine("tetrahedron count must be positive", line_no)
            continue
        if len(tokens) != 6 or tokens[0] != "glue":
            raise MalformedLine(f"expected 'glue <i> <f> <j> <g> <perm>', got {line!r}", line_no)
        i, f, j, g = (_parse_int(tok, line_no) for tok in tokens[1:5])
        perm = _parse_perm(tokens[5], line_no)
        _add_gluing(table, tet_count, i, f, j, g, perm, line_no)

    if tet_count is None:
        raise MalformedLine("empty document: missing 'tets <t>'")
    tri = _finish(tet_count, table)
    _logger.debug(f"Parsed triangulation with {tet_count} tetrahedra")
    return tri


def format_triangulation(tri: Triangulation) -> str:
    """Serialise to the gluing format, each pair once from its lower slot."""
    lines = [f"tets {tri.tet_count}"]
    for pair in tri.face_pairs():
        (i, f), (j, g) = pair.source, pair.target
        lines.append(f"glue {i} {f} {j} {g} {''.join(str(k) for k in pair.perm)}")
    return "\n".join(lines) + "\n"


def skeleton_census(tri: Triangulation) -> SkeletonCensus:
    """Count vertex, edge, face and tetrahedron classes under the gluings."""
    vertices = KeyedUnionFind([(i, v) for i in range(tri.tet_count) for v in range(4)])
    edges = KeyedUnionFind([(i, a, b) for i in range(tri.tet_count) for a, b in EDGE_PAIRS])

    for i, f in tri.slots():
        g = tri.glued(i, f)
        for v in face_vertices(f):
            vertices.union((i, v), (g.tet, g.perm[v]))
        for a, b in combinations(face_vertices(f), 2):
            pa, pb = g.perm[a], g.perm[b]
            edges.union((i, a, b), (g.tet, min(pa, pb), max(pa, pb)))

    vertex_orbits = tuple(tuple(sorted(grp)) for grp in vertices.groups())
    edge_orbits = tuple(tuple(sorted(grp)) for grp in edges.groups())
    return SkeletonCensus(
        vertices=len(vertex_orbits),
        edges=len(edge_orbits),
        faces=len(tri.face_pairs()),
        tetrahedra=tri.tet_count,
        edge_orbits=edge_orbits,
        vertex_orbits=vertex_orbits,
    )


def vertex_link_vector(tri: Triangulation, vertex: int) -> tuple[int, ...]:
    """Normal coordinates of the link of a vertex orbit (one triangle per corner)."""
    orbits = tri.census().vertex_orbits
    if not 0 <= vertex < len(orbits):
        raise IndexError(f"vertex orbit {vertex} out of range (0..{len(orbits) - 1})")
    coords = [0] * (7 * tri.tet_count)
    for i, v in orbits[vertex]:
        coords[7 * i + v] += 1
    return tuple(coords)


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedLine(f"not an integer: {token!r}", line_no) from None


def _parse_perm(token: str, line_no: int) -> Perm:
    if len(token) != 4 or not token.isdigit():
        raise MalformedLine(f"bad permutation {token!r}", line_no)
    perm = tuple(int(c) for c in token)
    if perm not in ALL_PERMS:
        raise MalformedLine(f"{token!r} is not a permutation of 0123", line_no)
    return perm  # type: ignore[return-value]


def _add_gluing(
    table: dict[Slot, Gluing],
    tet_count: int,
    i: int,
    f: int,
    j: int,
    g: int,
    perm: Perm,
    line_no: int | None,
):
    if not (0 <= i < tet_count and 0 <= j < tet_count):
        raise MalformedLine(f"tetrahedron index out of range 0..{tet_count - 1}", line_no)
    if not (0 <= f < 4 and 0 <= g < 4):
        raise MalformedLine("face index out of range 0..3", line_no)
    if perm[f] != g:
        raise MalformedLine(f"permutation must send face {f} to face {g}", line_no)
    if (i, f) == (j, g):
        raise SelfGluedFace(f"face {f} of tetrahedron {i} glued to itself", line_no)

    forward = Gluing(j, g, perm)
    backward = Gluing(i, f, invert(perm))
    existing_fwd = table.get((i, f))
    existing_bwd = table.get((j, g))
    if existing_fwd is None and existing_bwd is None:
        table[(i, f)] = forward
        table[(j, g)] = backward
        return
    if existing_fwd == forward and existing_bwd == backward:
        _logger.debug(f"Duplicate listing of gluing ({i},{f}) <-> ({j},{g}) ignored")
        return
    raise NonInvolutiveGluing(
        f"slot ({i},{f}) or ({j},{g}) is already glued elsewhere", line_no
    )


def _finish(tet_count: int, table: dict[Slot, Gluing]) -> Triangulation:
    missing = [(i, f) for i in range(tet_count) for f in range(4) if (i, f) not in table]
    if missing:
        listed = ", ".join(f"({i},{f})" for i, f in missing)
        raise UnpairedFace(f"face-slots never glued: {listed}")

    tri = Triangulation(
        tet_count=tet_count,
        gluings=tuple(tuple(table[(i, f)] for f in range(4)) for i in range(tet_count)),
    )
    census = tri.census()
    if census.euler != 0:
        raise CensusMismatch(
            f"V - E + F - T = {census.vertices} - {census.edges} + {census.faces}"
            f" - {census.tetrahedra} = {census.euler}, expected 0"
        )
    tri.edge_frames()  # raises ReversedEdge
    return tri


def _edge_frames(tri: Triangulation) -> dict[TetEdge, tuple[int, bool]]:
    frames: dict[TetEdge, tuple[int, bool]] = {}
    for n, orbit in enumerate(tri.census().edge_orbits):
        rep = orbit[0]
        frames[rep] = (n, False)
        stack = [rep]
        while stack:
            i, a, b = stack.pop()
            flipped = frames[(i, a, b)][1]
            for f in range(4):
                if f in (a, b):
                    continue
                g = tri.glued(i, f)
                pa, pb = g.perm[a], g.perm[b]
                image = (g.tet, min(pa, pb), max(pa, pb))
                state = (n, flipped ^ (pa > pb))
                seen = frames.get(image)
                if seen is None:
                    frames[image] = state
                    stack.append(image)
                elif seen != state:
                    raise ReversedEdge(f"edge {image} is identified with itself reversed")
    return frames

"""Knot and link diagrams in PD notation, tangle decompositions and their genus bounds.

A crossing ``X(a,b,c,d)`` lists its four edge labels counterclockwise starting at the
incoming under-strand, so slots 0 and 2 are under and slots 1 and 3 are over.
"""

import logging
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import floor

from acylbounds.core.acyl_bounds import heegaard_bound
from acylbounds.core.errors import (
    BadArity,
    BadBoundary,
    Disconnected,
    LabelNotTwice,
    MalformedLine,
    NonPlanar,
    NonPositive,
    NotAPartition,
    TypeClaimFailed,
)
from acylbounds.core.union_find import KeyedUnionFind

_logger = logging.getLogger(__name__)

Crossing = tuple[int, int, int, int]
Side = tuple[int, int]  # (crossing index, slot)
TwistVector = tuple[int, ...]

_TERM = re.compile(r"X\s*[\(\[]([^\)\]]*)[\)\]]")

CROSSING_HYPOTHESES = (
    "surface is closed, embedded and acylindrical in the link complement",
    "bound applies to the given connected diagram",
)
RATIONAL_HYPOTHESES = (
    "surface is closed, embedded and acylindrical in the link complement",
    "every tangle is rational in the given projection",
)
ALTERNATING_HYPOTHESES = (
    "knot is prime (user-supplied, not computed)",
    "tangles alternate in the given projection (isotopy to an alternating projection not searched)",
    "surface is closed, embedded and acylindrical in the knot complement",
)
TWO_ALTERNATING_HYPOTHESES = (
    "diagram is a knot decomposed into exactly two alternating tangles",
    "alternation checked on the given projection only",
)
GEODESIC_HYPOTHESES = (
    "surfaces are closed, embedded, disjoint and totally geodesic",
    "ambient manifold or link complement is hyperbolic (not checked)",
)


class Infinity:
    """The fraction of the vertical (infinity) tangle."""

    _instance: "Infinity | None" = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    __str__ = __repr__


INFINITY = Infinity()


@dataclass(frozen=True)
class Unrecognized:
    """Corner twist-stripping got stuck; says nothing about rationality."""

    reason: str


@dataclass(frozen=True)
class KnotDiagram:
    """A connected 4-valent planar diagram."""

    crossings: tuple[Crossing, ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * self.n

    @cached_property
    def occurrences(self) -> dict[int, tuple[Side, ...]]:
        occ: dict[int, list[Side]] = {}
        for c, crossing in enumerate(self.crossings):
            for slot, label in enumerate(crossing):
                occ.setdefault(label, []).append((c, slot))
        return {label: tuple(sides) for label, sides in occ.items()}

    def other_side(self, side: Side) -> Side:
        c, slot = side
        first, second = self.occurrences[self.crossings[c][slot]]
        return second if first == side else first

    @cached_property
    def faces(self) -> tuple[tuple[Side, ...], ...]:
        """Faces as cycles of edge-sides, by always turning to the next slot."""
        seen: set[Side] = set()
        faces = []
        for c in range(self.n):
            for slot in range(4):
                if (c, slot) in seen:
                    continue
                face = []
                side = (c, slot)
                while side not in seen:
                    seen.add(side)
                    face.append(side)
                    nc, nslot = self.other_side(side)
                    side = (nc, (nslot + 1) % 4)
                faces.append(tuple(face))
        return tuple(faces)

    def face_sizes(self) -> list[int]:
        return sorted(len(face) for face in self.faces)

    def component_count(self) -> int:
        return sum(1 for strand in _strands(self, range(self.n)) if strand.closed)

    def is_knot(self) -> bool:
        return self.component_count() == 1


def make_diagram(crossings: list[Crossing] | tuple[Crossing, ...]) -> KnotDiagram:
    """Validate crossings and wrap them as a diagram."""
    if not crossings:
        raise BadArity("a diagram needs at least one crossing")
    diagram = KnotDiagram(tuple(tuple(c) for c in crossings))  # type: ignore[misc]

    wrong = sorted(label for label, sides in diagram.occurrences.items() if len(sides) != 2)
    if wrong:
        raise LabelNotTwice(f"labels not occurring exactly twice: {wrong}")

    uf = KeyedUnionFind(list(range(diagram.n)))
    for first, second in diagram.occurrences.values():
        uf.union(first[0], second[0])
    if uf.num_components != 1:
        raise Disconnected(f"diagram splits into {uf.num_components} pieces")

    if len(diagram.faces) != diagram.n + 2:
        raise NonPlanar(f"{len(diagram.faces)} faces, expected n + 2 = {diagram.n + 2}")
    return diagram


def parse_pd(text: str) -> KnotDiagram:
    """Parse whitespace-separated ``X(a,b,c,d)`` terms."""
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    crossings = []
    cursor = 0
    for match in _TERM.finditer(text):
        if text[cursor : match.start()].strip(" \t\r\n,;"):
            raise MalformedLine(f"unexpected text {text[cursor:match.start()].strip()!r}")
        cursor = match.end()
        parts = [p.strip() for p in match.group(1).split(",") if p.strip()]
        if len(parts) != 4:
            raise BadArity(f"{match.group(0)} has {len(parts)} labels, expected 4")
        try:
            crossings.append(tuple(int(p) for p in parts))
        except ValueError:
            raise MalformedLine(f"non-integer label in {match.group(0)}") from None
    if text[cursor:].strip(" \t\r\n,;"):
        raise MalformedLine(f"unexpected text {text[cursor:].strip()!r}")
    diagram = make_diagram(crossings)
    _logger.debug(f"Parsed diagram with {diagram.n} crossings")
    return diagram


def format_pd(diagram: KnotDiagram) -> str:
    return " ".join(f"X({a},{b},{c},{d})" for a, b, c, d in diagram.crossings)


# --------------------------------------------------------------------------- strands


@dataclass
class Strand:
    """Over/under passages along one strand, in walking order."""

    passages: list[bool] = field(default_factory=list)  # True = over
    closed: bool = False

    def alternates(self) -> bool:
        seq = self.passages + self.passages[:1] if self.closed else self.passages
        return all(a != b for a, b in zip(seq, seq[1:]))


def _strands(diagram: KnotDiagram, subset) -> list[Strand]:
    inside = set(subset)
    used: set[Side] = set()

    def walk(entry: Side) -> Strand:
        strand = Strand()
        side = entry
        while True:
            c, slot = side
            exit_side = (c, (slot + 2) % 4)
            used.add(side)
            used.add(exit_side)
            strand.passages.append(slot % 2 == 1)
            nxt = diagram.other_side(exit_side)
            if nxt[0] not in inside:
                return strand
            if nxt in used:
                strand.closed = True
                return strand
            side = nxt

    strands = []
    # open strands start where a label leaves the sub-diagram
    for c in sorted(inside):
        for slot in range(4):
            side = (c, slot)
            if side not in used and diagram.other_side(side)[0] not in inside:
                strands.append(walk(side))
    for c in sorted(inside):
        for slot in range(4):
            if (c, slot) not in used:
                strands.append(walk((c, slot)))
    return strands


def is_alternating(diagram: KnotDiagram, subset=None) -> bool:
    """Whether every strand of the (sub-)diagram alternates over and under."""
    crossings = range(diagram.n) if subset is None else subset
    return all(s.alternates() for s in _strands(diagram, crossings))


# --------------------------------------------------------------------------- bounds


@dataclass(frozen=True)
class CrossingBound:
    n: int
    bound: int
    face_budgets: tuple[tuple[int, int], ...]  # (face size i, budget 3i - 6)
    total_budget: int
    hypotheses: tuple[str, ...] = CROSSING_HYPOTHESES


def crossing_bound(diagram: KnotDiagram) -> CrossingBound:
    """Genus bound 3n/2 - 3 with the per-face bad-edge budgets behind it."""
    n = diagram.n
    budgets = tuple((size, 3 * size - 6) for size in diagram.face_sizes())
    total = sum(b for _, b in budgets)
    if total != 6 * n - 12:
        raise NonPlanar(f"face budgets sum to {total}, expected 6n - 12 = {6 * n - 12}")
    return CrossingBound(n=n, bound=floor(Fraction(3 * n, 2) - 3), face_budgets=budgets,
                         total_budget=total)


# --------------------------------------------------------------------------- tangles


@dataclass(frozen=True)
class Tangle:
    """Crossings plus boundary labels in NW, NE, SW, SE order."""

    crossings: tuple[Crossing, ...]
    boundary: tuple[int, int, int, int]


class _Labels:
    def __init__(self, start: int = 1):
        self._next = start

    def new(self) -> int:
        label = self._next
        self._next += 1
        return label


def build_tangle(vector: TwistVector | list[int], start_label: int = 1) -> Tangle:
    """Standard diagram of the rational tangle with Conway vector ``vector``.

    Entries are applied first to last, the last one as horizontal twists and the
    types alternating backwards. An odd-length (or empty) vector starts from the
    0-tangle, an even-length one from the infinity tangle.
    """
    labels = _Labels(start_label)
    k = len(vector)
    x, y = labels.new(), labels.new()
    if k % 2 == 1 or k == 0:
        nw, ne, sw, se = x, x, y, y
    else:
        nw, ne, sw, se = x, y, x, y

    crossings: list[Crossing] = []
    for idx, amount in enumerate(vector):
        horizontal = (k - 1 - idx) % 2 == 0
        for _ in range(abs(amount)):
            if horizontal:
                ul, ll = ne, se
                ur, lr = labels.new(), labels.new()
                ne, se = ur, lr
            else:
                ul, ur = sw, se
                ll, lr = labels.new(), labels.new()
                sw, se = ll, lr
            crossings.append(_twist(ul, ur, ll, lr, positive=amount > 0))
    return Tangle(tuple(crossings), (nw, ne, sw, se))


def _twist(ul: int, ur: int, ll: int, lr: int, positive: bool) -> Crossing:
    # positive: the "/" strand is over
    return (ul, ll, lr, ur) if positive else (ll, lr, ur, ul)


def check_tangle_boundary(tangle: Tangle):
    """Raise BadBoundary unless the boundary accounts for exactly four strand ends."""
    if len(tangle.boundary) != 4:
        raise BadBoundary(f"{len(tangle.boundary)} boundary labels, expected 4")
    counts: dict[int, int] = {}
    for crossing in tangle.crossings:
        for label in crossing:
            counts[label] = counts.get(label, 0) + 1
    listed: dict[int, int] = {}
    for label in tangle.boundary:
        listed[label] = listed.get(label, 0) + 1
    ends = [label for label, cnt in counts.items() if cnt == 1]
    if any(cnt > 2 for cnt in counts.values()):
        raise BadBoundary("a label occurs more than twice inside the tangle")
    for label in ends:
        if listed.get(label) != 1:
            raise BadBoundary(f"strand end {label} is not listed on the boundary exactly once")
    for label, cnt in listed.items():
        inside = counts.get(label, 0)
        if inside + cnt != 2:
            raise BadBoundary(f"boundary label {label} does not end a strand")


def rational_reduce(tangle: Tangle) -> TwistVector | Unrecognized:
    """Recover a Conway vector by stripping twists at the SE corner.

    A crossing is stripped as a horizontal twist when NE and SE are consecutive ends
    of it, otherwise as a vertical twist when SW and SE are. Reduction succeeds when
    only the 0- or infinity-tangle is left.
    """
    check_tangle_boundary(tangle)
    remaining = dict(enumerate(tangle.crossings))
    nw, ne, sw, se = tangle.boundary
    stripped: list[tuple[bool, int]] = []  # (horizontal, sign), last built first

    def locate(label: int) -> Side | None:
        for c, crossing in remaining.items():
            for slot, lab in enumerate(crossing):
                if lab == label:
                    return c, slot
        return None

    while remaining:
        at_se = locate(se)
        if at_se is None:
            return Unrecognized("SE end runs straight to another boundary point")
        c, s = at_se
        crossing = remaining[c]
        sign = 1 if s % 2 == 0 else -1
        if crossing[(s + 1) % 4] == ne and ne != se:
            ne, se = crossing[(s + 2) % 4], crossing[(s + 3) % 4]
            stripped.append((True, sign))
        elif crossing[(s - 1) % 4] == sw and sw != se:
            sw, se = crossing[(s + 2) % 4], crossing[(s + 1) % 4]
            stripped.append((False, sign))
        else:
            return Unrecognized(f"crossing {crossing} is not a corner twist")
        del remaining[c]

    if nw == ne and sw == se and nw != sw:
        start_horizontal = True
    elif nw == sw and ne == se and nw != ne:
        start_horizontal = False
    else:
        return Unrecognized("reduction did not end at the 0- or infinity-tangle")

    groups: list[list] = []
    for horizontal, sign in reversed(stripped):
        if groups and groups[-1][0] == horizontal:
            groups[-1][1] += sign
        else:
            groups.append([horizontal, sign])

    if not groups:
        return () if start_horizontal else (0, 0)
    if groups[0][0] != start_horizontal:
        groups.insert(0, [start_horizontal, 0])
    if not groups[-1][0]:
        groups.append([True, 0])
    return tuple(amount for _, amount in groups)


def tangle_fraction(vector: TwistVector | list[int]) -> Fraction | Infinity:
    """Conway fraction a_k + 1/(a_{k-1} + ... + 1/a_1); the empty vector is 0."""
    if not vector:
        return Fraction(0)
    value: Fraction | Infinity = INFINITY
    for a in vector:
        if value is INFINITY:
            value = Fraction(a)
        elif value == 0:
            value = INFINITY
        else:
            value = a + 1 / value
    return value


# --------------------------------------------------------------------------- generators


def braid_closure(word: list[int], strands: int) -> KnotDiagram:
    """Closure of a braid word; +i is sigma_i with the left strand under, -i the inverse."""
    if strands < 2:
        raise BadArity("a braid closure needs at least two strands")
    labels = _Labels()
    current = [labels.new() for _ in range(strands)]
    initial = list(current)
    crossings: list[list[int]] = []
    for letter in word:
        i = abs(letter) - 1
        if not 0 <= i < strands - 1:
            raise BadArity(f"generator {letter} out of range for {strands} strands")
        l_in, r_in = current[i], current[i + 1]
        l_out, r_out = labels.new(), labels.new()
        if letter > 0:
            crossings.append([l_in, r_in, r_out, l_out])
        else:
            crossings.append([r_in, r_out, l_out, l_in])
        current[i], current[i + 1] = l_out, r_out

    closing = dict(zip(current, initial))
    crossings = [[closing.get(label, label) for label in c] for c in crossings]
    return make_diagram(_renumber(crossings))


def random_diagram(rng: random.Random, max_strands: int = 4, max_extra: int = 8) -> KnotDiagram:
    """Random connected diagram: a braid closure using every generator."""
    strands = rng.randint(2, max_strands)
    extra = rng.randint(0, max_extra)
    word = list(range(1, strands)) + [rng.randint(1, strands - 1) for _ in range(extra)]
    rng.shuffle(word)
    word = [g if rng.random() < 0.5 else -g for g in word]
    return braid_closure(word, strands)


@dataclass(frozen=True)
class TangleSpec:
    """One tangle of a decomposition: crossing indices, boundary and claimed type."""

    name: str
    claimed: str
    crossings: tuple[int, ...]
    boundary: tuple[int, ...]


def tangle_sum(vectors: list[TwistVector]) -> tuple[KnotDiagram, list[TangleSpec]]:
    """Numerator closure of rational tangles placed side by side.

    NE of each tangle joins NW of the next and SE joins SW, cyclically.
    """
    tangles = []
    start = 1
    for vector in vectors:
        tangle = build_tangle(vector, start_label=start)
        tangles.append(tangle)
        start = 1 + max([start, *tangle.boundary, *(lab for c in tangle.crossings for lab in c)])

    uf = KeyedUnionFind()
    for idx, tangle in enumerate(tangles):
        nxt = tangles[(idx + 1) % len(tangles)]
        uf.union(tangle.boundary[1], nxt.boundary[0])
        uf.union(tangle.boundary[3], nxt.boundary[2])

    def canon(label: int) -> int:
        return uf.find(label) if label in uf else -label

    raw, specs, offset = [], [], 0
    for idx, (vector, tangle) in enumerate(zip(vectors, tangles)):
        raw.extend([canon(lab) for lab in c] for c in tangle.crossings)
        specs.append((f"T{idx + 1}", tuple(range(offset, offset + len(tangle.crossings))),
                      tuple(canon(lab) for lab in tangle.boundary)))
        offset += len(tangle.crossings)

    mapping = _renumber_map(raw)
    diagram = make_diagram([[mapping[lab] for lab in c] for c in raw])
    result = [
        TangleSpec(name, "rational", idxs, tuple(mapping.get(lab, lab) for lab in bnd))
        for name, idxs, bnd in specs
    ]
    return diagram, result


def _renumber_map(crossings) -> dict[int, int]:
    mapping: dict[int, int] = {}
    for c in crossings:
        for label in c:
            if label not in mapping:
                mapping[label] = len(mapping) + 1
    return mapping


def _renumber(crossings) -> list[Crossing]:
    mapping = _renumber_map(crossings)
    return [tuple(mapping[label] for label in c) for c in crossings]  # type: ignore[misc]


# --------------------------------------------------------------------------- decompositions


def parse_decomposition(text: str) -> list[TangleSpec]:
    """Parse ``tangle <id> type <t> crossings <idx...> boundary <e1> <e2> <e3> <e4>`` lines."""
    specs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            if tokens[0] != "tangle" or tokens[2] != "type" or tokens[4] != "crossings":
                raise ValueError
            claimed = tokens[3]
            b = tokens.index("boundary")
            crossings = tuple(int(tok) for tok in tokens[5:b])
            boundary = tuple(int(tok) for tok in tokens[b + 1 :])
        except (IndexError, ValueError):
            raise MalformedLine(
                "expected 'tangle <id> type <type> crossings <idx...> boundary <e1..e4>'",
                line_no,
            ) from None
        if claimed not in ("rational", "alternating", "other"):
            raise MalformedLine(f"unknown tangle type {claimed!r}", line_no)
        if len(boundary) != 4:
            raise BadBoundary(f"line {line_no}: {len(boundary)} boundary labels, expected 4")
        specs.append(TangleSpec(tokens[1], claimed, crossings, boundary))
    return specs


def format_decomposition(specs: list[TangleSpec]) -> str:
    lines = []
    for spec in specs:
        crossings = " ".join(str(c) for c in spec.crossings)
        boundary = " ".join(str(b) for b in spec.boundary)
        lines.append(
            f"tangle {spec.name} type {spec.claimed} crossings {crossings} boundary {boundary}"
        )
    return "\n".join(lines) + "\n"


@dataclass
class VerifiedTangle:
    spec: TangleSpec
    verified: str  # rational | alternating | other
    vector: TwistVector | None = None
    fraction: Fraction | Infinity | None = None


@dataclass
class DecompositionReport:
    tangles: list[VerifiedTangle]
    rational_count: int
    s0_arcs: int
    is_knot: bool
    prime: bool
    rational_bound: int | None = None
    rational_sharper: Fraction | None = None
    alternating_bound: int | None = None
    two_alternating_verdict: str | None = None
    geodesic_bound: int | None = None
    hypotheses: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def rational_sharper_floor(self) -> int | None:
        return None if self.rational_sharper is None else floor(self.rational_sharper)


TWO_ALTERNATING_VERDICT = "no meridionally incompressible closed surfaces"


def decomposition_bounds(
    diagram: KnotDiagram, specs: list[TangleSpec], prime: bool = False
) -> DecompositionReport:
    """Apply the rational and alternating tangle bounds to a checked decomposition."""
    seen: dict[int, str] = {}
    for spec in specs:
        for c in spec.crossings:
            if not 0 <= c < diagram.n:
                raise NotAPartition(f"tangle {spec.name}: crossing {c} does not exist")
            if c in seen:
                raise NotAPartition(f"crossing {c} is in both {seen[c]} and {spec.name}")
            seen[c] = spec.name
    missing = sorted(set(range(diagram.n)) - set(seen))
    if missing:
        raise NotAPartition(f"crossings {missing} belong to no tangle")

    tangles: list[VerifiedTangle] = []
    warnings: list[str] = []
    for spec in specs:
        crossings = tuple(diagram.crossings[c] for c in spec.crossings)
        tangle = Tangle(crossings, spec.boundary)  # type: ignore[arg-type]
        check_tangle_boundary(tangle)
        if spec.claimed == "rational":
            result = rational_reduce(tangle)
            if isinstance(result, Unrecognized):
                warnings.append(
                    f"tangle {spec.name} claimed rational but not recognised ({result.reason}); "
                    "treated as other"
                )
                tangles.append(VerifiedTangle(spec, "other"))
            else:
                tangles.append(VerifiedTangle(spec, "rational", result, tangle_fraction(result)))
        elif spec.claimed == "alternating":
            if not is_alternating(diagram, spec.crossings):
                raise TypeClaimFailed(f"tangle {spec.name} does not alternate in this projection")
            tangles.append(VerifiedTangle(spec, "alternating"))
        else:
            tangles.append(VerifiedTangle(spec, "other"))

    owner = {c: spec.name for spec in specs for c in spec.crossings}
    s0_arcs = sum(1 for (a, _), (b, _) in diagram.occurrences.values() if owner[a] != owner[b])

    rational = sum(1 for t in tangles if t.verified == "rational")
    knot = diagram.is_knot()
    report = DecompositionReport(tangles, rational, s0_arcs, knot, prime, warnings=warnings)
    all_rational = bool(tangles) and rational == len(tangles)
    all_alternating = bool(tangles) and all(
        t.verified in ("rational", "alternating") for t in tangles
    )

    if all_rational:
        report.rational_bound = 2 * rational - 4
        report.rational_sharper = Fraction(4 * rational - 7, 2)
        report.geodesic_bound = floor(Fraction(5 * rational, 2) - 3)
        report.hypotheses.extend(RATIONAL_HYPOTHESES)
    if all_alternating and knot and prime:
        report.alternating_bound = 2 * rational - 4
        report.geodesic_bound = floor(Fraction(5 * rational, 2) - 3)
        report.hypotheses.extend(h for h in ALTERNATING_HYPOTHESES if h not in report.hypotheses)
    elif all_alternating and prime and not knot:
        warnings.append("prime-knot bound skipped: diagram is a link")
    two_alternating = len(specs) == 2 and all(
        is_alternating(diagram, spec.crossings) for spec in specs
    )
    if two_alternating and knot:
        report.two_alternating_verdict = TWO_ALTERNATING_VERDICT
        report.hypotheses.extend(TWO_ALTERNATING_HYPOTHESES)
    if report.geodesic_bound is not None:
        report.hypotheses.extend(h for h in GEODESIC_HYPOTHESES if h not in report.hypotheses)
    for label, value in (
        ("rational", report.rational_bound),
        ("alternating", report.alternating_bound),
        ("geodesic", report.geodesic_bound),
    ):
        if value is not None and value < 0:
            warnings.append(
                f"{label} bound {value} is negative with {rational} rational tangles; "
                "it is vacuous and only says no such surface exists"
            )
    if not report.hypotheses:
        warnings.append("no bound applies to this decomposition")
    return report


@dataclass(frozen=True)
class GeodesicRow:
    key: str
    formula: str
    value: Fraction

    @property
    def bound(self) -> int:
        return floor(self.value)


def geodesic_bounds(
    t: int | None = None,
    heegaard: tuple[int, list[int]] | None = None,
    c: int | None = None,
    r: int | None = None,
    r_alt: int | None = None,
) -> list[GeodesicRow]:
    """Total-genus bounds for disjoint totally geodesic families, one row per input."""
    rows = []
    for key, value in (("t", t), ("c", c), ("r", r), ("r_alt", r_alt)):
        if value is not None and value < 1:
            raise NonPositive(f"{key} must be positive, got {value}")
    if t is not None:
        rows.append(GeodesicRow("tetrahedra", "3t/2", Fraction(3 * t, 2)))
    if heegaard is not None:
        g, n_i = heegaard
        rows.append(GeodesicRow("heegaard", "n - 3g/2", heegaard_bound(g, n_i).bound))
    if c is not None:
        rows.append(GeodesicRow("crossings", "3c/2 - 3", Fraction(3 * c, 2) - 3))
    if r is not None:
        rows.append(GeodesicRow("rational_tangles", "5r/2 - 3", Fraction(5 * r, 2) - 3))
    if r_alt is not None:
        rows.append(GeodesicRow("alternating_prime_knot", "5r/2 - 3", Fraction(5 * r_alt, 2) - 3))
    return rows

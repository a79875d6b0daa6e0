"""Abstract branched surfaces: sectors glued along branch curves, weights and carried surfaces.

A branch curve joins three boundary circles: the ``merged`` side, where the sheets run
together, and the ``lower``/``upper`` sides it splits into. Weights are consistent when
``w(merged) = w(lower) + w(upper)`` at every curve.
"""

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import sympy

from acylbounds.core.errors import (
    BelowRange,
    DanglingCircle,
    InconsistentWeights,
    LengthMismatch,
    MalformedLine,
    SlotReuse,
    TooLarge,
    ValidationError,
)
from acylbounds.core.union_find import KeyedUnionFind

_logger = logging.getLogger(__name__)

MAX_SECTORS = 16

CARRY_HYPOTHESES = (
    "sectors are orientable and glued orientation-compatibly along branch curves",
    "incompressibility of the carried surface is not checked",
)

CircleRef = tuple[str, int]  # (sector id, 1-based circle index)
Ray = tuple[int, ...]

_SECTOR = re.compile(r"^sector\s+(\S+)\s+chi\s+(-?\d+)\s+circles\s+(\d+)$")
_BRANCH = re.compile(
    r"^branch\s+(\S+)\s+merged\s+(\S+):(\d+)\s+lower\s+(\S+):(\d+)"
    r"\s+upper\s+(\S+):(\d+)\s+order\s+(lu|ul)$"
)


@dataclass(frozen=True)
class Sector:
    id: str
    euler: int
    circles: int


@dataclass(frozen=True)
class BranchCurve:
    id: str
    merged: CircleRef
    lower: CircleRef
    upper: CircleRef
    order: str = "lu"  # "ul" reverses the upper sheets along the curve

    @property
    def slots(self) -> tuple[CircleRef, CircleRef, CircleRef]:
        return self.merged, self.lower, self.upper


@dataclass(frozen=True)
class BranchedSpec:
    sectors: tuple[Sector, ...]
    curves: tuple[BranchCurve, ...]

    @property
    def sector_ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.sectors)

    def index(self, sector_id: str) -> int:
        return self.sector_ids.index(sector_id)


def parse_branched_spec(text: str) -> BranchedSpec:
    """Read ``sector`` lines followed by ``branch`` lines."""
    sectors: list[Sector] = []
    curves: list[BranchCurve] = []
    used: dict[CircleRef, str] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _SECTOR.match(line):
            if curves:
                raise MalformedLine("sector lines must precede branch lines", line_no)
            if any(s.id == m.group(1) for s in sectors):
                raise MalformedLine(f"duplicate sector {m.group(1)!r}", line_no)
            sectors.append(Sector(m.group(1), int(m.group(2)), int(m.group(3))))
            continue
        m = _BRANCH.match(line)
        if m is None:
            raise MalformedLine(f"cannot parse {line!r}", line_no)
        refs = [(m.group(k), int(m.group(k + 1))) for k in (2, 4, 6)]
        known = {s.id: s for s in sectors}
        for ref in refs:
            sector = known.get(ref[0])
            if sector is None:
                raise MalformedLine(f"unknown sector {ref[0]!r}", line_no)
            if not 1 <= ref[1] <= sector.circles:
                raise MalformedLine(
                    f"sector {ref[0]!r} has no circle {ref[1]}", line_no
                )
            if ref in used:
                raise SlotReuse(f"circle {ref[0]}:{ref[1]} already used by {used[ref]}", line_no)
            used[ref] = m.group(1)
        curves.append(BranchCurve(m.group(1), refs[0], refs[1], refs[2], m.group(8)))

    dangling = [
        f"{s.id}:{k}" for s in sectors for k in range(1, s.circles + 1) if (s.id, k) not in used
    ]
    if dangling:
        raise DanglingCircle(f"boundary circles not on any branch curve: {', '.join(dangling)}")
    return BranchedSpec(tuple(sectors), tuple(curves))


def format_branched_spec(spec: BranchedSpec) -> str:
    lines = [f"sector {s.id} chi {s.euler} circles {s.circles}" for s in spec.sectors]
    for c in spec.curves:
        (ms, mc), (ls, lc), (us, uc) = c.slots
        lines.append(
            f"branch {c.id} merged {ms}:{mc} lower {ls}:{lc} upper {us}:{uc} order {c.order}"
        )
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------- cone


def branch_matrix(spec: BranchedSpec) -> list[list[int]]:
    """One row per curve: w(merged) - w(lower) - w(upper)."""
    rows = []
    for curve in spec.curves:
        row = [0] * len(spec.sectors)
        row[spec.index(curve.merged[0])] += 1
        row[spec.index(curve.lower[0])] -= 1
        row[spec.index(curve.upper[0])] -= 1
        rows.append(row)
    return rows


def _rank(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def _primitive(vec) -> Ray:
    g = 0
    for x in vec:
        g = gcd(g, int(x))
    return tuple(int(x) // g for x in vec) if g else tuple(int(x) for x in vec)


def _extreme(ray: Ray, equations: list[list[int]], width: int) -> bool:
    """A ray of {x >= 0, Ax = 0} is extreme when its active constraints have rank width - 1."""
    active = list(equations)
    for i, x in enumerate(ray):
        if x == 0:
            unit = [0] * width
            unit[i] = 1
            active.append(unit)
    return _rank(active) == width - 1


@dataclass(frozen=True)
class WeightCone:
    matrix: tuple[tuple[int, ...], ...]
    rays: tuple[Ray, ...]
    dimension: int

    def coefficients(self, weights) -> tuple[Fraction, ...] | None:
        """Ray coefficients of a weight vector, or None outside the span of the rays."""
        if not self.rays:
            return () if not any(weights) else None
        columns = sympy.Matrix([list(ray) for ray in self.rays]).T
        if columns.rank() != len(self.rays):
            raise ValidationError("rays are linearly dependent; coefficients are not unique")
        try:
            solution, _ = columns.gauss_jordan_solve(sympy.Matrix(list(weights)))
        except ValueError:
            return None
        return tuple(Fraction(int(x.p), int(x.q)) for x in solution)

    def contains(self, weights) -> bool:
        coefficients = self.coefficients(weights)
        return coefficients is not None and all(c >= 0 for c in coefficients)


def weight_cone(spec: BranchedSpec, max_sectors: int = MAX_SECTORS) -> WeightCone:
    """Extreme rays of the nonnegative solutions of the branch equations.

    Double description in exact integers: start from the orthant's unit rays and cut
    by one equation at a time, combining each positive ray with each negative one.
    """
    width = len(spec.sectors)
    if width > min(max_sectors, MAX_SECTORS):
        raise TooLarge(f"{width} sectors exceeds the limit of {min(max_sectors, MAX_SECTORS)}")
    matrix = branch_matrix(spec)

    rays: list[Ray] = [tuple(int(i == j) for j in range(width)) for i in range(width)]
    applied: list[list[int]] = []
    for row in matrix:
        applied.append(row)
        dots = [sum(a * x for a, x in zip(row, r)) for r in rays]
        zero = [r for r, d in zip(rays, dots) if d == 0]
        pos = [(r, d) for r, d in zip(rays, dots) if d > 0]
        neg = [(r, d) for r, d in zip(rays, dots) if d < 0]
        combined = set(zero)
        for p, dp in pos:
            for q, dq in neg:
                ray = _primitive([dp * y - dq * x for x, y in zip(p, q)])
                if any(ray):
                    combined.add(ray)
        rays = sorted(r for r in combined if _extreme(r, applied, width))
        _logger.debug(f"After curve {len(applied)}: {len(rays)} rays")

    dimension = width - _rank(matrix)
    return WeightCone(tuple(tuple(r) for r in matrix), tuple(rays), dimension)


def solve_general(spec: BranchedSpec) -> list[tuple[Fraction, ...]]:
    """Rational basis of the solution space of the branch equations."""
    width = len(spec.sectors)
    matrix = branch_matrix(spec)
    if not matrix:
        return [tuple(Fraction(int(i == j)) for j in range(width)) for i in range(width)]
    basis = sympy.Matrix(matrix).nullspace()
    return [tuple(Fraction(int(x.p), int(x.q)) for x in vec) for vec in basis]


def specialize(spec: BranchedSpec, fixed: dict[str, int]) -> tuple[Fraction, ...]:
    """The solution of the branch equations that takes the given weights on named sectors.

    Raises InconsistentWeights unless exactly one solution matches.
    """
    unknown = [s for s in fixed if s not in spec.sector_ids]
    if unknown:
        raise InconsistentWeights(f"no sectors named {unknown}")
    if not fixed:
        raise InconsistentWeights("no sector weights given")
    basis = [
        [sympy.Rational(x.numerator, x.denominator) for x in vec] for vec in solve_general(spec)
    ]
    if not basis:
        raise InconsistentWeights("the branch equations only have the zero solution")
    rows = sympy.Matrix([[vec[spec.index(s)] for vec in basis] for s in fixed])
    target = sympy.Matrix([fixed[s] for s in fixed])
    try:
        coefficients, free = rows.gauss_jordan_solve(target)
    except ValueError:
        raise InconsistentWeights(f"no solution takes the weights {fixed}") from None
    if free.shape[0]:
        raise InconsistentWeights(f"weights {fixed} leave {free.shape[0]} degrees of freedom")
    solution = sympy.zeros(1, len(spec.sectors))
    for c, vec in zip(coefficients, basis):
        solution += c * sympy.Matrix([vec])
    return tuple(Fraction(int(x.p), int(x.q)) for x in solution)


def satisfies_equations(spec: BranchedSpec, weights: list[int] | tuple[int, ...]) -> bool:
    return all(sum(a * w for a, w in zip(row, weights)) == 0 for row in branch_matrix(spec))


# --------------------------------------------------------------------------- carried surfaces


@dataclass
class CarriedSurface:
    weights: tuple[int, ...]
    components: int
    euler: int
    component_euler: list[int] = field(default_factory=list)
    trace: list[tuple[str, tuple[str, int], tuple[str, int]]] = field(default_factory=list)

    @property
    def connected(self) -> bool:
        return self.components == 1

    @property
    def component_genera(self) -> list[int | None]:
        return [None if chi % 2 else (2 - chi) // 2 for chi in self.component_euler]

    @property
    def genus(self) -> int | None:
        """Genus of a connected carried surface; sectors and gluings are taken orientable."""
        if not self.connected or self.euler % 2:
            return None
        return (2 - self.euler) // 2


def _as_weights(spec: BranchedSpec, w) -> tuple[int, ...]:
    if isinstance(w, dict):
        missing = [s for s in spec.sector_ids if s not in w]
        if missing:
            raise LengthMismatch(f"no weight for sectors {missing}")
        weights = tuple(int(w[s]) for s in spec.sector_ids)
    else:
        weights = tuple(int(x) for x in w)
    if len(weights) != len(spec.sectors):
        raise LengthMismatch(f"{len(weights)} weights for {len(spec.sectors)} sectors")
    return weights


def parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError:
        raise MalformedLine(f"weights must be comma-separated integers: {text!r}") from None


def sheet_pairs(curve: BranchCurve, weights: dict[str, int]):
    """Sheet matchings along one branch curve, merged copy against split copy."""
    merged_id, lower_id, upper_id = curve.merged[0], curve.lower[0], curve.upper[0]
    low = weights[lower_id]
    upper = list(range(1, weights[upper_id] + 1))
    if curve.order == "ul":
        upper.reverse()
    for k in range(1, low + 1):
        yield (merged_id, k), (lower_id, k)
    for offset, k in enumerate(upper, start=low + 1):
        yield (merged_id, offset), (upper_id, k)


def carried_surface(spec: BranchedSpec, w) -> CarriedSurface:
    """Glue w(sector) parallel copies of each sector along the branch curves."""
    weights = _as_weights(spec, w)
    negative = [s for s, x in zip(spec.sector_ids, weights) if x < 0]
    if negative:
        raise InconsistentWeights(f"negative weights on {negative}")
    by_id = dict(zip(spec.sector_ids, weights))
    for curve in spec.curves:
        lhs = by_id[curve.merged[0]]
        rhs = by_id[curve.lower[0]] + by_id[curve.upper[0]]
        if lhs != rhs:
            raise InconsistentWeights(f"curve {curve.id}: {lhs} != {rhs}")

    uf = KeyedUnionFind([(s, k) for s in spec.sector_ids for k in range(1, by_id[s] + 1)])
    trace = []
    for curve in spec.curves:
        for a, b in sheet_pairs(curve, by_id):
            uf.union(a, b)
            trace.append((curve.id, a, b))

    chi = {s.id: s.euler for s in spec.sectors}
    component_euler = [sum(chi[s] for s, _ in group) for group in uf.groups()]
    euler = sum(chi[s] * x for s, x in by_id.items())
    surface = CarriedSurface(weights, uf.num_components, euler, component_euler, trace)
    _logger.debug(f"Carried surface: {surface.components} components, chi {euler}")
    return surface


def sheet_trace(spec: BranchedSpec, w) -> int:
    """Count components by walking sheets breadth-first over explicit adjacency lists."""
    weights = _as_weights(spec, w)
    by_id = dict(zip(spec.sector_ids, weights))
    adjacency: dict[tuple[str, int], list[tuple[str, int]]] = {
        (s, k): [] for s in spec.sector_ids for k in range(1, by_id[s] + 1)
    }
    for curve in spec.curves:
        merged = [(curve.merged[0], k) for k in range(1, by_id[curve.merged[0]] + 1)]
        lower = [(curve.lower[0], k) for k in range(1, by_id[curve.lower[0]] + 1)]
        upper = [(curve.upper[0], k) for k in range(1, by_id[curve.upper[0]] + 1)]
        if curve.order == "ul":
            upper = upper[::-1]
        for a, b in zip(merged, lower + upper):
            adjacency[a].append(b)
            adjacency[b].append(a)

    seen: set[tuple[str, int]] = set()
    components = 0
    for start in adjacency:
        if start in seen:
            continue
        components += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            for nxt in adjacency[queue.popleft()]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return components


def figure14_weights(n: int) -> tuple[int, ...]:
    if n < 3:
        raise BelowRange(f"the family needs n >= 3, got {n}")
    return (1, 2 * n - 1, 2 * n, 2 * n - 2, n, n - 2)


def figure14_family(
    n: int, spec: BranchedSpec | None = None
) -> tuple[tuple[int, ...], CarriedSurface]:
    """Weights (1, 2n-1, 2n, 2n-2, n, n-2) on the bundled complex; a connected genus-3n surface."""
    weights = figure14_weights(n)
    if spec is None:
        from acylbounds.core.fixtures import get_fixture_library

        spec = get_fixture_library().branched("fig14")
    if not satisfies_equations(spec, weights):
        raise InconsistentWeights(f"family weights {weights} violate the branch equations")
    surface = carried_surface(spec, weights)
    if not surface.connected:
        raise InconsistentWeights(f"n={n}: carried surface has {surface.components} components")
    if surface.genus != 3 * n:
        raise InconsistentWeights(f"n={n}: genus {surface.genus}, expected {3 * n}")
    return weights, surface

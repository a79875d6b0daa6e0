"""The chained-loop graph family and the tunnel-number bound for (b, g)-presentations."""

import logging
from dataclasses import dataclass
from enum import Enum

from acylbounds.core.errors import BelowRange, NonPositiveBridge, ValidationError
from acylbounds.core.union_find import UnionFind

_logger = logging.getLogger(__name__)

UNVERIFIED = "UNVERIFIED"
TUNNEL_HYPOTHESES = ("the knot admits the declared (b, g)-presentation (not checked)",)

CONDITIONS = (
    "each loop curve is knotted in its product layer (not inside a 3-ball there)",
    "no loop curve is isotopic into a boundary torus of its layer",
    "no loop curve is a cable of a knot in its layer",
    "no annulus in the base torus has a product neighbourhood containing the whole graph",
    "no Mobius band in an end region is disjoint from the end loop curve",
)


class EdgeKind(Enum):
    LOOP = "loop"
    CONNECTOR = "connector"


@dataclass(frozen=True)
class GraphEdge:
    u: int
    v: int
    kind: EdgeKind
    name: str


@dataclass(frozen=True)
class GammaGraph:
    """n loops chained by n - 1 connector arcs.

    Loop i is drawn through its junction vertices (one for the end loops, two for the
    inner ones); connector j joins loop j to loop j + 1.
    """

    n: int
    vertices: tuple[int, ...]
    edges: tuple[GraphEdge, ...]

    def degree(self, vertex: int) -> int:
        return sum((e.u == vertex) + (e.v == vertex) for e in self.edges)

    def is_trivalent(self) -> bool:
        return all(self.degree(v) == 3 for v in self.vertices)

    def components(self) -> int:
        uf = UnionFind(len(self.vertices))
        for e in self.edges:
            uf.union(e.u, e.v)
        return uf.num_components

    def cycle_rank(self) -> int:
        """First Betti number E - V + components."""
        return len(self.edges) - len(self.vertices) + self.components()


def gamma_graph(n: int) -> GammaGraph:
    if n < 2:
        raise BelowRange(f"the graph needs at least two loops, got n={n}")
    edges: list[GraphEdge] = []
    vertex = 0
    # junctions[i] = vertices on loop i, left then right
    junctions: list[list[int]] = []
    for i in range(n):
        count = 1 if i in (0, n - 1) else 2
        junctions.append(list(range(vertex, vertex + count)))
        vertex += count
    for i, loop in enumerate(junctions):
        name = f"gamma_{i + 1}"
        if len(loop) == 1:
            edges.append(GraphEdge(loop[0], loop[0], EdgeKind.LOOP, name))
        else:
            edges.append(GraphEdge(loop[0], loop[1], EdgeKind.LOOP, name))
            edges.append(GraphEdge(loop[1], loop[0], EdgeKind.LOOP, name))
    for j in range(n - 1):
        edges.append(
            GraphEdge(junctions[j][-1], junctions[j + 1][0], EdgeKind.CONNECTOR, f"alpha_{j + 1}")
        )
    return GammaGraph(n, tuple(range(vertex)), tuple(edges))


@dataclass(frozen=True)
class GammaFamily:
    graph: GammaGraph
    betti: int
    handlebody_genus: int
    checklist: tuple[tuple[str, str], ...]


def gamma_family(n: int) -> GammaFamily:
    """Abstract graph, its Betti number and the genus of its neighbourhood boundary."""
    graph = gamma_graph(n)
    betti = graph.cycle_rank()
    if betti != n:
        raise ValidationError(f"cycle rank {betti} differs from loop count {n}")
    if not graph.is_trivalent():
        raise ValidationError("junction vertices are not all trivalent")
    checklist = tuple((condition, UNVERIFIED) for condition in CONDITIONS)
    _logger.debug(f"Gamma({n}): {len(graph.vertices)} vertices, {len(graph.edges)} edges")
    return GammaFamily(graph, betti, betti, checklist)


@dataclass(frozen=True)
class PresentationRecord:
    """A declared (b, g)-presentation: b maxima and b minima on each side."""

    b: int
    g: int
    maxima: int | None = None
    minima: int | None = None

    def __post_init__(self):
        if self.b < 1:
            raise NonPositiveBridge(f"bridge number must be at least 1, got {self.b}")
        if self.g < 0:
            raise NonPositiveBridge(f"surface genus must be nonnegative, got {self.g}")
        for label, value in (("maxima", self.maxima), ("minima", self.minima)):
            if value is not None and value != self.b:
                raise ValidationError(f"{label} count {value} differs from b = {self.b}")

    @property
    def heegaard_genus_bound(self) -> int:
        return self.b + self.g


def tunnel_bound(b: int, g: int) -> int:
    """Tunnel number bound b + g - 1."""
    record = PresentationRecord(b, g)
    return record.heegaard_genus_bound - 1

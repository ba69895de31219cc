"""Safe-set checks for connected graphs and component projections on K_m x K_n."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, UnsupportedInputError
from .graph import Graph, VertexSet, _own, component_masks
from .product import ProductGraph


@dataclass(frozen=True)
class SafetyReport:
    """Outcome of :func:`verify`.

    ``violations`` lists every pair ``(c, d)`` of indices into
    ``components_of_S`` and ``components_of_rest`` such that the two
    components are joined by an edge and the first is strictly smaller.
    """

    is_safe: bool
    is_connected_safe: bool
    components_of_S: tuple[VertexSet, ...]
    components_of_rest: tuple[VertexSet, ...]
    violations: tuple[tuple[int, int], ...]

    def to_json(self, product: ProductGraph | None = None) -> dict:
        def enc(vs: VertexSet):
            return [list(c) for c in product.coords(vs)] if product else vs.sorted()

        return {
            "is_safe": self.is_safe,
            "is_connected_safe": self.is_connected_safe,
            "components_of_S": [enc(c) for c in self.components_of_S],
            "components_of_rest": [enc(d) for d in self.components_of_rest],
            "violations": [list(v) for v in self.violations],
        }


def verify(g: Graph, s: VertexSet) -> SafetyReport:
    """Decide whether ``s`` is a (connected) safe set of the connected graph ``g``."""
    _own(g, s)
    if not s:
        raise InvalidInputError("the candidate set must be nonempty")
    if len(component_masks(g.adj, (1 << g.order) - 1)) != 1:
        raise UnsupportedInputError("safe sets are only defined for connected graphs")

    inside = component_masks(g.adj, s.mask)
    outside = component_masks(g.adj, s.complement().mask)
    violations = []
    for ci, c in enumerate(inside):
        reach = g.neighbourhood(c)
        size = c.bit_count()
        for di, d in enumerate(outside):
            if reach & d and size < d.bit_count():
                violations.append((ci, di))

    is_safe = not violations
    return SafetyReport(
        is_safe=is_safe,
        is_connected_safe=is_safe and len(inside) == 1,
        components_of_S=tuple(VertexSet(c, g.order) for c in inside),
        components_of_rest=tuple(VertexSet(d, g.order) for d in outside),
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class ComponentProjection:
    """Row and column shadows of the components of G - S.

    Entry ``t`` of ``pi1``/``pi2`` (0-based) belongs to component ``t + 1`` in
    the usual numbering; the row and column labels themselves are 1-based.
    """

    pi1: tuple[frozenset[int], ...]
    pi2: tuple[frozenset[int], ...]
    components: tuple[VertexSet, ...]

    @property
    def k(self) -> int:
        return len(self.components)

    def row_total(self) -> int:
        return sum(len(r) for r in self.pi1)

    def col_total(self) -> int:
        return sum(len(c) for c in self.pi2)


def component_projection(p: ProductGraph, s: VertexSet) -> ComponentProjection:
    """Project each component of ``p - s`` onto its rows and columns.

    Components are numbered by their topmost row, then leftmost column. For a
    vertex cut the row sets are pairwise disjoint, so this is a total order
    and the component holding the smallest occupied cell comes first.
    """
    _own(p.graph, s)
    rest = s.complement()
    if not rest:
        raise InvalidInputError("S covers every vertex; there are no components to project")
    projected = []
    for c in component_masks(p.graph.adj, rest.mask):
        cells = p.coords(VertexSet(c, p.order))
        rows = frozenset(i for i, _ in cells)
        cols = frozenset(j for _, j in cells)
        projected.append((min(rows), min(cols), rows, cols, VertexSet(c, p.order)))
    projected.sort(key=lambda t: (t[0], t[1]))
    return ComponentProjection(
        pi1=tuple(t[2] for t in projected),
        pi2=tuple(t[3] for t in projected),
        components=tuple(t[4] for t in projected),
    )


def is_vertex_cut(g: Graph, s: VertexSet) -> bool:
    _own(g, s)
    return len(component_masks(g.adj, s.complement().mask)) >= 2


def check_lemma24(p: ProductGraph, s: VertexSet) -> bool:
    """Whether the vertex cut ``s`` meets a sufficient condition for ``p[s]`` to be connected.

    The condition: the components of ``p - s`` leave some row or some column
    unused, or there are at least three of them.
    """
    proj = component_projection(p, s)
    if proj.k < 2:
        raise InvalidInputError("S is not a vertex cut of the product")
    return proj.row_total() < p.m or proj.col_total() < p.n or proj.k >= 3

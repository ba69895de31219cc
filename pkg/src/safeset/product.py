"""Cartesian products of graphs, with 1-based (row, column) coordinates for K_m x K_n."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import InvalidInputError
from .graph import Graph, VertexSet, iter_bits

Coord = tuple[int, int]


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product; vertex ``(a, b)`` becomes flat index ``a * |g2| + b``.

    ``(a1, b1)`` and ``(a2, b2)`` are adjacent iff they agree in one
    coordinate and are adjacent in the other factor.
    """
    n2 = g2.order
    adj = []
    for a in range(g1.order):
        for b in range(n2):
            nbrs = g2.adj[b] << (a * n2)
            for a2 in iter_bits(g1.adj[a]):
                nbrs |= 1 << (a2 * n2 + b)
            adj.append(nbrs)
    return Graph(g1.order * n2, adj)


@dataclass(frozen=True)
class ProductGraph:
    """K_m x K_n. Row ``i`` is a copy of K_n, column ``j`` a copy of K_m."""

    m: int
    n: int
    graph: Graph = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.m * self.n

    def coord_to_index(self, c: Coord) -> int:
        i, j = c
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise InvalidInputError(f"coordinate {(i, j)} outside [1,{self.m}]x[1,{self.n}]")
        return (i - 1) * self.n + (j - 1)

    def index_to_coord(self, v: int) -> Coord:
        if not 0 <= v < self.order:
            raise InvalidInputError(f"vertex index {v} out of range for order {self.order}")
        i, j = divmod(v, self.n)
        return i + 1, j + 1

    def vertex_set(self, coords: Iterable[Coord]) -> VertexSet:
        mask = 0
        for c in coords:
            try:
                i, j = c
            except (TypeError, ValueError):
                raise InvalidInputError(f"malformed coordinate {c!r}") from None
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j)):
                raise InvalidInputError(f"malformed coordinate {c!r}")
            mask |= 1 << self.coord_to_index((i, j))
        return VertexSet(mask, self.order)

    def block(self, rows: Iterable[int], cols: Iterable[int]) -> VertexSet:
        """The set ``rows x cols`` (1-based)."""
        cols = list(cols)
        return self.vertex_set((i, j) for i in rows for j in cols)

    def coords(self, s: VertexSet) -> list[Coord]:
        return [self.index_to_coord(v) for v in s]

    def row_mask(self, i: int) -> int:
        return ((1 << self.n) - 1) << ((i - 1) * self.n)

    def col_mask(self, j: int) -> int:
        return sum(1 << ((i * self.n) + j - 1) for i in range(self.m))


@lru_cache(maxsize=64)
def build_product(m: int, n: int) -> ProductGraph:
    """K_m x K_n with row-major flat indices ``(i-1)*n + (j-1)``."""
    for x in (m, n):
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise InvalidInputError(f"factor orders must be positive integers, got {(m, n)}")
    row = (1 << n) - 1
    col = sum(1 << (i * n) for i in range(m))
    adj = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            adj.append(((row << (i * n)) | (col << j)) & ~(1 << v))
    return ProductGraph(m, n, Graph(m * n, adj))

"""Finite simple undirected graphs stored as per-vertex adjacency bitmasks.

Vertex ``v`` is bit ``1 << v``. A :class:`VertexSet` is an integer mask tagged
with the order of the graph it belongs to, so unions, differences and
membership tests are plain integer operations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidInputError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset of ``range(order)``."""

    mask: int
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise InvalidInputError(f"negative order {self.order}")
        if self.mask < 0 or self.mask >> self.order:
            raise InvalidInputError(
                f"vertex set mask {self.mask:#x} has members outside 0..{self.order - 1}"
            )

    @classmethod
    def of(cls, order: int, members: Iterable[int]) -> VertexSet:
        mask = 0
        for v in members:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < order:
                raise InvalidInputError(f"vertex {v!r} out of range for order {order}")
            mask |= 1 << v
        return cls(mask, order)

    @classmethod
    def full(cls, order: int) -> VertexSet:
        return cls((1 << order) - 1, order)

    @classmethod
    def empty(cls, order: int) -> VertexSet:
        return cls(0, order)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(iter_bits(self.mask))

    def sorted(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.order and bool(self.mask >> v & 1)

    def _check(self, other: VertexSet) -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.order != self.order:
            raise InvalidInputError(
                f"vertex sets belong to graphs of different order ({self.order} vs {other.order})"
            )

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.mask | other.mask, self.order)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.mask & other.mask, self.order)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.mask & ~other.mask, self.order)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.order) - 1) & ~self.mask, self.order)

    def isdisjoint(self, other: VertexSet) -> bool:
        self._check(other)
        return not self.mask & other.mask

    def issubset(self, other: VertexSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def min(self) -> int:
        if not self.mask:
            raise InvalidInputError("min() of an empty vertex set")
        return (self.mask & -self.mask).bit_length() - 1

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()}, order={self.order})"


class Graph:
    """A simple undirected graph on vertices ``0..order-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``. Instances are treated as
    immutable once built.
    """

    __slots__ = ("order", "adj")

    def __init__(self, order: int, adj: Iterable[int]):
        adj = tuple(adj)
        if order < 1:
            raise InvalidInputError(f"graph order must be >= 1, got {order}")
        if len(adj) != order:
            raise InvalidInputError(f"expected {order} adjacency masks, got {len(adj)}")
        for v, nbrs in enumerate(adj):
            if nbrs < 0 or nbrs >> order:
                raise InvalidInputError(f"vertex {v} has a neighbour outside 0..{order - 1}")
            if nbrs >> v & 1:
                raise InvalidInputError(f"self-loop at vertex {v}")
            for u in iter_bits(nbrs):
                if not adj[u] >> v & 1:
                    raise InvalidInputError(f"adjacency not symmetric for edge {v}-{u}")
        self.order = order
        self.adj = adj

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Iterable[int]]) -> Graph:
        """Build from an edge list. Self-loops and repeated edges are rejected."""
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise InvalidInputError(f"graph order must be a positive integer, got {order!r}")
        adj = [0] * order
        for edge in edges:
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise InvalidInputError(f"malformed edge {edge!r}") from None
            for x in (u, v):
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < order:
                    raise InvalidInputError(f"edge endpoint {x!r} out of range for order {order}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise InvalidInputError(f"duplicate edge {u}-{v}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, adj)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, (full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((v, v + 1) for v in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise InvalidInputError(f"a simple cycle needs at least 3 vertices, got {n}")
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """The star K_{1,leaves}; vertex 0 is the centre."""
        return cls.from_edges(leaves + 1, ((0, v) for v in range(1, leaves + 1)))

    @classmethod
    def from_json(cls, data: dict | str) -> Graph:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "order" not in data or "edges" not in data:
            raise InvalidInputError('graph JSON must be an object with "order" and "edges"')
        if not isinstance(data["edges"], list):
            raise InvalidInputError('"edges" must be a list')
        return cls.from_edges(data["order"], data["edges"])

    def to_json(self) -> dict:
        return {"order": self.order, "edges": [list(e) for e in self.edges()]}

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def size(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.order)

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.order, members)

    def neighbourhood(self, mask: int) -> int:
        """Union of the neighbourhoods of the vertices in ``mask``."""
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.order == other.order and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size()})"


def _own(g: Graph, s: VertexSet) -> None:
    if not isinstance(s, VertexSet):
        raise TypeError(f"expected VertexSet, got {type(s).__name__}")
    if s.order != g.order:
        raise InvalidInputError(
            f"vertex set of order {s.order} does not belong to a graph of order {g.order}"
        )


def component_masks(adj: tuple[int, ...], within: int) -> list[int]:
    """Flood-fill components of the subgraph induced by ``within``.

    Components come out ordered by their smallest vertex.
    """
    comps = []
    rest = within
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph, within: VertexSet) -> list[VertexSet]:
    """Connected components of ``g[within]``, sorted by smallest member."""
    _own(g, within)
    return [VertexSet(c, g.order) for c in component_masks(g.adj, within.mask)]


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    """True iff ``g[within]`` has exactly one component. The empty set is not connected."""
    if within is None:
        within = g.vertices()
    _own(g, within)
    if not within.mask:
        return False
    comps = component_masks(g.adj, within.mask)
    return len(comps) == 1


def has_edge_between(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    _own(g, a)
    _own(g, b)
    if a.mask & b.mask:
        raise InvalidInputError("has_edge_between needs disjoint vertex sets")
    return bool(g.neighbourhood(a.mask) & b.mask)

"""Explicit minimum connected safe sets of K_m x K_n."""

from __future__ import annotations

from dataclasses import dataclass

from .alpha import alpha, ceil_half, safe_number
from .errors import InternalInvariantError, InvalidInputError, UnsupportedInputError
from .graph import VertexSet
from .product import Coord, ProductGraph, build_product
from .verify import is_vertex_cut, verify

RECIPES = ("trivial-m1", "row-m2", "two-block-plus-one", "two-block-minus-nu", "half-cut")


@dataclass(frozen=True)
class ConstructionResult:
    product: ProductGraph
    set: VertexSet
    recipe: str

    @property
    def size(self) -> int:
        return len(self.set)

    @property
    def vertices(self) -> list[Coord]:
        return self.product.coords(self.set)

    def to_json(self) -> dict:
        return {
            "m": self.product.m,
            "n": self.product.n,
            "size": self.size,
            "recipe": self.recipe,
            "vertices": [list(c) for c in self.vertices],
        }


def _checked(p: ProductGraph, s: VertexSet, recipe: str, expected: int) -> ConstructionResult:
    if len(s) != expected:
        raise InternalInvariantError(f"{recipe} on ({p.m},{p.n}) built {len(s)} vertices, expected {expected}")
    if not verify(p.graph, s).is_connected_safe:
        raise InternalInvariantError(f"{recipe} on ({p.m},{p.n}) is not a connected safe set")
    return ConstructionResult(p, s, recipe)


def _column_major_prefix(rows: int, count: int) -> list[Coord]:
    """First ``count`` cells of ``[rows] x [*]`` taken column by column from (1, 1)."""
    q, r = divmod(count, rows)
    cells = [(i, j) for j in range(1, q + 1) for i in range(1, rows + 1)]
    cells += [(i, q + 1) for i in range(1, r + 1)]
    return cells


def construct_min(m: int, n: int) -> ConstructionResult:
    """A connected safe set of K_m x K_n of minimum size, for ``1 <= m <= n``.

    For m >= 3 the set is built from the optimal split: keep the two diagonal
    blocks out of S, put every off-diagonal cell in S, and move just enough
    cells of the larger block into S to cap its remainder.
    """
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (m, n)):
        raise InvalidInputError(f"m and n must be integers, got {(m, n)!r}")
    if m < 1 or n < m:
        raise InvalidInputError(f"construct_min needs 1 <= m <= n, got ({m},{n})")
    p = build_product(m, n)
    target = safe_number(m, n)

    if m == 1:
        return _checked(p, p.vertex_set((1, j) for j in range(1, ceil_half(n) + 1)), "trivial-m1", target)
    if m == 2:
        return _checked(p, p.vertex_set((1, j) for j in range(1, n + 1)), "row-m2", target)

    res = alpha(m, n)
    part = res.argmin
    if res.nu2 >= 1:
        part = part.swapped()
    nu1, nu2 = part.nu()
    if nu2 >= 1:
        raise InternalInvariantError(f"both blocks of {part} exceed the separator")

    d1 = p.block(range(1, part.m1 + 1), range(1, part.n1 + 1))
    d2 = p.block(range(part.m1 + 1, m + 1), range(part.n1 + 1, n + 1))
    off_diagonal = (d1 | d2).complement()
    if nu1 <= 0:
        s = off_diagonal | p.vertex_set([(1, 1)])
        recipe = "two-block-plus-one"
    else:
        s = off_diagonal | p.vertex_set(_column_major_prefix(part.m1, nu1))
        recipe = "two-block-minus-nu"
    return _checked(p, s, recipe, res.value)


def construct_half_cut(m: int, n: int) -> ConstructionResult:
    """A connected safe set of size ``ceil((mn-1)/2)`` that is also a vertex cut.

    G - S is the single cell (1, 1) plus ``floor((mn-1)/2)`` cells packed from
    the bottom row upward, avoiding column 1.
    """
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (m, n)):
        raise InvalidInputError(f"m and n must be integers, got {(m, n)!r}")
    if m < 3 or n < m or (m, n) == (3, 3):
        raise UnsupportedInputError(f"half-cut construction needs n >= m >= 3 and (m,n) != (3,3), got ({m},{n})")
    p = build_product(m, n)
    half = (m * n - 1) // 2
    q, r = divmod(half, n - 1)
    big = [(m - i, j) for i in range(q) for j in range(2, n + 1)]
    big += [(m - q, j) for j in range(n - r + 1, n + 1)]
    rest = p.vertex_set(big) | p.vertex_set([(1, 1)])
    result = _checked(p, rest.complement(), "half-cut", ceil_half(m * n - 1))
    if not is_vertex_cut(p.graph, result.set):
        raise InternalInvariantError(f"half-cut set on ({m},{n}) does not disconnect the graph")
    return result

"""Brute-force safe numbers of small connected graphs.

Subsets are scanned by increasing size and, within a size, in lexicographic
order, so the witness returned is the lexicographically least minimum set.
The safety test here is a self-contained bitmask routine and deliberately does
not call into :mod:`safeset.verify`; witnesses are re-verified through it
afterwards.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .errors import InternalInvariantError, ResourceLimitError, UnsupportedInputError
from .graph import Graph, VertexSet
from .verify import verify

DEFAULT_CAP = 20
CAP_ENV = "SAFESET_ORACLE_CAP"


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


def _pieces(adj: tuple[int, ...], mask: int) -> list[tuple[int, int]]:
    """(component mask, neighbourhood mask) for each component of the induced subgraph."""
    out = []
    while mask:
        seed = mask & -mask
        comp = seed
        reach = 0
        stack = [seed.bit_length() - 1]
        while stack:
            v = stack.pop()
            nb = adj[v]
            reach |= nb
            new = nb & mask & ~comp
            comp |= new
            while new:
                low = new & -new
                stack.append(low.bit_length() - 1)
                new ^= low
        out.append((comp, reach))
        mask &= ~comp
    return out


def _is_safe(adj: tuple[int, ...], full: int, s: int, connected: bool) -> bool:
    inside = _pieces(adj, s)
    if connected and len(inside) != 1:
        return False
    outside = [(d, d.bit_count()) for d, _ in _pieces(adj, full & ~s)]
    for c, reach in inside:
        size = c.bit_count()
        for d, dsize in outside:
            if dsize > size and reach & d:
                return False
    return True


@dataclass(frozen=True)
class OracleResult:
    s_value: int
    cs_value: int
    s_witness: VertexSet
    cs_witness: VertexSet
    subsets_examined: int

    def to_json(self) -> dict:
        return {
            "s": self.s_value,
            "cs": self.cs_value,
            "s_witness": self.s_witness.sorted(),
            "cs_witness": self.cs_witness.sorted(),
            "subsets_examined": self.subsets_examined,
        }


def _search(g: Graph, require_connected: bool, cap: int | None) -> tuple[int, VertexSet, int]:
    cap = default_cap() if cap is None else cap
    if g.order > cap:
        raise ResourceLimitError(f"graph has {g.order} vertices, oracle cap is {cap}")
    full = (1 << g.order) - 1
    if len(_pieces(g.adj, full)) != 1:
        raise UnsupportedInputError("safe sets are only defined for connected graphs")
    examined = 0
    for k in range(1, g.order + 1):
        for combo in combinations(range(g.order), k):
            examined += 1
            s = 0
            for v in combo:
                s |= 1 << v
            if _is_safe(g.adj, full, s, require_connected):
                witness = VertexSet(s, g.order)
                report = verify(g, witness)
                ok = report.is_connected_safe if require_connected else report.is_safe
                if not ok:
                    raise InternalInvariantError(f"oracle witness {witness} rejected by the verifier")
                return k, witness, examined
    raise InternalInvariantError("V(G) itself must be safe")


def min_safe_set(g: Graph, require_connected: bool = False, cap: int | None = None) -> tuple[int, VertexSet]:
    """Smallest (connected) safe set of ``g`` by exhaustive search."""
    size, witness, _ = _search(g, require_connected, cap)
    return size, witness


def oracle_full(g: Graph, cap: int | None = None) -> OracleResult:
    s_value, s_witness, n1 = _search(g, False, cap)
    cs_value, cs_witness, n2 = _search(g, True, cap)
    return OracleResult(s_value, cs_value, s_witness, cs_witness, n1 + n2)

"""Lexicographic products, joins and product-coordinate bookkeeping.

Vertices of a product are numbered copy-major: all of copy 0, then copy 1,
and so on, so the slice belonging to one copy is a contiguous bit range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import MAX_VERTICES, Graph, GraphError, VertexSet, bits_of, complete


@dataclass(frozen=True)
class ProductGraph:
    base: Graph
    g_order: int
    h_orders: tuple[int, ...]
    offsets: tuple[int, ...]

    def coord_of(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.base.n:
            raise GraphError(f"vertex {v} out of range for product of order {self.base.n}")
        # offsets are ascending; copies are few, a linear scan is enough
        i = 0
        while i + 1 < self.g_order and self.offsets[i + 1] <= v:
            i += 1
        return i, v - self.offsets[i]

    def index_of(self, i: int, j: int) -> int:
        if not (0 <= i < self.g_order and 0 <= j < self.h_orders[i]):
            raise GraphError(f"coordinate ({i}, {j}) out of range")
        return self.offsets[i] + j

    def copy_mask(self, i: int) -> int:
        return ((1 << self.h_orders[i]) - 1) << self.offsets[i]

    def coordinate_map(self) -> list[list[int]]:
        return [list(self.coord_of(v)) for v in range(self.base.n)]


def lex_product(g: Graph, hs: Sequence[Graph]) -> ProductGraph:
    """``G o {H_1..H_n}``; a single-element ``hs`` is replicated for ``G o H``."""
    if len(hs) == 1 and g.n != 1:
        hs = list(hs) * g.n
    if len(hs) != g.n:
        raise GraphError(f"need {g.n} factor graphs, got {len(hs)}")
    if any(h.n == 0 for h in hs):
        raise GraphError("every factor graph needs at least one vertex")
    orders = tuple(h.n for h in hs)
    total = sum(orders)
    if total > MAX_VERTICES:
        raise GraphError(f"product order {total} exceeds cap {MAX_VERTICES}")
    offsets = []
    acc = 0
    for m in orders:
        offsets.append(acc)
        acc += m
    blocks = [((1 << m) - 1) << off for m, off in zip(orders, offsets)]
    rows = []
    for i, h in enumerate(hs):
        outside = 0
        for k in bits_of(g.adj[i]):
            outside |= blocks[k]
        for j in range(h.n):
            rows.append(outside | (h.adj[j] << offsets[i]))
    label = ""
    if g.label and all(h.label for h in hs):
        names = {h.label for h in hs}
        inner = hs[0].label if len(names) == 1 else "{" + ",".join(h.label for h in hs) + "}"
        label = f"{g.label}o{inner}"
    return ProductGraph(Graph(total, tuple(rows), label), g.n, orders, tuple(offsets))


def join(g: Graph, h: Graph) -> ProductGraph:
    if g.n < 1 or h.n < 1:
        raise GraphError("join needs two graphs of order >= 1")
    p = lex_product(complete(2), [g, h])
    label = f"{g.label}+{h.label}" if g.label and h.label else ""
    return ProductGraph(p.base.with_label(label), p.g_order, p.h_orders, p.offsets)


def project(p: ProductGraph, w: VertexSet, i: int) -> VertexSet:
    """``W_{u_i}``: the part of ``w`` inside copy ``i``, renumbered to ``0..n'_i - 1``."""
    if not 0 <= i < p.g_order:
        raise GraphError(f"copy index {i} out of range")
    return VertexSet(p.h_orders[i], (w.bits & p.copy_mask(i)) >> p.offsets[i])


def connected_components(g: Graph) -> list[VertexSet]:
    remaining = g.all_mask
    parts = []
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in bits_of(frontier):
                reach |= g.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        parts.append(VertexSet(g.n, seen))
        remaining &= ~seen
    return parts

"""Finite simple undirected graphs over integer bitsets.

Vertices are ``0..n-1``. A neighbourhood is a Python ``int`` whose bit ``u``
is set when ``u`` is adjacent. :class:`VertexSet` wraps such a mask together
with the order of the graph it belongs to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graphs, bad vertex indices and bad input text."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset of ``{0, ..., n-1}``."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"vertex set {self.bits:#x} has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        return cls(n, mask_of(vertices))

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.bits & ~other.bits)

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph stored as a tuple of neighbour bitmasks."""

    n: int
    adj: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise GraphError(f"row {v} has bits outside the vertex range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits_of(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def unchecked(cls, n: int, adj: tuple[int, ...], label: str = "") -> Graph:
        """Skip validation; for hot loops whose rows are symmetric by construction."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "label", label)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str = "") -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"order {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), label)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits_of(self.adj[u] >> (u + 1) << (u + 1))]

    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def neighbourhood(self, v: int, closed: bool = False) -> VertexSet:
        self._check(v)
        row = self.adj[v] | (1 << v) if closed else self.adj[v]
        return VertexSet(self.n, row)

    def is_universal(self, v: int) -> bool:
        self._check(v)
        return self.adj[v].bit_count() == self.n - 1

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.n - 1 for row in self.adj)

    def is_empty(self) -> bool:
        """True when the graph has no edges; "nonempty" elsewhere means at least one edge."""
        return not any(self.adj)

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.adj)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in bits_of(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.all_mask

    def induced_subgraph(self, s: VertexSet | Iterable[int]) -> Graph:
        """Subgraph induced by ``s``, renumbered in ascending order of ``s``."""
        keep = sorted(s) if not isinstance(s, VertexSet) else s.to_list()
        for v in keep:
            self._check(v)
        position = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(mask_of(position[u] for u in bits_of(self.adj[v]) if u in position))
        return Graph(len(keep), tuple(rows))

    def with_label(self, label: str) -> Graph:
        return Graph(self.n, self.adj, label)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"Graph(n={self.n}, m={self.size()}{tag})"


def neighbourhood(g: Graph, v: int, closed: bool = False) -> VertexSet:
    return g.neighbourhood(v, closed)


def is_universal(g: Graph, v: int) -> bool:
    return g.is_universal(v)


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> Graph:
    return g.induced_subgraph(s)


# -- constructors ------------------------------------------------------------


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2), f"K{n}")


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return Graph(n, (0,) * n, f"N{n}")


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Parts are numbered consecutively in the order given."""
    _need(len(sizes) >= 1 and all(s >= 1 for s in sizes), "part sizes must be >= 1")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    edges = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    return Graph.from_edges(n, edges, "K" + ",".join(map(str, sizes)))


def complete_bipartite(r: int, t: int) -> Graph:
    """``K_{r,t}`` with the ``r`` side first."""
    return complete_multipartite([r, t])


def corona_k1(r: int) -> Graph:
    """``K_r`` with a pendant on each clique vertex: clique ``0..r-1``, pendant of ``i`` is ``r+i``."""
    _need(r >= 1, "corona needs r >= 1")
    edges = list(combinations(range(r), 2)) + [(i, r + i) for i in range(r)]
    return Graph.from_edges(2 * r, edges, f"K{r}oK1")


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges, "+".join(g.label or "G" for g in graphs))


CONSTRUCTORS = {
    "path": lambda p: path(*p),
    "cycle": lambda p: cycle(*p),
    "complete": lambda p: complete(*p),
    "empty": lambda p: empty(*p),
    "complete_bipartite": lambda p: complete_bipartite(*p),
    "complete_multipartite": lambda p: complete_multipartite(p),
    "corona_K1": lambda p: corona_k1(*p),
}


def construct(kind: str, params: Sequence[int]) -> Graph:
    """Build a named graph family member; ``disjoint_union`` takes copies of ``K_s`` per size."""
    if kind == "disjoint_union":
        _need(len(params) >= 1, "disjoint_union needs at least one size")
        return disjoint_union(*(complete(s) for s in params))
    try:
        build = CONSTRUCTORS[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    try:
        return build(list(params))
    except TypeError:
        raise GraphError(f"wrong number of parameters for {kind}") from None


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``g`` and the edge list decoding its vertices."""
    edges = g.edges()
    _need(len(edges) <= MAX_VERTICES, f"line graph would have {len(edges)} vertices")
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = []
    for i, (u, v) in enumerate(edges):
        rows.append((incident[u] | incident[v]) & ~(1 << i))
    return Graph(len(edges), tuple(rows), f"L({g.label})" if g.label else ""), edges


# -- text formats ------------------------------------------------------------

_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = [chr(126)] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER) :]
    if not line:
        raise GraphError("empty graph6 string")
    if line.startswith(":") or line.startswith(";"):
        raise GraphError("sparse6/digraph6 input is not supported")
    data = [ord(c) - 63 for c in line]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphError(f"byte out of graph6 range in {line!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("unsupported or truncated graph6 order header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 order {n} exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    stream = 0
    for d in body:
        stream = stream << 6 | d
    pad = 6 * len(body) - nbits
    if stream & ((1 << pad) - 1):
        raise GraphError("nonzero graph6 padding bits")
    stream >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def emit_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines; a ``# n=K`` comment fixes the order, otherwise max index + 1."""
    edges = []
    declared = n
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line[1:].strip().startswith("n=") and declared is None:
                declared = int(line[1:].strip()[2:])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"bad edge line {raw!r}") from None
    if declared is None:
        declared = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(declared, edges)


def read_graph(text: str) -> Graph:
    """Accept either a single graph6 line or an edge list."""
    stripped = text.strip()
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if len(lines) == 1 and " " not in lines[0] and not lines[0].startswith("#"):
        return parse_graph6(lines[0])
    return parse_edge_list(text)

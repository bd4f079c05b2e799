"""Recognition and construction of the layered family F.

A member of F is built from cliques ``V_1..V_k`` and independent sets
``V'_1..V'_k'`` (``k' = k`` or ``k - 1``): all clique vertices are mutually
adjacent, and ``x in V_i`` is adjacent to ``y in V'_j`` exactly when
``i <= j``. These are precisely the connected graphs of order ``n >= 2``
whose super domination number is ``n - 1``.

Decompositions are unique up to two folds at the tail: a single trailing
companion vertex is universal in the last layer, and a single trailing
clique vertex without companions duplicates the previous companion set.
:func:`canonical_shape` normalises both.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError, VertexSet, bits_of


class DisconnectedGraphError(GraphError):
    """Raised when a connected graph is required."""


@dataclass(frozen=True)
class FDecomposition:
    cliques: tuple[VertexSet, ...]
    empties: tuple[VertexSet, ...]

    @property
    def k(self) -> int:
        return len(self.cliques)

    @property
    def k_prime(self) -> int:
        return len(self.empties)

    def shape(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(len(s) for s in self.cliques), tuple(len(s) for s in self.empties)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "k_prime": self.k_prime,
            "cliques": [s.to_list() for s in self.cliques],
            "empties": [s.to_list() for s in self.empties],
        }


def canonical_shape(cliques: Sequence[int], empties: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The shape :func:`recognize` reports for ``construct_f(cliques, empties)``.

    A trailing one-vertex companion set is universal in the last layer and
    folds into the last clique; a trailing one-vertex clique with no
    companion set of its own is a twin of the previous companions and folds
    into them.
    """
    cl, em = list(cliques), list(empties)
    while True:
        if len(em) == len(cl) and em and em[-1] == 1:
            cl[-1] += 1
            em.pop()
        elif len(em) == len(cl) - 1 and em and cl[-1] == 1:
            cl.pop()
            em[-1] += 1
        else:
            return tuple(cl), tuple(em)


def construct_f(cliques: Sequence[int], empties: Sequence[int]) -> Graph:
    """Member of F with the given layer sizes, vertices numbered ``V_1, V'_1, V_2, V'_2, ...``."""
    k, kp = len(cliques), len(empties)
    if k < 1 or kp not in (k - 1, k):
        raise GraphError(f"need k >= 1 and k' in {{k-1, k}}, got k={k}, k'={kp}")
    if any(s < 1 for s in list(cliques) + list(empties)):
        raise GraphError("layer sizes must be >= 1")
    clique_of: list[int] = []
    companion_of: list[int] = []
    layers: list[tuple[str, int]] = []
    for i in range(k):
        layers += [("clique", i)] * cliques[i]
        if i < kp:
            layers += [("empty", i)] * empties[i]
    n = len(layers)
    for kind, i in layers:
        clique_of.append(i if kind == "clique" else -1)
        companion_of.append(i if kind == "empty" else -1)
    edges = []
    for a, b in combinations(range(n), 2):
        ia, ib = clique_of[a], clique_of[b]
        ja, jb = companion_of[a], companion_of[b]
        if ia >= 0 and ib >= 0:
            edges.append((a, b))
        elif ia >= 0 and jb >= 0 and ia <= jb:
            edges.append((a, b))
        elif ib >= 0 and ja >= 0 and ib <= ja:
            edges.append((a, b))
    label = "F[" + ",".join(map(str, cliques)) + ";" + ",".join(map(str, empties)) + "]"
    return Graph.from_edges(n, edges, label)


def recognize(g: Graph) -> FDecomposition | None:
    """Peel universal vertices layer by layer, then check the result edge by edge."""
    if g.n == 0 or not g.is_connected():
        raise DisconnectedGraphError("family F recognition needs a connected graph")
    adj = g.adj
    rest = g.all_mask
    cliques = []
    empties = []
    while rest:
        universal = 0
        for v in bits_of(rest):
            if adj[v] & rest == rest & ~(1 << v):
                universal |= 1 << v
        if not universal:
            return None
        companions = 0
        for v in bits_of(rest & ~universal):
            if adj[v] & rest == universal:
                companions |= 1 << v
        cliques.append(VertexSet(g.n, universal))
        if companions:
            empties.append(VertexSet(g.n, companions))
        rest &= ~(universal | companions)
        if not companions and rest:
            return None
    dec = FDecomposition(tuple(cliques), tuple(empties))
    return dec if _matches(g, dec) else None


def _matches(g: Graph, dec: FDecomposition) -> bool:
    """True when ``g`` has exactly the edge set the decomposition prescribes."""
    all_cliques = 0
    for s in dec.cliques:
        all_cliques |= s.bits
    for i, s in enumerate(dec.cliques):
        later_empties = 0
        for t in dec.empties[i:]:
            later_empties |= t.bits
        for x in s:
            if g.adj[x] != (all_cliques | later_empties) & ~(1 << x):
                return False
    for j, t in enumerate(dec.empties):
        earlier_cliques = 0
        for s in dec.cliques[: j + 1]:
            earlier_cliques |= s.bits
        for y in t:
            if g.adj[y] != earlier_cliques:
                return False
    return True


def is_gamma_sp_n_minus_1(g: Graph) -> bool:
    return recognize(g) is not None


def neighbourhood_law_violations(g: Graph, dec: FDecomposition) -> list[str]:
    """Neighbourhood laws every member satisfies; returns the names of any that fail."""
    adj = g.adj
    closed = [row | (1 << v) for v, row in enumerate(adj)]
    union_cliques = 0
    for s in dec.cliques:
        union_cliques |= s.bits
    failed = []

    def check(name: str, ok: bool) -> None:
        if not ok and name not in failed:
            failed.append(name)

    for i, s in enumerate(dec.cliques):
        tail = 0
        for t in dec.empties[i:]:
            tail |= t.bits
        for x in s:
            check("clique-closed-neighbourhood", closed[x] == union_cliques | tail)
        for x, y in combinations(s, 2):
            check("clique-twins", closed[x] == closed[y])
    for j, t in enumerate(dec.empties):
        head = 0
        for s in dec.cliques[: j + 1]:
            head |= s.bits
        for y in t:
            check("companion-neighbourhood", adj[y] == head)
        for x, y in combinations(t, 2):
            check("companion-twins", adj[x] == adj[y])
    for i, j in combinations(range(dec.k), 2):
        for x in dec.cliques[i]:
            for y in dec.cliques[j]:
                check("clique-nesting", closed[y] & ~closed[x] == 0)
    for i, j in combinations(range(dec.k_prime), 2):
        for x in dec.empties[i]:
            for y in dec.empties[j]:
                check("companion-nesting", adj[x] & ~adj[y] == 0)
    for s in dec.cliques:
        for t in dec.empties:
            for x in s:
                for y in t:
                    # open N(y) contains x itself whenever they are adjacent, so compare with N[x]
                    check("companion-inside-clique", adj[y] & ~closed[x] == 0)
    return failed


def has_induced_p4_or_c4(g: Graph) -> bool:
    """Scan all 4-subsets for an induced path or cycle on four vertices."""
    adj = g.adj
    for quad in combinations(range(g.n), 4):
        mask = sum(1 << v for v in quad)
        degs = sorted((adj[v] & mask).bit_count() for v in quad)
        if degs == [2, 2, 2, 2]:
            return True
        if degs == [1, 1, 2, 2]:
            # the only graph on four vertices with this degree sequence is P4
            return True
    return False

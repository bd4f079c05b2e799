"""Exact solvers for the invariants used throughout the package.

Every solver returns an :class:`InvariantValue` whose witness is the
lexicographically least optimal set (comparing sorted vertex tuples). Each
search is a depth-first walk that decides vertices in index order, trying
"include" before "exclude", and only cuts branches that cannot strictly
improve the incumbent; the first optimum it meets is therefore the
lexicographically least one.

``gamma_sp`` works on the equivalent pairing form of the problem: a set
``U`` is the complement of a super dominating set exactly when its vertices
can be paired injectively with outside vertices ``v`` such that
``N(v) & U == {u}``. The search grows such pairings, keeping for the
current pairing the vertices still allowed on each side, and bounds the
number of further pairs by how many vertices on each side still have a
partner available.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Union

from .graph import Graph, GraphError, VertexSet, bits_of
from .products import connected_components

ORACLE_MAX_VERTICES = 24


@dataclass(frozen=True)
class SuperDomWitness:
    """A super dominating set ``dom_set`` and, for each outside vertex, its private neighbour."""

    dom_set: VertexSet
    assignment: dict[int, int] = field(hash=False)

    @property
    def complement(self) -> VertexSet:
        return self.dom_set.complement()

    def to_json(self) -> dict:
        return {
            "dom_set": self.dom_set.to_list(),
            "assignment": {str(u): v for u, v in sorted(self.assignment.items())},
        }


Witness = Union[VertexSet, SuperDomWitness]


@dataclass(frozen=True)
class InvariantValue:
    name: str
    value: int
    witness: Witness

    def witness_json(self):
        if isinstance(self.witness, SuperDomWitness):
            return self.witness.to_json()
        return self.witness.to_list()


# -- super domination ----------------------------------------------------------


def is_super_dominating(g: Graph, d: VertexSet) -> SuperDomWitness | None:
    """Check ``d``; on success each outside ``u`` is mapped to its least private neighbour."""
    if d.n != g.n:
        raise GraphError("vertex set belongs to a graph of a different order")
    outside = g.all_mask & ~d.bits
    assignment = {}
    for u in bits_of(outside):
        target = 1 << u
        for v in bits_of(g.adj[u] & d.bits):
            if g.adj[v] & outside == target:
                assignment[u] = v
                break
        else:
            return None
    return SuperDomWitness(d, assignment)


def private_neighbours(g: Graph, x: VertexSet, y: int) -> VertexSet:
    """``{v in x : N(v) minus x == {y}}``."""
    if y in x:
        raise GraphError(f"vertex {y} must lie outside the given set")
    if not 0 <= y < g.n:
        raise GraphError(f"vertex {y} out of range for n={g.n}")
    outside = g.all_mask & ~x.bits
    target = 1 << y
    return VertexSet(g.n, sum(1 << v for v in x if g.adj[v] & outside == target))


def twin_representatives(adj: tuple[int, ...], mask: int) -> list[int]:
    """Map each vertex of ``mask`` to the least vertex sharing its open or closed neighbourhood."""
    rep = list(range(len(adj)))
    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    for v in bits_of(mask):
        first = by_open.setdefault(adj[v], v)
        if first == v:
            first = by_closed.setdefault(adj[v] | (1 << v), v)
        rep[v] = first
    return rep


def _largest_private_pairing(adj: tuple[int, ...], comp: int) -> dict[int, int]:
    """Lexicographically least maximum pairing ``u -> v`` inside the vertex mask ``comp``.

    Twins (equal open or equal closed neighbourhoods) are interchangeable and
    no two of them can sit on the same side of a pairing, so only the least
    vertex of each twin class is tried as ``u`` and one vertex per class as
    ``v``; swapping twins never produces a lexicographically smaller ``U``.
    A partner that is not a representative can never be wanted in ``U``
    later, so it dominates the representative of its class.

    The maximum size is found first; the least ``U`` of that size is then
    built one vertex at a time, keeping each smallest vertex that still
    admits a completion.
    """
    closed = [row | (1 << v) for v, row in enumerate(adj)]
    rep = twin_representatives(adj, comp)
    reps = 0
    for v in bits_of(comp):
        reps |= 1 << rep[v]
    chosen: list[tuple[int, int]] = []

    def live_sides(ucand: int, vcand: int) -> tuple[int, int, int]:
        live_u = 0
        rest = ucand
        while rest:
            low = rest & -rest
            rest ^= low
            if adj[low.bit_length() - 1] & vcand:
                live_u |= low
        live_v = 0
        v_classes = 0
        rest = vcand
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            if adj[v] & live_u:
                live_v |= low
                v_classes |= 1 << rep[v]
        return live_u, live_v, v_classes.bit_count()

    def partners(u: int, live_v: int) -> list[int]:
        # per twin class keep the highest candidate: it is never a class
        # representative unless the representative is all that is left
        partner_of: dict[int, int] = {}
        for v in bits_of(adj[u] & live_v):
            partner_of[rep[v]] = v
        return sorted(partner_of.values())

    best_size = 0
    ceiling = comp.bit_count() // 2

    def maximise(ucand: int, vcand: int) -> None:
        nonlocal best_size
        depth = len(chosen)
        if depth > best_size:
            best_size = depth
        if best_size == ceiling:
            return
        live_u, live_v, v_count = live_sides(ucand, vcand)
        if depth + min(live_u.bit_count(), v_count) <= best_size:
            return
        low = live_u & -live_u
        u = low.bit_length() - 1
        rest_u = live_u & ~low
        for v in partners(u, live_v):
            chosen.append((u, v))
            maximise(rest_u & ~closed[v], live_v & ~closed[u] & ~(1 << v))
            chosen.pop()
        maximise(rest_u, live_v)

    def complete(required: int, pool: int, vcand: int, target: int) -> bool:
        """Extend ``chosen`` to ``target`` pairs using every vertex of ``required``."""
        depth = len(chosen)
        if depth >= target:
            return True
        live_u, live_v, v_count = live_sides(required | pool, vcand)
        if required & ~live_u or depth + min(live_u.bit_count(), v_count) < target:
            return False
        need = required & live_u
        free = live_u & ~required
        low = (need or free) & -(need or free)
        u = low.bit_length() - 1
        for v in partners(u, live_v):
            if (need & ~low) & closed[v]:
                continue
            chosen.append((u, v))
            if complete(need & ~low, free & ~low & ~closed[v], live_v & ~closed[u] & ~(1 << v), target):
                return True
            chosen.pop()
        return not need and complete(0, free & ~low, live_v, target)

    maximise(comp & reps, comp)
    size = best_size
    required = 0
    last = -1
    for _ in range(size):
        for w in bits_of(reps >> (last + 1) << (last + 1)):
            above = reps >> (w + 1) << (w + 1)
            chosen.clear()
            if complete(required | (1 << w), above, comp, size):
                required |= 1 << w
                last = w
                break
        else:
            raise AssertionError("internal error: no completion for a feasible size")
    return dict(chosen)


def gamma_sp(g: Graph) -> InvariantValue:
    """Super domination number, solved component by component."""
    assignment: dict[int, int] = {}
    for comp in connected_components(g):
        if comp.bits & (comp.bits - 1) == 0:
            continue
        assignment.update(_largest_private_pairing(g.adj, comp.bits))
    outside = sum(1 << u for u in assignment)
    dom = VertexSet(g.n, g.all_mask & ~outside)
    witness = is_super_dominating(g, dom)
    if witness is None:
        raise AssertionError("internal error: pairing search produced an invalid set")
    return InvariantValue("gamma_sp", len(dom), witness)


def gamma_sp_oracle(g: Graph) -> InvariantValue:
    """Plain scan: the first super dominating set in order of size, then lexicographically."""
    if g.n > ORACLE_MAX_VERTICES:
        raise GraphError(f"oracle limited to {ORACLE_MAX_VERTICES} vertices")
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            witness = is_super_dominating(g, VertexSet.of(g.n, combo))
            if witness is not None:
                return InvariantValue("gamma_sp", size, witness)
    raise AssertionError("unreachable: the full vertex set is always super dominating")


# -- classical invariants ------------------------------------------------------


def alpha_k(g: Graph, k: int = 1) -> InvariantValue:
    """Largest set inducing maximum degree at most ``k - 1``."""
    if k < 1:
        raise GraphError("k must be positive")
    adj = g.adj
    limit = k - 1
    best_bits = 0
    best_size = 0

    def search(chosen: int, size: int, allowed: int) -> None:
        nonlocal best_bits, best_size
        if size > best_size:
            best_size, best_bits = size, chosen
        if not allowed or size + allowed.bit_count() <= best_size:
            return
        low = allowed & -allowed
        grown = chosen | low
        nxt = allowed & ~low
        # keep only vertices that can still join without breaking the degree cap
        for x in bits_of(nxt):
            if (adj[x] & grown).bit_count() > limit:
                nxt &= ~(1 << x)
        for y in bits_of(grown):
            if (adj[y] & grown).bit_count() == limit:
                nxt &= ~adj[y]
        search(grown, size + 1, nxt)
        search(chosen, size, allowed & ~low)

    search(0, 0, g.all_mask)
    name = "alpha" if k == 1 else ("alpha_2" if k == 2 else f"alpha_{k}")
    return InvariantValue(name, best_size, VertexSet(g.n, best_bits))


def alpha(g: Graph) -> InvariantValue:
    return alpha_k(g, 1)


def tau(g: Graph) -> InvariantValue:
    """Minimum vertex cover; excluding a vertex forces all of its neighbours in."""
    adj = g.adj
    n = g.n
    best_bits = g.all_mask
    best_size = n

    def search(v: int, chosen: int, size: int, forced: int, banned: int) -> None:
        nonlocal best_bits, best_size
        if size >= best_size:
            return
        if v == n:
            best_size, best_bits = size, chosen
            return
        bit = 1 << v
        if forced & bit:
            search(v + 1, chosen | bit, size + 1, forced, banned)
            return
        # every later edge still needs a cover vertex: a matching lower bound
        if size + _greedy_matching(adj, g.all_mask >> v << v & ~banned & ~chosen) >= best_size:
            return
        search(v + 1, chosen | bit, size + 1, forced, banned)
        if not adj[v] & banned:
            search(v + 1, chosen, size, forced | adj[v], banned | bit)

    search(0, 0, 0, 0, 0)
    return InvariantValue("tau", best_size, VertexSet(n, best_bits))


def _greedy_matching(adj: tuple[int, ...], mask: int) -> int:
    """Size of a greedy matching among edges with both ends in ``mask``."""
    count = 0
    free = mask
    for u in bits_of(mask):
        if not free >> u & 1:
            continue
        partner = adj[u] & free
        if partner:
            free &= ~(1 << u) & ~(partner & -partner)
            count += 1
    return count


def rho(g: Graph) -> InvariantValue:
    """Largest set of vertices with pairwise disjoint closed neighbourhoods."""
    adj = g.adj
    ball2 = []
    for v in range(g.n):
        closed = adj[v] | (1 << v)
        reach = closed
        for u in bits_of(adj[v]):
            reach |= adj[u]
        ball2.append(reach)
    best_bits = 0
    best_size = 0

    def search(allowed: int, chosen: int, size: int) -> None:
        nonlocal best_bits, best_size
        if size > best_size:
            best_size, best_bits = size, chosen
        if not allowed or size + allowed.bit_count() <= best_size:
            return
        low = allowed & -allowed
        w = low.bit_length() - 1
        search(allowed & ~ball2[w], chosen | low, size + 1)
        search(allowed & ~low, chosen, size)

    search(g.all_mask, 0, 0)
    return InvariantValue("rho", best_size, VertexSet(g.n, best_bits))


def gamma(g: Graph) -> InvariantValue:
    """Domination number."""
    adj = g.adj
    n = g.n
    closed = [adj[v] | (1 << v) for v in range(n)]
    max_cover = max((c.bit_count() for c in closed), default=1)
    full = g.all_mask
    best_bits = full
    best_size = n

    def search(v: int, chosen: int, size: int, dominated: int) -> None:
        nonlocal best_bits, best_size
        if dominated == full:
            if size < best_size:
                best_size, best_bits = size, chosen
            return
        if v == n:
            return
        missing = (full & ~dominated).bit_count()
        if size + -(-missing // max_cover) >= best_size:
            return
        # a vertex below v whose closed neighbourhood is all decided must already be dominated
        undominated = full & ~dominated
        low = undominated & -undominated
        w = low.bit_length() - 1
        if closed[w] >> v == 0:
            return
        bit = 1 << v
        search(v + 1, chosen | bit, size + 1, dominated | closed[v])
        search(v + 1, chosen, size, dominated)

    search(0, 0, 0, 0)
    return InvariantValue("gamma", best_size, VertexSet(n, best_bits))


INVARIANTS = {
    "gamma_sp": gamma_sp,
    "gamma_sp_oracle": gamma_sp_oracle,
    "gamma": gamma,
    "alpha": alpha,
    "alpha_2": lambda g: alpha_k(g, 2),
    "tau": tau,
    "rho": rho,
}

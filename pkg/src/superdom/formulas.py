"""Closed formulas and bounds for super domination in lexicographic products and joins.

Every predictor raises :class:`Inapplicable` when its hypotheses do not
hold, so callers never mistake an out-of-scope number for a prediction.
Arithmetic is integer-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, GraphError, complete, disjoint_union, line_graph
from .products import join, lex_product
from . import solvers


class Inapplicable(ValueError):
    """The hypotheses of a formula are not met by the given graphs."""


class ReductionError(RuntimeError):
    """The reduction produced a value not divisible by its scaling factor."""


# solver values are reused heavily across sweeps; graphs hash by structure


@lru_cache(maxsize=None)
def gsp(g: Graph) -> int:
    return solvers.gamma_sp(g).value


@lru_cache(maxsize=None)
def alpha(g: Graph) -> int:
    return solvers.alpha_k(g, 1).value


@lru_cache(maxsize=None)
def alpha2(g: Graph) -> int:
    return solvers.alpha_k(g, 2).value


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _is_nearly_complete(h: Graph) -> bool:
    """``gamma_sp(H) = n' - 1`` with ``H`` not complete: the sharp case of several results."""
    return gsp(h) == h.n - 1 and not h.is_complete()


@dataclass(frozen=True)
class MainBound:
    value: int
    variant: int
    general: int
    sharp: int | None


def bound_main_upper(g: Graph, h: Graph) -> MainBound:
    """``alpha(G) gsp(H) + (n - alpha(G)) n'``, or ``n n' - alpha_2(G)`` in the sharp case."""
    if h.is_empty():
        raise Inapplicable("H must have at least one edge")
    n, m = g.n, h.n
    a = alpha(g)
    general = a * gsp(h) + (n - a) * m
    sharp = n * m - alpha2(g) if _is_nearly_complete(h) else None
    if sharp is not None and sharp <= general:
        return MainBound(sharp, 2, general, sharp)
    return MainBound(general, 1, general, sharp)


def bound_trivial_lower(g: Graph, h: Graph) -> int:
    if g.n < 2:
        raise Inapplicable("G needs order >= 2")
    if h.is_empty():
        raise Inapplicable("H must have at least one edge")
    return g.n * gsp(h)


def equality_trivial_lower(g: Graph, h: Graph) -> bool:
    """Predicted equality ``gsp(G o H) = n gsp(H)``: G is K2 and H is nearly complete."""
    bound_trivial_lower(g, h)
    return g.n == 2 and g.size() == 1 and _is_nearly_complete(h)


def bound_min_upper(g: Graph, h: Graph) -> int:
    n, m = g.n, h.n
    if n < 2 or m < 2:
        raise Inapplicable("both factors need order >= 2")
    return min(n * (m - 1) + gsp(g), m * (n - 1) + gsp(h))


def bound_empty_upper(g: Graph, nprime: int) -> int:
    """Upper bound for ``G o N_{n'}`` through a maximum 2-packing of the line graph."""
    if nprime < 2:
        raise Inapplicable("n' must be >= 2")
    if g.size() == 0:
        raise Inapplicable("G must have at least one edge")
    lg, _ = line_graph(g)
    return g.n * nprime - 2 * solvers.rho(lg).value


LEX_KINDS = ("complete", "complete_bipartite", "cycle", "path", "large_gap")


def exact_lex(kind: str, params, h: Graph) -> int:
    """Exact ``gsp(G o H)`` for a named family of ``G``.

    ``params`` is ``(n,)`` for complete graphs, cycles and paths, ``(r, t)``
    for complete bipartite graphs, and the graph ``G`` itself for
    ``large_gap``.
    """
    m = h.n
    if kind == "large_gap":
        g = params
        if not isinstance(g, Graph):
            raise GraphError("large_gap expects the first factor as a Graph")
        if m - gsp(h) <= g.max_degree() + 1:
            raise Inapplicable("needs n' - gsp(H) > max degree of G + 1")
        a = alpha(g)
        return a * gsp(h) + (g.n - a) * m
    if kind == "complete":
        (n,) = params
        if n < 2 or h.is_complete():
            raise Inapplicable("needs n >= 2 and H noncomplete")
        if gsp(h) == m - 1:
            return n * m - 2
        if gsp(h) <= m - 2:
            return m * (n - 1) + gsp(h)
        raise Inapplicable("H without edges is outside both cases")
    if h.is_empty():
        raise Inapplicable("H must have at least one edge")
    if kind == "complete_bipartite":
        r, t = sorted(params)
        if t < 2 or r < 1:
            raise Inapplicable("needs 1 <= r <= t and t >= 2")
        return t * gsp(h) + r * m
    if kind in ("cycle", "path"):
        (n,) = params
        if n < (4 if kind == "cycle" else 2):
            raise Inapplicable(f"{kind} too short")
        if _is_nearly_complete(h):
            two_thirds = (2 * n) // 3 if kind == "cycle" else _ceil_div(2 * n, 3)
            return n * m - two_thirds
        if gsp(h) <= m - 2:
            if kind == "cycle":
                return (n // 2) * gsp(h) + m * _ceil_div(n, 2)
            return _ceil_div(n, 2) * gsp(h) + m * (n // 2)
        raise Inapplicable("H is complete: outside both cases")
    raise GraphError(f"unknown family {kind!r}")


def classify_first_factor(g: Graph) -> list[tuple[str, object]]:
    """Named families ``G`` belongs to, as ``(kind, params)`` pairs for :func:`exact_lex`."""
    found: list[tuple[str, object]] = []
    if g.n == 0 or not g.is_connected():
        return found
    degs = g.degrees()
    m = g.size()
    if g.is_complete():
        found.append(("complete", (g.n,)))
    if g.n >= 3 and all(d == 2 for d in degs):
        found.append(("cycle", (g.n,)))
    if m == g.n - 1 and max(degs, default=0) <= 2:
        found.append(("path", (g.n,)))
    side = _bipartition(g)
    if side is not None:
        r = side.bit_count()
        t = g.n - r
        if r * t == m:
            found.append(("complete_bipartite", tuple(sorted((r, t)))))
    return found


def _bipartition(g: Graph) -> int | None:
    """One colour class of a connected bipartite graph, or None."""
    colour = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in range(g.n):
            if g.adj[v] >> u & 1:
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return sum(1 << v for v, c in colour.items() if c == 0)


JOIN_THEOREMS = ("thm21", "thm22", "thm23", "join-familyF", "join-bipartite")


def _join_class(g: Graph) -> str:
    if g.is_complete():
        return "complete"
    if g.is_empty():
        return "empty"
    return "general"


def exact_join(g: Graph, h: Graph) -> tuple[int, str]:
    """Exact ``gsp(G + H)`` and the result it comes from."""
    if g.n < 1 or h.n < 1:
        raise Inapplicable("both graphs need order >= 1")
    cg, ch = _join_class(g), _join_class(h)
    if ch == "complete" and cg != "complete":
        g, h, cg, ch = h, g, ch, cg
    if cg == "empty" and ch == "general":
        pass
    elif cg == "general" and ch == "empty":
        g, h, cg, ch = h, g, ch, cg
    n, m = g.n, h.n
    if cg == "complete" and ch in ("complete", "empty"):
        # K_{n+n'} and K_n + N_{n'} are both members of F
        return n + m - 1, "join-familyF"
    if cg == "empty" and ch == "empty":
        # K_{n,n'} with both sides >= 2: one vertex per side can leave the set
        return n + m - 2, "join-bipartite"
    if cg == "complete":
        return n + gsp(h), "thm22"
    if cg == "empty":
        return min(m + n - 2, n + gsp(h)), "thm23"
    return min(n + m - 2, n + gsp(h), m + gsp(g)), "thm21"


@dataclass(frozen=True)
class ReductionTrace:
    alpha: int
    copies: int
    factor_order: int
    factor_gamma_sp: int
    product_order: int
    product_gamma_sp: int


def alpha_via_reduction(g: Graph) -> ReductionTrace:
    """Read ``alpha(G)`` off ``gsp(G o tK2)`` with ``t = max degree + 2``."""
    t = g.max_degree() + 2
    h = disjoint_union(*[complete(2)] * t)
    h_value = solvers.gamma_sp(h).value
    if h.n - h_value <= g.max_degree() + 1:
        raise ReductionError(f"gap {h.n - h_value} too small for max degree {g.max_degree()}")
    product = lex_product(g, [h]).base
    s = solvers.gamma_sp(product).value
    if s % t:
        raise ReductionError(f"gamma_sp = {s} is not divisible by t = {t}")
    return ReductionTrace(2 * g.n - s // t, t, h.n, h_value, product.n, s)


@dataclass
class BoundReport:
    graph_id: str
    n: int
    n_prime: int
    op: str
    applicable: list[tuple[str, str, int]] = field(default_factory=list)
    gamma_sp_exact: int | None = None

    def consistent(self) -> bool:
        if self.gamma_sp_exact is None:
            return True
        exact = self.gamma_sp_exact
        for _, kind, value in self.applicable:
            if kind == "lower" and value > exact:
                return False
            if kind == "upper" and value < exact:
                return False
            if kind == "exact" and value != exact:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "n_prime": self.n_prime,
            "op": self.op,
            "applicable": [{"theorem": t, "kind": k, "value": v} for t, k, v in self.applicable],
            "gamma_sp_exact": self.gamma_sp_exact,
            "consistent": self.consistent(),
        }


def _try(entries: list, theorem: str, kind: str, compute) -> None:
    try:
        entries.append((theorem, kind, compute()))
    except Inapplicable:
        pass


def bound_report(g: Graph, h: Graph, op: str = "lex", exact: bool = True, graph_id: str = "") -> BoundReport:
    """Every applicable prediction for ``G o H`` (or ``G + H``), with the solver value."""
    entries: list[tuple[str, str, int]] = []
    if op == "lex":
        product = lex_product(g, [h]).base
        _try(entries, "thm10", "upper", lambda: bound_main_upper(g, h).general)
        _try(entries, "thm10-sharp", "upper", lambda: _sharp_or_raise(g, h))
        _try(entries, "thm11", "lower", lambda: bound_trivial_lower(g, h))
        _try(entries, "thm11-equality", "exact", lambda: _equality_value(g, h))
        _try(entries, "thm12", "upper", lambda: bound_min_upper(g, h))
        if h.is_empty():
            _try(entries, "thm13", "upper", lambda: bound_empty_upper(g, h.n))
        _try(entries, "thmEquality", "exact", lambda: exact_lex("large_gap", g, h))
        ids = {"complete": "prop14", "complete_bipartite": "prop15", "cycle": "prop17", "path": "prop19"}
        for kind, params in classify_first_factor(g):
            _try(entries, ids[kind], "exact", lambda: exact_lex(kind, params, h))
    elif op == "join":
        product = join(g, h).base
        _try(entries, "join", "exact", lambda: exact_join(g, h)[0])
        if entries:
            entries[-1] = (exact_join(g, h)[1], "exact", entries[-1][2])
    else:
        raise GraphError(f"unknown operation {op!r}")
    report = BoundReport(graph_id, g.n, h.n, op, entries)
    if exact:
        report.gamma_sp_exact = gsp(product)
    return report


def _sharp_or_raise(g: Graph, h: Graph) -> int:
    sharp = bound_main_upper(g, h).sharp
    if sharp is None:
        raise Inapplicable("sharp variant needs gsp(H) = n' - 1 and H noncomplete")
    return sharp


def _equality_value(g: Graph, h: Graph) -> int:
    if not (g.is_connected() and equality_trivial_lower(g, h)):
        raise Inapplicable("equality case not predicted")
    return bound_trivial_lower(g, h)

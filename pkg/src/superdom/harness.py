"""Corpora, theorem checks and verification campaigns.

A check is a function of one graph (or one pair of graphs) that returns
``None`` on success, :data:`SKIP` when the instance is outside the
statement's hypotheses, or an ``(expected, got)`` pair describing a
counterexample. Corpora are split into picklable chunks so campaigns can
fan out over worker processes; results are merged back in chunk order, so
the report does not depend on the number of workers.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from . import formulas, solvers
from .family_f import has_induced_p4_or_c4, recognize, neighbourhood_law_violations
from .formulas import Inapplicable, ReductionError
from .graph import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    emit_graph6,
    empty,
    parse_graph6,
    path,
)
from .products import connected_components, join, lex_product, project

MAX_ENUMERATION_ORDER = 7
SKIP = "skip"
FILTERS = ("all", "connected", "isolate-free", "nonempty")


class UnknownTheorem(KeyError):
    pass


# -- corpora -------------------------------------------------------------------


def _edge_tables(n: int) -> tuple[int, list[list[list[int]]]]:
    """Per vertex, lookup tables turning 7-bit slices of an edge mask into row bits."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    slices = (m + 6) // 7
    tables = [[[0] * 128 for _ in range(slices)] for _ in range(n)]
    for v in range(n):
        for s in range(slices):
            for chunk in range(128):
                row = 0
                for b in range(7):
                    i = 7 * s + b
                    if i < m and chunk >> b & 1:
                        a, c = pairs[i]
                        if a == v:
                            row |= 1 << c
                        elif c == v:
                            row |= 1 << a
                tables[v][s][chunk] = row
    return m, tables


def _passes(g: Graph, filt: str) -> bool:
    if filt == "all":
        return True
    if filt == "connected":
        return g.is_connected()
    if filt == "isolate-free":
        return not g.has_isolated_vertex()
    if filt == "nonempty":
        return not g.is_empty()
    raise GraphError(f"unknown filter {filt!r}")


def iter_labeled(n: int, filt: str = "all", lo: int = 0, hi: int | None = None) -> Iterator[Graph]:
    """Labeled graphs on ``n`` vertices by ascending edge mask (edges in lexicographic order)."""
    if not 0 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumeration limited to n <= {MAX_ENUMERATION_ORDER}")
    m, tables = _edge_tables(n)
    hi = (1 << m) if hi is None else hi
    slices = range((m + 6) // 7)
    for mask in range(lo, hi):
        parts = [(mask >> (7 * s)) & 127 for s in slices]
        rows = tuple(sum(tables[v][s][parts[s]] for s in slices) for v in range(n))
        g = Graph.unchecked(n, rows)
        if _passes(g, filt):
            yield g


@dataclass(frozen=True)
class Corpus:
    """A named, chunkable stream of graphs.

    Either every labeled graph of each order in ``orders``, or an explicit
    graph6 list; ``filter`` applies to both.
    """

    corpus_id: str
    filter: str = "all"
    orders: tuple[int, ...] = ()
    graph6: tuple[str, ...] = ()

    def chunks(self, size: int = 4096) -> list[tuple]:
        out: list[tuple] = []
        for n in self.orders:
            total = 1 << (n * (n - 1) // 2)
            out += [("enum", n, self.filter, lo, min(lo + size, total)) for lo in range(0, total, size)]
        lines = self.graph6
        step = max(1, size // 16)
        out += [("list", self.filter, lines[i : i + step]) for i in range(0, len(lines), step)]
        return out

    def graphs(self) -> Iterator[Graph]:
        for chunk in self.chunks():
            yield from _materialise(chunk)


def _materialise(chunk: tuple) -> Iterator[Graph]:
    if chunk[0] == "enum":
        _, n, filt, lo, hi = chunk
        yield from iter_labeled(n, filt, lo, hi)
    else:
        _, filt, lines = chunk
        for line in lines:
            g = parse_graph6(line)
            if _passes(g, filt):
                yield g


def enumerate_labeled(n: int, filt: str = "all", lo: int | None = None) -> Corpus:
    """Labeled graphs of order ``n``, or of every order ``lo..n`` when ``lo`` is given."""
    if not 0 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumeration limited to n <= {MAX_ENUMERATION_ORDER}")
    if filt not in FILTERS:
        raise GraphError(f"unknown filter {filt!r}")
    if lo is None:
        return Corpus(f"labeled(n={n},{filt})", filt, (n,))
    return Corpus(f"labeled({lo}<=n<={n},{filt})", filt, tuple(range(lo, n + 1)))


def graph_list(corpus_id: str, graphs: Iterable[Graph], filt: str = "all") -> Corpus:
    return Corpus(corpus_id, filt, (), tuple(emit_graph6(g) for g in graphs))


def read_corpus(path_: str, filt: str = "all") -> Corpus:
    with open(path_, encoding="ascii") as fh:
        lines = tuple(ln.strip() for ln in fh if ln.strip() and not ln.startswith(">>graph6<<\n"))
    return Corpus(f"file({os.path.basename(path_)},{filt})", filt, (), lines)


def labeled_up_to(lo: int, hi: int, filt: str) -> list[Graph]:
    return [g for n in range(lo, hi + 1) for g in iter_labeled(n, filt)]


# -- per-graph facts, computed lazily and shared by every check on a graph --------


class Facts:
    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def gsp(self) -> int:
        return solvers.gamma_sp(self.g).value

    @cached_property
    def gamma(self) -> int:
        return solvers.gamma(self.g).value

    @cached_property
    def alpha(self) -> int:
        return solvers.alpha_k(self.g, 1).value

    @cached_property
    def tau(self) -> int:
        return solvers.tau(self.g).value

    @cached_property
    def connected(self) -> bool:
        return self.g.is_connected()

    @cached_property
    def decomposition(self):
        return recognize(self.g)


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def check_thm1(f: Facts):
    g, v = f.g, f.gsp
    is_k1_k2 = g.n in (1, 2) and g.is_complete()
    if (v == 1) != is_k1_k2:
        return "gsp=1 iff K1/K2", f"gsp={v}"
    if (v == g.n) != g.is_empty():
        return "gsp=n iff edgeless", f"gsp={v}, edgeless={g.is_empty()}"
    if v < _ceil_half(g.n):
        return f">= {_ceil_half(g.n)}", v
    return None


def check_eq2_chain(f: Facts):
    g = f.g
    if g.n < 2 or g.has_isolated_vertex():
        return SKIP
    chain = [1, f.gamma, _ceil_half(g.n), f.gsp, g.n - 1]
    if chain != sorted(chain):
        return "1 <= gamma <= ceil(n/2) <= gsp <= n-1", chain
    return None


def check_lemma2(f: Facts):
    if f.g.n < 2 or f.gsp != f.g.n - 1:
        return SKIP
    if has_induced_p4_or_c4(f.g):
        return "no induced P4 or C4", "found one"
    return None


def check_lemma3(f: Facts):
    g = f.g
    if g.n < 2 or not f.connected:
        return SKIP
    has_universal = any(g.is_universal(v) for v in g.vertices())
    if not has_universal and f.gsp > g.n - 2:
        return "gsp <= n-2 without a universal vertex", f.gsp
    return None


def check_thm7(f: Facts):
    g = f.g
    if g.n < 2 or not f.connected:
        return SKIP
    dec = f.decomposition
    if (dec is not None) != (f.gsp == g.n - 1):
        return f"member={dec is not None}", f"gsp={f.gsp}, n-1={g.n - 1}"
    if dec is not None:
        broken = neighbourhood_law_violations(g, dec)
        if broken:
            return "neighbourhood laws hold", broken
    return None


def check_gallai(f: Facts):
    if f.alpha + f.tau != f.g.n:
        return f.g.n, f"alpha={f.alpha}, tau={f.tau}"
    return None


def check_reduction(f: Facts):
    if f.g.n < 1 or not f.connected:
        return SKIP
    try:
        trace = formulas.alpha_via_reduction(f.g)
    except ReductionError as exc:
        return f"alpha={f.alpha}", str(exc)
    if trace.alpha != f.alpha:
        return f.alpha, trace.alpha
    return None


def _pattern_found(n: int, s: int, patterns: Sequence[Sequence[int]], cyclic: bool) -> bool:
    starts = range(n) if cyclic else range(n - 4)
    for i in starts:
        for pat in patterns:
            if all(s >> ((i + d) % n) & 1 for d in pat):
                return True
    return False


CYCLE_PATTERNS = ((0, 1, 2, 3, 4), (0, 2, 3, 4), (0, 1, 2, 4))


def lemma15_counterexamples(n: int) -> list[tuple[int, ...]]:
    """Subsets of ``Z_n`` of size ``floor(2n/3)+1`` containing none of the three window patterns."""
    bad = []
    for combo in combinations(range(n), (2 * n) // 3 + 1):
        s = sum(1 << v for v in combo)
        if not _pattern_found(n, s, CYCLE_PATTERNS, cyclic=True):
            bad.append(combo)
    return bad


def lemma18_counterexamples(n: int) -> list[tuple[int, ...]]:
    """Subsets of a path of size ``ceil(2n/3)+1`` with no inner window pattern and no full end triple."""
    bad = []
    for combo in combinations(range(n), -(-2 * n // 3) + 1):
        s = sum(1 << v for v in combo)
        ends = s & 0b111 == 0b111 or (s >> (n - 3)) & 0b111 == 0b111
        if not ends and not _pattern_found(n, s, CYCLE_PATTERNS, cyclic=False):
            bad.append(combo)
    return bad


def check_lemma15(f: Facts):
    if f.g.n < 5 or f.g != cycle(f.g.n):
        return SKIP
    bad = lemma15_counterexamples(f.g.n)
    return ("every set hits a pattern", bad[:3]) if bad else None


def check_lemma18(f: Facts):
    if f.g.n < 4 or f.g != path(f.g.n):
        return SKIP
    bad = lemma18_counterexamples(f.g.n)
    return ("every set hits a pattern", bad[:3]) if bad else None


SINGLE_CHECKS: dict[str, Callable[[Facts], object]] = {
    "eq2-chain": check_eq2_chain,
    "thm1": check_thm1,
    "lemma2": check_lemma2,
    "lemma3": check_lemma3,
    "thm7-familyF": check_thm7,
    "gallai": check_gallai,
    "cor-nphard-reduction": check_reduction,
    "lemma15": check_lemma15,
    "lemma18": check_lemma18,
}


# -- pair checks -----------------------------------------------------------------


class PairFacts:
    def __init__(self, g: Graph, h: Graph, op: str = "lex"):
        self.g, self.h, self.op = g, h, op

    @cached_property
    def product(self):
        return lex_product(self.g, [self.h]) if self.op == "lex" else join(self.g, self.h)

    @cached_property
    def solution(self) -> solvers.InvariantValue:
        return solvers.gamma_sp(self.product.base)

    @property
    def gsp(self) -> int:
        return self.solution.value


def _bound(kind: str, value: int, got: int, name: str):
    ok = got <= value if kind == "upper" else got >= value
    return None if ok else (f"{name} {'>=' if kind == 'upper' else '<='} {got}", value)


def check_remark_components(p: PairFacts):
    g, h = p.g, p.h
    if g.has_isolated_vertex() and not h.is_connected():
        return SKIP
    count = len(connected_components(p.product.base))
    expected = len(connected_components(g))
    if count != expected:
        return expected, count
    total = 0
    for comp in connected_components(g):
        part = lex_product(g.induced_subgraph(comp), [h]).base
        total += formulas.gsp(part)
    if total != p.gsp:
        return f"sum over components {total}", p.gsp
    return None


def check_lemma_important(p: PairFacts):
    if p.h.is_empty():
        return SKIP
    w = p.solution.witness.dom_set
    need = formulas.gsp(p.h)
    sizes = [len(project(p.product, w, i)) for i in range(p.g.n)]
    if min(sizes, default=need) < need:
        return f"every |W_g| >= {need}", sizes
    return None


def check_lemma_adjacent(p: PairFacts):
    w = p.solution.witness.dom_set
    outside = [p.h.n - len(project(p.product, w, i)) for i in range(p.g.n)]
    for x, y in p.g.edges():
        if outside[x] and outside[y] and (outside[x], outside[y]) != (1, 1):
            return "adjacent copies both missing exactly one vertex", (x, y, outside[x], outside[y])
    return None


def check_thm10(p: PairFacts):
    try:
        b = formulas.bound_main_upper(p.g, p.h)
    except Inapplicable:
        return SKIP
    if b.sharp is not None and b.general < b.sharp:
        return "general bound >= sharp bound", (b.general, b.sharp)
    return _bound("upper", b.value, p.gsp, "thm10")


def check_thm11(p: PairFacts):
    try:
        low = formulas.bound_trivial_lower(p.g, p.h)
        predicted = formulas.equality_trivial_lower(p.g, p.h)
    except Inapplicable:
        return SKIP
    failure = _bound("lower", low, p.gsp, "thm11")
    if failure:
        return failure
    if p.g.is_connected() and predicted != (p.gsp == low):
        return f"equality predicted={predicted}", f"gsp={p.gsp}, n*gsp(H)={low}"
    return None


def check_thm12(p: PairFacts):
    try:
        return _bound("upper", formulas.bound_min_upper(p.g, p.h), p.gsp, "thm12")
    except Inapplicable:
        return SKIP


def check_thm13(p: PairFacts):
    if not p.h.is_empty():
        return SKIP
    try:
        return _bound("upper", formulas.bound_empty_upper(p.g, p.h.n), p.gsp, "thm13")
    except Inapplicable:
        return SKIP


def _exact(predict: Callable[[], int], p: PairFacts):
    try:
        value = predict()
    except Inapplicable:
        return SKIP
    return None if value == p.gsp else (value, p.gsp)


def check_thm_equality(p: PairFacts):
    return _exact(lambda: formulas.exact_lex("large_gap", p.g, p.h), p)


def _family_check(kind: str):
    def check(p: PairFacts):
        for found, params in formulas.classify_first_factor(p.g):
            if found == kind:
                return _exact(lambda: formulas.exact_lex(kind, params, p.h), p)
        return SKIP

    return check


def _join_check(theorem: str):
    def check(p: PairFacts):
        value, used = formulas.exact_join(p.g, p.h)
        if used != theorem:
            return SKIP
        return None if value == p.gsp else (value, p.gsp)

    return check


PAIR_CHECKS: dict[str, tuple[str, Callable[[PairFacts], object]]] = {
    "remark-components": ("lex", check_remark_components),
    "lemma-important": ("lex", check_lemma_important),
    "lemma-adjacent": ("lex", check_lemma_adjacent),
    "thm10": ("lex", check_thm10),
    "thm11": ("lex", check_thm11),
    "thm12": ("lex", check_thm12),
    "thm13": ("lex", check_thm13),
    "thmEquality": ("lex", check_thm_equality),
    "prop14": ("lex", _family_check("complete")),
    "prop15": ("lex", _family_check("complete_bipartite")),
    "prop17": ("lex", _family_check("cycle")),
    "prop19": ("lex", _family_check("path")),
    "thm21": ("join", _join_check("thm21")),
    "thm22": ("join", _join_check("thm22")),
    "thm23": ("join", _join_check("thm23")),
}

THEOREMS: dict[str, str] = {
    "eq2-chain": "1 <= gamma <= ceil(n/2) <= gsp <= n-1 for graphs without isolated vertices",
    "thm1": "gsp = 1 iff K1 or K2; gsp = n iff edgeless; gsp >= ceil(n/2)",
    "lemma2": "gsp = n-1 forces no induced P4 and no induced C4",
    "lemma3": "connected without a universal vertex forces gsp <= n-2",
    "thm7-familyF": "connected, n >= 2: gsp = n-1 iff the graph is a layered clique/independent-set member of F",
    "remark-components": "components(G o H) = components(G), and gsp adds over components",
    "lemma-important": "every optimal W of G o H keeps at least gsp(H) vertices in each copy",
    "lemma-adjacent": "adjacent copies that both lose vertices each lose exactly one",
    "thm10": "gsp(G o H) <= alpha(G) gsp(H) + (n - alpha(G)) n', or n n' - alpha_2(G) when gsp(H) = n'-1, H noncomplete",
    "gallai": "alpha + tau = n",
    "thm11": "gsp(G o H) >= n gsp(H), with equality iff G = K2, gsp(H) = n'-1, H noncomplete",
    "thm12": "gsp(G o H) <= min(n(n'-1) + gsp(G), n'(n-1) + gsp(H))",
    "thm13": "gsp(G o N_n') <= n n' - 2 rho(L(G))",
    "thmEquality": "n' - gsp(H) > maxdeg(G) + 1 gives gsp(G o H) = alpha(G) gsp(H) + (n - alpha(G)) n'",
    "cor-nphard-reduction": "alpha(G) = 2n - gsp(G o tK2)/t for t = maxdeg(G) + 2",
    "prop14": "gsp(K_n o H): n n' - 2 if gsp(H) = n'-1, else n'(n-1) + gsp(H)",
    "prop15": "gsp(K_{r,t} o H) = t gsp(H) + r n'",
    "lemma15": "large subsets of a cycle contain one of three five-vertex window patterns",
    "prop17": "gsp(C_n o H): n n' - floor(2n/3), or floor(n/2) gsp(H) + n' ceil(n/2)",
    "lemma18": "large subsets of a path contain a window pattern or an end triple",
    "prop19": "gsp(P_n o H): n n' - ceil(2n/3), or ceil(n/2) gsp(H) + n' floor(n/2)",
    "thm21": "G, H with edges, noncomplete: gsp(G + H) = min(n + n' - 2, n + gsp(H), n' + gsp(G))",
    "thm22": "H neither edgeless nor complete: gsp(K_n + H) = n + gsp(H)",
    "thm23": "H neither edgeless nor complete, n >= 2: gsp(N_n + H) = min(n + n' - 2, n + gsp(H))",
}


# -- running checks ----------------------------------------------------------------


@dataclass
class TheoremCheck:
    theorem_id: str
    corpus_id: str
    instances: int = 0
    passes: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: TheoremCheck) -> None:
        self.instances += other.instances
        self.passes += other.passes
        self.skipped += other.skipped
        self.failures.extend(other.failures)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "corpus": self.corpus_id,
            "instances": self.instances,
            "passes": self.passes,
            "skipped": self.skipped,
            "failures": self.failures,
            "status": "pass" if self.passed else "fail",
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 1)
        return out


def _record(check: TheoremCheck, outcome, ids: list[str]) -> None:
    check.instances += 1
    if outcome is None:
        check.passes += 1
    elif outcome == SKIP:
        check.skipped += 1
    else:
        expected, got = outcome
        check.failures.append({"graphs": ids, "expected": _jsonable(expected), "got": _jsonable(got)})


def _jsonable(value):
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def _run_single_chunk(task: tuple) -> list[TheoremCheck]:
    theorem_ids, corpus_id, chunk, fail_fast = task
    checks = [TheoremCheck(t, corpus_id) for t in theorem_ids]
    fns = [SINGLE_CHECKS[t] for t in theorem_ids]
    for g in _materialise(chunk):
        facts = Facts(g)
        ident = None
        for check, fn in zip(checks, fns):
            outcome = fn(facts)
            if outcome is not None and outcome != SKIP and ident is None:
                ident = [emit_graph6(g)]
            _record(check, outcome, ident or [])
        if fail_fast and any(c.failures for c in checks):
            break
    return checks


def _run_pair_chunk(task: tuple) -> list[TheoremCheck]:
    theorem_ids, corpus_id, pairs = task
    checks = [TheoremCheck(t, corpus_id) for t in theorem_ids]
    for g6, h6 in pairs:
        g, h = parse_graph6(g6), parse_graph6(h6)
        facts = {op: PairFacts(g, h, op) for op in ("lex", "join")}
        for check in checks:
            op, fn = PAIR_CHECKS[check.theorem_id]
            _record(check, fn(facts[op]), [g6, h6])
    return checks


def worker_count() -> int:
    raw = os.environ.get("SUPERDOM_WORKERS")
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _fan_out(fn, tasks: list, workers: int | None) -> list:
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _merge(theorem_ids: Sequence[str], corpus_id: str, parts: list[list[TheoremCheck]], started: float):
    merged = [TheoremCheck(t, corpus_id) for t in theorem_ids]
    for part in parts:
        for total, piece in zip(merged, part):
            total.merge(piece)
    elapsed = (time.perf_counter() - started) * 1000
    for check in merged:
        check.elapsed_ms = elapsed
    return merged


def verify_many(
    theorem_ids: Sequence[str], corpus: Corpus, workers: int | None = None, fail_fast: bool = False
) -> list[TheoremCheck]:
    """Run several single-graph checks over one corpus, sharing solver work per graph."""
    for t in theorem_ids:
        if t not in SINGLE_CHECKS:
            raise UnknownTheorem(t)
    started = time.perf_counter()
    tasks = [(tuple(theorem_ids), corpus.corpus_id, chunk, fail_fast) for chunk in corpus.chunks()]
    parts = _fan_out(_run_single_chunk, tasks, workers)
    return _merge(theorem_ids, corpus.corpus_id, parts, started)


def verify(theorem_id: str, corpus: Corpus, workers: int | None = None, fail_fast: bool = False) -> TheoremCheck:
    if theorem_id not in SINGLE_CHECKS:
        if theorem_id in PAIR_CHECKS:
            raise UnknownTheorem(f"{theorem_id} is a product statement; use product_sweep")
        raise UnknownTheorem(theorem_id)
    return verify_many([theorem_id], corpus, workers, fail_fast)[0]


def product_sweep(
    g_graphs: Iterable[Graph],
    h_graphs: Iterable[Graph],
    theorem_ids: Sequence[str],
    cap: int = 16,
    corpus_id: str = "sweep",
    workers: int | None = None,
) -> list[TheoremCheck]:
    """Every pair within ``cap`` product vertices (sum of orders for joins), every listed statement."""
    if cap > 24:
        raise GraphError("product sweeps are capped at 24 vertices")
    for t in theorem_ids:
        if t not in PAIR_CHECKS:
            raise UnknownTheorem(t)
    ops = {PAIR_CHECKS[t][0] for t in theorem_ids}
    hs = [(emit_graph6(h), h.n) for h in h_graphs]
    pairs = []
    for g in g_graphs:
        g6 = emit_graph6(g)
        for h6, m in hs:
            size = g.n * m if "lex" in ops else 0
            if "join" in ops:
                size = max(size, g.n + m)
            if size <= cap:
                pairs.append((g6, h6))
    started = time.perf_counter()
    step = 64
    tasks = [(tuple(theorem_ids), corpus_id, tuple(pairs[i : i + step])) for i in range(0, len(pairs), step)]
    parts = _fan_out(_run_pair_chunk, tasks, workers)
    return _merge(theorem_ids, corpus_id, parts, started)


# -- campaign ----------------------------------------------------------------------


def campaign(max_n: int = 6, workers: int | None = None) -> list[TheoremCheck]:
    """Every statement over corpora scaled by ``max_n``; one result row per (statement, corpus)."""
    if not 2 <= max_n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"max_n must lie in 2..{MAX_ENUMERATION_ORDER}")
    results = verify_many(
        ["eq2-chain", "thm1", "lemma2", "lemma3", "thm7-familyF", "gallai"],
        enumerate_labeled(max_n, "all", lo=0),
        workers,
    )
    small = [g for n in range(1, min(max_n, 4) + 1) for g in iter_labeled(n, "connected")]
    results += verify_many(["cor-nphard-reduction"], graph_list(f"labeled(n<={min(max_n, 4)},connected)", small), workers)
    results += verify_many(["lemma15"], graph_list("cycles(5..12)", [cycle(n) for n in range(5, 13)]), workers)
    results += verify_many(["lemma18"], graph_list("paths(4..12)", [path(n) for n in range(4, 13)]), workers)

    top = min(max_n, 4)
    g_conn = labeled_up_to(2, top, "connected")
    h_nonempty = labeled_up_to(2, top, "nonempty")
    results += product_sweep(
        g_conn,
        h_nonempty,
        ["lemma-important", "lemma-adjacent", "thm10", "thm11", "thm12"],
        16,
        f"connected G n<={top} x nonempty H n'<={top}",
        workers,
    )
    results += product_sweep(
        labeled_up_to(1, top, "all"),
        labeled_up_to(1, top, "all"),
        ["remark-components"],
        16,
        f"all G n<={top} x all H n'<={top}",
        workers,
    )
    results += product_sweep(
        g_conn, [empty(m) for m in range(2, top + 1)], ["thm13"], 16, f"connected G n<={top} x N_n'", workers
    )
    gap_h = [disjoint_union(*[complete(2)] * t) for t in (2, 3, 4)]
    results += product_sweep(
        labeled_up_to(1, 3, "connected"), gap_h, ["thmEquality"], 24, "connected G n<=3 x tK2", workers
    )
    results += product_sweep(
        [complete(n) for n in range(2, 5)], labeled_up_to(1, 4, "all"), ["prop14"], 16, "K2..K4 x H n'<=4", workers
    )
    bip = [complete_bipartite(1, 2), complete_bipartite(2, 2), complete_bipartite(2, 3), complete_bipartite(1, 3)]
    results += product_sweep(bip, labeled_up_to(2, 3, "nonempty"), ["prop15"], 24, "K_{r,t} x H n'<=3", workers)
    results += product_sweep(
        [cycle(4), cycle(5)], [path(3), path(4)], ["prop17"], 24, "C4,C5 x P3,P4", workers
    )
    results += product_sweep(
        [path(n) for n in range(2, 6)], [path(3), path(4)], ["prop19"], 24, "P2..P5 x P3,P4", workers
    )
    every = labeled_up_to(1, top, "all")
    results += product_sweep(
        every, every, ["thm21", "thm22", "thm23"], 2 * top, f"all G,H n,n'<={top} (join)", workers
    )
    return results


# -- reports -----------------------------------------------------------------------


def report(checks: Sequence[TheoremCheck], fmt: str = "json", timing: bool = True) -> str:
    if fmt == "json":
        body = {
            "status": "pass" if all(c.passed for c in checks) else "fail",
            "checks": [c.to_json(timing) for c in checks],
        }
        return json.dumps(body, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["theorem_id", "corpus", "instances", "failures", "elapsed_ms"])
        for c in checks:
            writer.writerow([c.theorem_id, c.corpus_id, c.instances, len(c.failures), round(c.elapsed_ms, 1) if timing else ""])
        return buf.getvalue()
    if fmt == "markdown":
        lines = [
            "| theorem | corpus | instances | passes | skipped | failures | elapsed_ms |",
            "|---|---|---|---|---|---|---|",
        ]
        for c in checks:
            ms = f"{c.elapsed_ms:.1f}" if timing else ""
            lines.append(
                f"| {c.theorem_id} | {c.corpus_id} | {c.instances} | {c.passes} | {c.skipped} | {len(c.failures)} | {ms} |"
            )
        lines += ["", "| theorem | statement checked |", "|---|---|"]
        for tid in dict.fromkeys(c.theorem_id for c in checks):
            lines.append(f"| {tid} | {THEOREMS.get(tid, '')} |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")

"""Recursive evaluators for the independence polynomial.

Five interchangeable engines compute I(G, x):

* VERTEX branches on a pivot vertex: count the independent sets without
  it (delete) plus x times those with it (hide).
* EDGE branches on a pivot edge: delete it, then subtract x^|e| times
  the sets that contained all of e (delete + hide).
* EDGE_IE expands inclusion-exclusion over the nonempty vertex subsets
  of a pivot edge.
* EDGE_CONTRACT uses the deletion / contraction / endpoint-deletion
  three-term rule.
* ORACLE falls back to brute-force enumeration.

All engines return exactly the same polynomial for every pivot strategy.
Between steps the evaluator may eliminate loop vertices, duplicate edge
occurrences and edges containing another edge, memoize on the canonical
key and split into connected components; none of that changes the
result, only the size of the recursion tree.

A hypergraph containing an empty edge (extended mode) has no independent
set; every engine short-circuits it to the zero polynomial.  In strict
mode the steps follow the case analyses of the underlying recurrences;
in extended mode they emit the exception-free forms, where a branch that
creates an empty edge simply contributes zero.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator

from .hypergraph import Hypergraph, UnknownVertex
from .oracle import TooLarge, independence_poly_bf
from .polynomial import MultiPoly4, UniPoly

_ONE = UniPoly.one()
_X = UniPoly.x()

Combination = list[tuple[UniPoly, Hypergraph]]


class RecursionLimitExceeded(Exception):
    """The evaluator exceeded its configured recursion depth (diagnostic;
    unreachable for the terminating recurrences shipped here)."""


class NoPivotAvailable(Exception):
    """The strategy needs a vertex/edge the hypergraph does not have."""


class LoopNotSupported(Exception):
    """The edge recurrence requires |e| > 1 in strict mode."""


class EngineKind(Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    EDGE_IE = "edge-ie"
    EDGE_CONTRACT = "edge-contract"
    ORACLE = "oracle"


class PivotStrategy(Enum):
    MAX_DEGREE_VERTEX = "max-degree"
    MIN_VERTEX_ID = "min-vertex"
    SMALLEST_EDGE = "smallest-edge"
    FIRST_EDGE = "first-edge"


_VERTEX_STRATEGIES = (PivotStrategy.MAX_DEGREE_VERTEX, PivotStrategy.MIN_VERTEX_ID)


@dataclass(frozen=True)
class EvalConfig:
    """How to evaluate: which recurrence, which pivot, which plumbing.

    recursion_limit defaults to n(G) + m(G) + 2, enough for every
    terminating recurrence since each child strictly shrinks n + m.
    """

    engine: EngineKind = EngineKind.VERTEX
    pivot: PivotStrategy = PivotStrategy.MAX_DEGREE_VERTEX
    memoize: bool = True
    split_components: bool = True
    recursion_limit: int | None = None

    def __post_init__(self) -> None:
        if self.recursion_limit is not None and self.recursion_limit < 1:
            raise ValueError("recursion_limit must be positive")


@dataclass
class ComputationReport:
    """Result polynomial plus instrumentation for one evaluate() call."""

    poly: UniPoly
    nodes_visited: int = 0
    cache_hits: int = 0
    elapsed: float = 0.0


# -- pivot selection ---------------------------------------------------------


def _max_degree_vertex(g: Hypergraph) -> int:
    deg = dict.fromkeys(g.vertices, 0)
    for e in g.edges:
        for v in e:
            deg[v] += 1
    return min(g.vertices, key=lambda v: (-deg[v], v))


def _smallest_edge(g: Hypergraph) -> int:
    return min(range(g.num_edges), key=lambda i: (len(g.edges[i]), tuple(sorted(g.edges[i])), i))


def choose_pivot(g: Hypergraph, strategy: PivotStrategy) -> int:
    """Deterministic pivot: a vertex id for vertex strategies, an edge
    handle for edge strategies."""
    if strategy in _VERTEX_STRATEGIES:
        if not g.vertices:
            raise NoPivotAvailable("no vertices to pivot on")
        if strategy is PivotStrategy.MIN_VERTEX_ID:
            return min(g.vertices)
        return _max_degree_vertex(g)
    if not g.edges:
        raise NoPivotAvailable("no edges to pivot on")
    if strategy is PivotStrategy.FIRST_EDGE:
        return 0
    return _smallest_edge(g)


def _pivot_vertex(g: Hypergraph, strategy: PivotStrategy) -> int:
    """A vertex for the vertex engine; edge strategies pick their edge
    first and fall back to its smallest vertex."""
    if strategy in _VERTEX_STRATEGIES:
        return choose_pivot(g, strategy)
    if g.edges:
        e = g.edges[choose_pivot(g, strategy)]
        if e:
            return min(e)
    if not g.vertices:
        raise NoPivotAvailable("no vertices to pivot on")
    return min(g.vertices)


def _pivot_edge(g: Hypergraph, strategy: PivotStrategy) -> int:
    """An edge handle for the edge engines; vertex strategies pick their
    vertex first and fall back to its first incident occurrence."""
    if not g.edges:
        raise NoPivotAvailable("no edges to pivot on")
    if strategy not in _VERTEX_STRATEGIES:
        return choose_pivot(g, strategy)
    covered = {v for e in g.edges for v in e}
    if not covered:
        return 0  # only empty edges
    if strategy is PivotStrategy.MIN_VERTEX_ID:
        v = min(covered)
    else:
        deg: dict[int, int] = dict.fromkeys(covered, 0)
        for e in g.edges:
            for u in e:
                deg[u] += 1
        v = min(covered, key=lambda u: (-deg[u], u))
    for i, e in enumerate(g.edges):
        if v in e:
            return i
    raise NoPivotAvailable("no edge contains the chosen vertex")


# -- one-step expansions -------------------------------------------------------


def _subsets(vertices: frozenset[int], include_empty: bool) -> Iterator[frozenset[int]]:
    order = sorted(vertices)
    sizes = range(0 if include_empty else 1, len(order) + 1)
    for size in sizes:
        for combo in combinations(order, size):
            yield frozenset(combo)


def step_vertex(g: Hypergraph, v: int) -> Combination:
    """Branch on one vertex: [(1, G - v)] when a loop sits at v in strict
    mode, else [(1, G - v), (x, G with v hidden)].

    Extended mode always emits both children; hiding a looped vertex
    leaves an empty edge, which zeroes that branch.
    """
    if v not in g.vertices:
        raise UnknownVertex(f"vertex {v!r} not in hypergraph")
    deleted = g.delete_vertices((v,))
    if not g.extended and g.has_loop(v):
        return [(_ONE, deleted)]
    return [(_ONE, deleted), (_X, g.hide_vertices((v,)))]


def step_edge(g: Hypergraph, handle: int) -> Combination:
    """Branch on one edge occurrence e with |e| > 1.

    Strict mode: if another occurrence lies inside e (duplicates of e
    count), independent supersets of e cannot exist, so the answer is
    just [(1, G - e)]; otherwise [(1, G - e), (-x^|e|, G - e with e
    hidden)].  Extended mode always emits both children.
    """
    e = g.edge(handle)
    if not g.extended and len(e) <= 1:
        raise LoopNotSupported("edge recurrence requires |e| > 1 in strict mode")
    if g.extended and not e:
        raise LoopNotSupported("edge recurrence requires a nonempty pivot edge")
    deleted = g.delete_edge(handle)
    if not g.extended:
        if any(i != handle and f <= e for i, f in enumerate(g.edges)):
            return [(_ONE, deleted)]
    return [(_ONE, deleted), (-UniPoly.monomial(len(e)), deleted.hide_vertices(e))]


def step_edge_ie(g: Hypergraph, handle: int) -> Combination:
    """Inclusion-exclusion over one edge occurrence: for every nonempty
    W inside e, the child ((-1)^(|W|+1), G - W).

    Deleting any vertex of e removes the occurrence itself, so no
    explicit edge deletion is needed.
    """
    e = g.edge(handle)
    out: Combination = []
    for w in _subsets(e, include_empty=False):
        sign = 1 if len(w) % 2 else -1
        out.append((UniPoly((sign,)), g.delete_vertices(w)))
    return out


def step_edge_contract(g: Hypergraph, handle: int) -> Combination:
    """Deletion-contraction on one occurrence: (1, G - e),
    (-x^(|e|-1), G / e), (+x^(|e|-1), G minus the vertices of e)."""
    e = g.edge(handle)
    k = UniPoly.monomial(max(len(e) - 1, 0))
    return [
        (_ONE, g.delete_edge(handle)),
        (-k, g.contract_edge(handle)),
        (k, g.delete_vertices(e)),
    ]


def expand_vertex_subset(g: Hypergraph, u: Iterable[int]) -> Combination:
    """Expand over a vertex subset u: one child (x^|W|, hide W then
    delete the rest of u) per independent W inside u.

    Extended mode sums over *all* W inside u; a dependent W leaves an
    empty edge after hiding, so its branch contributes zero anyway.
    With u = {v} this reduces exactly to step_vertex.
    """
    ws = g._vertex_subset(u)
    out: Combination = []
    for w in _subsets(ws, include_empty=True):
        if not g.extended and not g.is_independent(w):
            continue
        child = g.hide_vertices(w).delete_vertices(ws - w)
        out.append((UniPoly.monomial(len(w)) if w else _ONE, child))
    return out


def expand_vertex_subset_ie(g: Hypergraph, u: Iterable[int]) -> Combination:
    """Inclusion-exclusion over a vertex subset u: (1, G - u) plus one
    child ((-1)^(|W|+1) x^|W|, G with W hidden) per nonempty independent
    W inside u."""
    ws = g._vertex_subset(u)
    out: Combination = [(_ONE, g.delete_vertices(ws))]
    for w in _subsets(ws, include_empty=False):
        if not g.is_independent(w):
            continue
        sign = 1 if len(w) % 2 else -1
        out.append((UniPoly.monomial(len(w), sign), g.hide_vertices(w)))
    return out


# -- full evaluation -----------------------------------------------------------


def _has_empty_edge(g: Hypergraph) -> bool:
    return any(not e for e in g.edges)


def _simplify(g: Hypergraph) -> Hypergraph:
    """Polynomial-preserving shrink applied between steps: drop duplicate
    and superset edges, then delete every loop vertex (no independent set
    contains one)."""
    if g.num_edges:
        g = g.normalize()
        loops = {v for e in g.edges if len(e) == 1 for v in e}
        if loops:
            g = g.delete_vertices(loops)
    return g


def _step(g: Hypergraph, cfg: EvalConfig) -> Combination:
    engine = cfg.engine
    if engine is EngineKind.VERTEX:
        return step_vertex(g, _pivot_vertex(g, cfg.pivot))
    handle = _pivot_edge(g, cfg.pivot)
    if engine is EngineKind.EDGE:
        e = g.edges[handle]
        if not g.extended and len(e) <= 1:
            # theorem hypothesis |e| > 1: fall back to the vertex rule on the loop
            return step_vertex(g, min(e))
        return step_edge(g, handle)
    if engine is EngineKind.EDGE_IE:
        return step_edge_ie(g, handle)
    if engine is EngineKind.EDGE_CONTRACT:
        return step_edge_contract(g, handle)
    raise AssertionError(f"unhandled engine {engine!r}")


def evaluate(g: Hypergraph, config: EvalConfig | None = None) -> ComputationReport:
    """Compute I(g, x) exactly with the configured engine.

    Every engine and every pivot strategy produces the same polynomial;
    the report carries the recursion size, cache hits and wall time.
    """
    cfg = config or EvalConfig()
    limit = cfg.recursion_limit
    if limit is None:
        limit = g.num_vertices + g.num_edges + 2
    cache: dict[bytes, UniPoly] = {}
    report = ComputationReport(UniPoly.zero())
    start = time.perf_counter()

    def rec(h: Hypergraph, depth: int) -> UniPoly:
        report.nodes_visited += 1
        if depth > limit:
            raise RecursionLimitExceeded(f"depth {depth} exceeds limit {limit}")
        if _has_empty_edge(h):
            return UniPoly.zero()
        h = _simplify(h)
        if not h.edges:
            return UniPoly.one_plus_x_power(h.num_vertices)
        key = h.canonical_key() if cfg.memoize else None
        if key is not None:
            hit = cache.get(key)
            if hit is not None:
                report.cache_hits += 1
                return hit
        components = h.connected_components() if cfg.split_components else []
        if len(components) > 1:
            poly = _ONE
            for comp in components:
                poly = poly * rec(h.induced_subgraph(comp), depth + 1)
        elif cfg.engine is EngineKind.ORACLE:
            poly = independence_poly_bf(h)
        else:
            poly = UniPoly.zero()
            for coeff, child in _step(h, cfg):
                poly = poly + coeff * rec(child, depth + 1)
        if key is not None:
            cache[key] = poly
        return poly

    old_limit = sys.getrecursionlimit()
    needed = 4 * (g.num_vertices + g.num_edges) + 1000
    if needed > old_limit:
        sys.setrecursionlimit(needed)
    try:
        report.poly = rec(g, 0)
    finally:
        if needed > old_limit:
            sys.setrecursionlimit(old_limit)
    report.elapsed = time.perf_counter() - start
    return report


# -- identity checkers -----------------------------------------------------


def check_subdivision_identity(
    g: Hypergraph, handle: int, config: EvalConfig | None = None
) -> bool:
    """Verify I(G) = I(G subdivided at e) - x^(|e|-1) * I(G / e)
    + (x^(|e|-1) - x) * I(G minus the vertices of e), exactly."""
    e = g.edge(handle)
    k = len(e) - 1
    lhs = evaluate(g, config).poly
    sub = evaluate(g.subdivide_edge(handle), config).poly
    con = evaluate(g.contract_edge(handle), config).poly
    del_verts = evaluate(g.delete_vertices(e), config).poly
    rhs = sub - UniPoly.monomial(k) * con + (UniPoly.monomial(k) - _X) * del_verts
    return lhs == rhs


def check_sigma_identity(g: Hypergraph, handle: int, config: EvalConfig | None = None) -> bool:
    """Verify that the independent-set count satisfies
    sigma(G) = sigma(G subdivided at e) - sigma(G / e)."""
    g.edge(handle)
    sigma = evaluate(g, config).poly(1)
    sigma_sub = evaluate(g.subdivide_edge(handle), config).poly(1)
    sigma_con = evaluate(g.contract_edge(handle), config).poly(1)
    return sigma == sigma_sub - sigma_con


# -- four-variable subgraph counting -------------------------------------------


def gscp_eval(
    g: Hypergraph,
    max_vertices: int = 12,
    max_edges: int = 12,
) -> MultiPoly4:
    """The subgraph counting polynomial via its edge recurrence.

    Branches on a smallest nonempty edge e into deletion, contraction,
    endpoint deletion, and the inclusion-exclusion sum over the nonempty
    vertex subsets of e; edgeless graphs contribute (1 + v*x)^n.  Empty
    edges factor out: each one multiplies the result by (1 + y)*z, since
    it lies inside every vertex subset and joins no component.
    """
    if g.num_vertices > max_vertices or g.num_edges > max_edges:
        raise TooLarge(
            f"n={g.num_vertices}, m={g.num_edges} exceeds the gscp bounds "
            f"({max_vertices}, {max_edges})"
        )
    one = MultiPoly4.one()
    vx = MultiPoly4.monomial((1, 1, 0, 0))
    z = MultiPoly4.var("z")
    empty_edge_factor = (one + MultiPoly4.var("y")) * z
    cache: dict[bytes, MultiPoly4] = {}

    def rec(h: Hypergraph) -> MultiPoly4:
        key = h.canonical_key()
        hit = cache.get(key)
        if hit is not None:
            return hit
        empties = sum(1 for e in h.edges if not e)
        if empties:
            rest = Hypergraph(h.vertices, (e for e in h.edges if e), h.extended)
            result = rec(rest) * empty_edge_factor**empties
        elif not h.edges:
            result = (one + vx) ** h.num_vertices
        else:
            handle = _smallest_edge(h)
            e = h.edges[handle]
            vyz = MultiPoly4.monomial((len(e) - 1, 0, 1, 1))
            result = z * rec(h.delete_edge(handle))
            result = result + vyz * rec(h.contract_edge(handle))
            result = result - vyz * rec(h.delete_vertices(e))
            acc = MultiPoly4.zero()
            for b in _subsets(e, include_empty=False):
                sign = -1 if len(b) % 2 else 1
                acc = acc + rec(h.delete_vertices(b)) * sign
            result = result + (z - one) * acc
        cache[key] = result
        return result

    return rec(g)

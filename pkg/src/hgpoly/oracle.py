"""Brute-force ground truth by exhaustive subset enumeration.

Everything here trades speed for being obviously correct: subsets are
walked with a plain binary counter over the sorted vertex labels, each
one tested directly against the definition.  The recurrence engines are
validated against these functions on every instance the tests touch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Hypergraph, UnknownVertex
from .polynomial import MultiPoly4, UniPoly

DEFAULT_MAX_VERTICES = 24
DEFAULT_GSCP_MAX = 10


class TooLarge(Exception):
    """Instance exceeds the configured enumeration bound."""


@dataclass(frozen=True)
class RestrictionSpec:
    """Constrains which independent sets are enumerated.

    must_include and must_exclude are disjoint vertex sets; only
    independent sets containing all of the former and none of the latter
    are counted.
    """

    must_include: frozenset[int] = frozenset()
    must_exclude: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "must_include", frozenset(self.must_include))
        object.__setattr__(self, "must_exclude", frozenset(self.must_exclude))
        if self.must_include & self.must_exclude:
            raise ValueError("must_include and must_exclude overlap")


def _masks(g: Hypergraph) -> tuple[list[int], dict[int, int], list[int]]:
    order = sorted(g.vertices)
    pos = {v: i for i, v in enumerate(order)}
    edge_masks = [sum(1 << pos[v] for v in e) for e in g.edges]
    return order, pos, edge_masks


def independence_poly_bf(g: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> UniPoly:
    """Sum x^|W| over all independent W, by checking every vertex subset."""
    n = g.num_vertices
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the enumeration bound {max_vertices}")
    _, _, edge_masks = _masks(g)
    counts = [0] * (n + 1)
    for w in range(1 << n):
        if not any(w & mask == mask for mask in edge_masks):
            counts[bin(w).count("1")] += 1
    return UniPoly(counts)


def restricted_independence_poly_bf(
    g: Hypergraph,
    restriction: RestrictionSpec,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> UniPoly:
    """Like independence_poly_bf, restricted to sets containing must_include
    and avoiding must_exclude."""
    n = g.num_vertices
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the enumeration bound {max_vertices}")
    for v in sorted(restriction.must_include | restriction.must_exclude):
        if v not in g.vertices:
            raise UnknownVertex(f"vertex {v!r} not in hypergraph")
    _, pos, edge_masks = _masks(g)
    inc = sum(1 << pos[v] for v in restriction.must_include)
    exc = sum(1 << pos[v] for v in restriction.must_exclude)
    counts = [0] * (n + 1)
    for w in range(1 << n):
        if w & inc != inc or w & exc:
            continue
        if not any(w & mask == mask for mask in edge_masks):
            counts[bin(w).count("1")] += 1
    return UniPoly(counts)


def vertex_cover_poly_bf(g: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> UniPoly:
    """Sum x^|W| over all vertex covers W (sets meeting every edge occurrence)."""
    n = g.num_vertices
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the enumeration bound {max_vertices}")
    _, _, edge_masks = _masks(g)
    counts = [0] * (n + 1)
    for w in range(1 << n):
        if all(w & mask for mask in edge_masks):
            counts[bin(w).count("1")] += 1
    return UniPoly(counts)


def sigma_bf(g: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """Number of independent sets: the independence polynomial at 1."""
    return independence_poly_bf(g, max_vertices)(1)


def _component_count(members: frozenset[int], edges: list[frozenset[int]]) -> int:
    """Connected components of the subgraph (members, edges), isolated
    vertices included; empty edges connect nothing."""
    parent = {v: v for v in members}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in edges:
        it = iter(e)
        first = next(it, None)
        if first is None:
            continue
        ra = find(first)
        for v in it:
            rb = find(v)
            if ra != rb:
                parent[rb] = ra
    return len({find(v) for v in members})


def gscp_bf(
    g: Hypergraph,
    max_vertices: int = DEFAULT_GSCP_MAX,
    max_edges: int = DEFAULT_GSCP_MAX,
) -> MultiPoly4:
    """Subgraph generating function in v, x, y, z by full enumeration.

    Every subgraph H = (W, F) is visited: W over vertex subsets, F over
    sub-multisets of the edge occurrences inside W.  The term records
    |W|, the component count of H, |F|, and the occurrence count of the
    induced subgraph G[W].
    """
    n, m = g.num_vertices, g.num_edges
    if n > max_vertices or m > max_edges:
        raise TooLarge(f"n={n}, m={m} exceeds the gscp bounds ({max_vertices}, {max_edges})")
    order = sorted(g.vertices)
    terms: dict[tuple[int, int, int, int], int] = {}
    for w_bits in range(1 << n):
        members = frozenset(order[i] for i in range(n) if w_bits >> i & 1)
        inside = [e for e in g.edges if e <= members]
        z_exp = len(inside)
        for f_bits in range(1 << z_exp):
            chosen = [inside[i] for i in range(z_exp) if f_bits >> i & 1]
            k = _component_count(members, chosen)
            key = (len(members), k, len(chosen), z_exp)
            terms[key] = terms.get(key, 0) + 1
    return MultiPoly4(terms)

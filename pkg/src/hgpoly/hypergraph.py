"""Immutable hypergraph values and the vertex/edge operations on them.

A hypergraph is a set of integer-labelled vertices plus a *multiset* of
edges, each edge a set of vertices.  Edges are stored as a tuple of
frozensets, so duplicate occurrences are preserved and every occurrence
is addressable by its index (the "handle" taken by the edge operations).
Vertex labels are stable: no operation ever renumbers surviving vertices.

Strict hypergraphs forbid empty edges.  The extended variant allows
them; a hypergraph with an empty edge has no independent set and no
vertex cover at all.

All operations are pure: they validate their arguments, then build and
return a new Hypergraph.  Values are safe to share between threads.
"""

from __future__ import annotations

from typing import Iterable


class HypergraphError(Exception):
    """Base class for hypergraph operation errors."""


class UnknownVertex(HypergraphError):
    """A vertex argument is not in the hypergraph's vertex set."""


class UnknownEdge(HypergraphError):
    """An edge handle does not identify an edge occurrence."""


class WouldCreateEmptyEdge(HypergraphError):
    """Hiding these vertices would empty an edge of a strict hypergraph."""


class EmptyEdgeContraction(HypergraphError):
    """Contraction of an empty edge is undefined."""


class EmptyEdgeSubdivision(HypergraphError):
    """Subdivision of an empty edge is undefined."""


class Hypergraph:
    """A labelled hypergraph: vertex set, edge multiset, strict/extended mode.

    Equality is labelled multiset equality: same vertices, same edge
    multiset (occurrence order is irrelevant), same mode.
    """

    __slots__ = ("vertices", "edges", "extended")

    vertices: frozenset[int]
    edges: tuple[frozenset[int], ...]
    extended: bool

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[Iterable[int]] = (),
        extended: bool = False,
    ) -> None:
        vs = frozenset(vertices)
        for v in vs:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex labels must be non-negative ints, got {v!r}")
        es = tuple(frozenset(e) for e in edges)
        for e in es:
            if not e and not extended:
                raise ValueError("strict hypergraphs cannot contain an empty edge")
            if not e <= vs:
                raise UnknownVertex(f"edge {sorted(e)} uses vertices outside {sorted(vs)}")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "extended", bool(extended))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Hypergraph values are immutable")

    @classmethod
    def edgeless(cls, n: int, extended: bool = False) -> Hypergraph:
        """The edgeless hypergraph on vertices 0..n-1."""
        return cls(range(n), (), extended)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    # -- lookups ---------------------------------------------------------

    def edge(self, handle: int) -> frozenset[int]:
        """The edge occurrence at the given index."""
        if not isinstance(handle, int) or not 0 <= handle < len(self.edges):
            raise UnknownEdge(f"no edge occurrence {handle!r}")
        return self.edges[handle]

    def find_edge(self, members: Iterable[int]) -> int:
        """Handle of the first occurrence equal to the given vertex set."""
        target = frozenset(members)
        for i, e in enumerate(self.edges):
            if e == target:
                return i
        raise UnknownEdge(f"no edge {sorted(target)}")

    def degree(self, v: int) -> int:
        """Number of edge occurrences containing v."""
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v!r} not in hypergraph")
        return sum(1 for e in self.edges if v in e)

    def has_loop(self, v: int) -> bool:
        """True if some occurrence is exactly {v}."""
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v!r} not in hypergraph")
        return any(len(e) == 1 and v in e for e in self.edges)

    def _vertex_subset(self, w: Iterable[int]) -> frozenset[int]:
        ws = frozenset(w)
        if not ws <= self.vertices:
            missing = sorted(ws - self.vertices)
            raise UnknownVertex(f"vertices {missing} not in hypergraph")
        return ws

    # -- vertex operations -----------------------------------------------

    def delete_vertices(self, w: Iterable[int]) -> Hypergraph:
        """Remove the vertices of w and every edge occurrence touching them.

        Empty edges intersect nothing, so they survive any deletion.
        """
        ws = self._vertex_subset(w)
        return Hypergraph(
            self.vertices - ws,
            (e for e in self.edges if not e & ws),
            self.extended,
        )

    def hide_vertices(self, w: Iterable[int]) -> Hypergraph:
        """Remove the vertices of w from the vertex set and from each edge.

        Occurrence order is preserved; duplicates that arise are kept.  In
        strict mode hiding is undefined when some edge lies inside w, since
        that edge would become empty; extended mode keeps the empty edge.
        """
        ws = self._vertex_subset(w)
        if not self.extended:
            for e in self.edges:
                if e <= ws:
                    raise WouldCreateEmptyEdge(
                        f"hiding {sorted(ws)} would empty edge {sorted(e)}"
                    )
        return Hypergraph(
            self.vertices - ws,
            (e - ws for e in self.edges),
            self.extended,
        )

    # -- edge operations ---------------------------------------------------

    def delete_edge(self, handle: int) -> Hypergraph:
        """Remove exactly one edge occurrence; vertices are untouched."""
        self.edge(handle)
        return Hypergraph(
            self.vertices,
            (e for i, e in enumerate(self.edges) if i != handle),
            self.extended,
        )

    def contract_edge(self, handle: int) -> Hypergraph:
        """Remove the occurrence and unify its vertices into min(e).

        Every other edge meeting e is rewritten to (f - e) | {min(e)};
        duplicates and loops that arise are kept.  Contracting a loop
        removes just that occurrence and keeps the vertex.
        """
        e = self.edge(handle)
        if not e:
            raise EmptyEdgeContraction("cannot contract an empty edge")
        survivor = min(e)
        new_edges = []
        for i, f in enumerate(self.edges):
            if i == handle:
                continue
            new_edges.append((f - e) | {survivor} if f & e else f)
        return Hypergraph((self.vertices - e) | {survivor}, new_edges, self.extended)

    def subdivide_edge(self, handle: int) -> Hypergraph:
        """Replace the occurrence by a fresh center vertex joined to each endpoint.

        The center is max(V) + 1; the two-vertex edges {v, d} are appended
        in ascending order of v.
        """
        e = self.edge(handle)
        if not e:
            raise EmptyEdgeSubdivision("cannot subdivide an empty edge")
        d = max(self.vertices) + 1 if self.vertices else 0
        edges = [f for i, f in enumerate(self.edges) if i != handle]
        edges.extend(frozenset((v, d)) for v in sorted(e))
        return Hypergraph(self.vertices | {d}, edges, self.extended)

    # -- neighborhoods and subgraphs ---------------------------------------

    def open_neighborhood(self, w: Iterable[int]) -> frozenset[int]:
        """Vertices sharing an edge with a *different* member of w.

        A member of w itself belongs to the result when it is co-edged
        with another member.
        """
        ws = self._vertex_subset(w)
        out: set[int] = set()
        for e in self.edges:
            hit = e & ws
            if not hit:
                continue
            out |= e - hit
            if len(hit) >= 2:
                out |= hit
        return frozenset(out)

    def closed_neighborhood(self, w: Iterable[int]) -> frozenset[int]:
        ws = self._vertex_subset(w)
        return self.open_neighborhood(ws) | ws

    def induced_subgraph(self, w: Iterable[int]) -> Hypergraph:
        """Vertex set w with every edge occurrence lying fully inside w."""
        ws = self._vertex_subset(w)
        return Hypergraph(ws, (e for e in self.edges if e <= ws), self.extended)

    def connected_components(self) -> list[frozenset[int]]:
        """Partition of the vertices into maximal edge-connected sets.

        Isolated vertices form singleton components; empty edges belong to
        no component.  Ordered by smallest vertex label.
        """
        parent = {v: v for v in self.vertices}

        def find(a: int) -> int:
            root = a
            while parent[root] != root:
                root = parent[root]
            while parent[a] != root:
                parent[a], a = root, parent[a]
            return root

        for e in self.edges:
            it = iter(e)
            first = next(it, None)
            if first is None:
                continue
            ra = find(first)
            for v in it:
                rb = find(v)
                if ra != rb:
                    parent[rb] = ra
        groups: dict[int, set[int]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), set()).add(v)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    # -- predicates ----------------------------------------------------------

    def is_independent(self, w: Iterable[int]) -> bool:
        """True iff no edge occurrence lies inside w.

        An empty edge lies inside every w, so its presence forces False.
        """
        ws = self._vertex_subset(w)
        return not any(e <= ws for e in self.edges)

    def is_vertex_cover(self, w: Iterable[int]) -> bool:
        """True iff every edge occurrence meets w; an empty edge defeats every w."""
        ws = self._vertex_subset(w)
        return all(e & ws for e in self.edges)

    # -- canonical form ----------------------------------------------------

    def normalize(self) -> Hypergraph:
        """Drop duplicate occurrences and edges that properly contain another edge.

        Preserves the independence and vertex cover polynomials exactly: a
        set includes a superset edge only if it includes the contained edge.
        """
        distinct = set(self.edges)
        kept: list[frozenset[int]] = []
        seen: set[frozenset[int]] = set()
        for e in self.edges:
            if e in seen:
                continue
            seen.add(e)
            if any(f < e for f in distinct):
                continue
            kept.append(e)
        return Hypergraph(self.vertices, kept, self.extended)

    def canonical_key(self) -> bytes:
        """Deterministic encoding up to order-preserving relabelling.

        Vertices are relabelled 0..n-1 in ascending order; edges become
        sorted id lists, the multiset sorted lexicographically; the mode
        flag is appended.  Equal keys mean identical labelled structure
        (this is not isomorphism canonicalization).
        """
        rank = {v: i for i, v in enumerate(sorted(self.vertices))}
        edges = sorted(tuple(sorted(rank[u] for u in e)) for e in self.edges)
        return repr((len(rank), edges, self.extended)).encode("ascii")

    # -- value semantics ----------------------------------------------------

    def _multiset(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(e)) for e in self.edges))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Hypergraph):
            return (
                self.vertices == other.vertices
                and self.extended == other.extended
                and self._multiset() == other._multiset()
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.vertices, self._multiset(), self.extended))

    def __repr__(self) -> str:
        mode = ", extended" if self.extended else ""
        edges = [sorted(e) for e in self.edges]
        return f"Hypergraph({sorted(self.vertices)}, {edges}{mode})"

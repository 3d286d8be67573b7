"""Immutable undirected simple graphs with stable integer vertex ids.

Every editing operation returns a new graph; vertex ids are never renumbered,
so traces produced by the reduction rules can always refer to original ids.
"""

from __future__ import annotations

from typing import Iterable


class Graph:
    """Undirected simple graph. Immutable after construction."""

    __slots__ = ("_adj", "_verts", "_edges", "_bits")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._verts = tuple(sorted(self._adj))
        self._edges: tuple[tuple[int, int], ...] | None = None
        self._bits: tuple[tuple[int, ...], dict[int, int], list[int]] | None = None

    # -- basic queries -------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._verts

    @property
    def n(self) -> int:
        return len(self._verts)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            self._edges = tuple(
                sorted((u, v) for u in self._verts for v in self._adj[u] if u < v)
            )
        return self._edges

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors_of_set(self, xs: Iterable[int]) -> frozenset[int]:
        """N(X): vertices outside X adjacent to some vertex of X."""
        xs = set(xs)
        out: set[int] = set()
        for x in xs:
            out |= self._adj[x]
        return frozenset(out - xs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._verts == other._verts and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._verts, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- bitmask view (used by the obstruction searches) ---------------------

    def bit_adjacency(self) -> tuple[tuple[int, ...], dict[int, int], list[int]]:
        """Return (vertices, vertex->index, adjacency masks over indices)."""
        if self._bits is None:
            verts = self._verts
            index = {v: i for i, v in enumerate(verts)}
            masks = [0] * len(verts)
            for v in verts:
                b = 0
                for w in self._adj[v]:
                    b |= 1 << index[w]
                masks[index[v]] = b
            self._bits = (verts, index, masks)
        return self._bits

    # -- editing (all return new graphs) -------------------------------------

    def induced_subgraph(self, xs: Iterable[int]) -> "Graph":
        """G[X]: the subgraph induced on X, keeping vertex ids."""
        xs = set(xs)
        unknown = xs - set(self._adj)
        if unknown:
            raise ValueError(f"unknown vertex ids: {sorted(unknown)}")
        g = Graph.__new__(Graph)
        g._adj = {v: self._adj[v] & xs for v in xs}
        g._verts = tuple(sorted(xs))
        g._edges = None
        g._bits = None
        return g

    def delete_vertices(self, xs: Iterable[int]) -> "Graph":
        """G \\ X: remove the vertices in X and all incident edges."""
        xs = set(xs)
        unknown = xs - set(self._adj)
        if unknown:
            raise ValueError(f"unknown vertex ids: {sorted(unknown)}")
        return self.induced_subgraph(set(self._adj) - xs)

    def delete_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Remove the given edges, keeping all vertices."""
        drop: set[frozenset[int]] = set()
        for u, v in edges:
            if u not in self._adj or v not in self._adj[u]:
                raise ValueError(f"edge ({u}, {v}) not present")
            drop.add(frozenset((u, v)))
        kept = [(u, v) for u, v in self.edges if frozenset((u, v)) not in drop]
        return Graph(self._verts, kept)

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Add edges between existing vertices (already-present edges are fine)."""
        extra = []
        for u, v in edges:
            if u not in self._adj or v not in self._adj:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
            extra.append((u, v))
        return Graph(self._verts, list(self.edges) + extra)


# -- free functions mirroring the library surface ---------------------------


def induced_subgraph(g: Graph, xs: Iterable[int]) -> Graph:
    return g.induced_subgraph(xs)


def delete_vertices(g: Graph, xs: Iterable[int]) -> Graph:
    return g.delete_vertices(xs)


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return g.delete_edges(edges)


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components, each ascending, list sorted by smallest member."""
    seen: set[int] = set()
    out: list[tuple[int, ...]] = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        out.append(tuple(sorted(comp)))
    out.sort(key=lambda c: c[0])
    return out


def true_twin_partition(g: Graph, scope: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Partition `scope` into maximal true twin classes of G[scope].

    Two vertices are true twins when their closed neighborhoods coincide, so
    refinement by hashing closed neighborhoods inside the scope is exact.
    Classes are returned ascending, sorted by smallest member.
    """
    if scope is None:
        scope_set = set(g.vertices)
    else:
        scope_set = set(scope)
        unknown = scope_set - set(g.vertices)
        if unknown:
            raise ValueError(f"unknown vertex ids: {sorted(unknown)}")
    groups: dict[frozenset[int], list[int]] = {}
    for v in sorted(scope_set):
        key = (g.neighbors(v) & scope_set) | {v}
        groups.setdefault(frozenset(key), []).append(v)
    classes = [tuple(sorted(vs)) for vs in groups.values()]
    classes.sort(key=lambda c: c[0])
    return classes


def is_complete_to(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> bool:
    """True iff every x-y pair (x in X, y in Y) is an edge. X, Y must be disjoint."""
    xs, ys = set(xs), set(ys)
    if xs & ys:
        raise ValueError("sets overlap")
    return all(ys <= g.neighbors(x) for x in xs)


def is_anticomplete_to(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> bool:
    """True iff no x-y pair is an edge. X, Y must be disjoint."""
    xs, ys = set(xs), set(ys)
    if xs & ys:
        raise ValueError("sets overlap")
    return all(not (ys & g.neighbors(x)) for x in xs)


def is_clique(g: Graph, xs: Iterable[int]) -> bool:
    xs = list(xs)
    return all(g.has_edge(xs[i], xs[j]) for i in range(len(xs)) for j in range(i + 1, len(xs)))

"""Shared helpers: networkx-based independent checkers and small builders.

The checkers here deliberately avoid the library's own recognition routines,
so that tests compare two unrelated implementations.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from leafpower.graph import Graph

# 5-vertex forbidden patterns, built independently from the library
BULL_NX = nx.Graph([(0, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
DART_NX = nx.Graph([(0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
GEM_NX = nx.Graph([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])

_PATTERNS_NX = [
    (BULL_NX, (1, 1, 2, 3, 3)),
    (DART_NX, (1, 2, 2, 3, 4)),
    (GEM_NX, (2, 2, 3, 3, 4)),
]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    return Graph(sorted(h.nodes), [tuple(sorted(e)) for e in h.edges])


def has_induced_bull_dart_gem(h: nx.Graph) -> bool:
    nodes = sorted(h.nodes)
    adj = {v: set(h[v]) for v in nodes}
    for sub in combinations(nodes, 5):
        subset = set(sub)
        degs = tuple(sorted(len(adj[v] & subset) for v in sub))
        for pattern, pdegs in _PATTERNS_NX:
            if degs == pdegs and nx.is_isomorphic(h.subgraph(sub), pattern):
                return True
    return False


def brute_is_three_leaf_power(h: nx.Graph) -> bool:
    """Reference definition: chordal and no induced bull, dart, or gem."""
    if h.number_of_nodes() == 0:
        return True
    if not nx.is_chordal(h):
        return False
    return not has_induced_bull_dart_gem(h)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(range(n), edges)


def cycle_graph(n: int, offset: int = 0) -> Graph:
    vs = list(range(offset, offset + n))
    edges = [(vs[i], vs[(i + 1) % n]) for i in range(n)]
    return Graph(vs, [tuple(sorted(e)) for e in edges])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if set(a.vertices) & set(b.vertices):
        raise ValueError("vertex sets overlap")
    return Graph(list(a.vertices) + list(b.vertices), list(a.edges) + list(b.edges))

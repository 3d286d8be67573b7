"""Recognition of 3-leaf powers with obstruction witnesses.

A graph is a 3-leaf power exactly when it is chordal and has no induced bull,
dart, or gem.  Equivalently, every connected component is a "tree of cliques":
the quotient by maximal true twin classes is a tree.  Both routes are
implemented; the twin-quotient route powers `is_three_leaf_power` and
`tree_clique_decomposition`, while the witness-producing route powers
`find_obstruction`.

Witness role orders (fixed, so traces are reproducible):
  bull  (horn1, horn2, base1, base2, apex):
        edges horn1-base1, horn2-base2, base1-base2, base1-apex, base2-apex
  dart  (pendant, tip1, tip2, mid, center):
        center adjacent to all four others; mid adjacent to tip1 and tip2
  gem   (apex, p1, p2, p3, p4): apex adjacent to all of the path p1-p2-p3-p4
  hole  vertices listed in cyclic order
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations

from .graph import Graph, components, is_clique, true_twin_partition

BULL = "bull"
DART = "dart"
GEM = "gem"
HOLE = "hole"

_PATTERNS = {
    BULL: ((0, 2), (1, 3), (2, 3), (2, 4), (3, 4)),
    DART: ((0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)),
    GEM: ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)),
    HOLE: ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)),  # C5
}
_C4_EDGES = ((0, 1), (1, 2), (2, 3), (0, 3))

_PAIRS5 = tuple((a, b) for a in range(5) for b in range(a + 1, 5))
_PAIRS4 = tuple((a, b) for a in range(4) for b in range(a + 1, 4))
_BIT5 = {p: i for i, p in enumerate(_PAIRS5)}
_BIT4 = {p: i for i, p in enumerate(_PAIRS4)}


def _build_tables():
    table5: dict[int, tuple[str, tuple[int, ...]]] = {}
    for kind in (BULL, DART, GEM, HOLE):
        edges = _PATTERNS[kind]
        for sigma in permutations(range(5)):
            mask = 0
            for r, s in edges:
                a, b = sorted((sigma[r], sigma[s]))
                mask |= 1 << _BIT5[(a, b)]
            table5.setdefault(mask, (kind, sigma))
    table4: dict[int, tuple[int, ...]] = {}
    for sigma in permutations(range(4)):
        mask = 0
        for r, s in _C4_EDGES:
            a, b = sorted((sigma[r], sigma[s]))
            mask |= 1 << _BIT4[(a, b)]
        table4.setdefault(mask, sigma)
    return table5, table4


_TABLE5, _TABLE4 = _build_tables()


@dataclass(frozen=True)
class Obstruction:
    """Witness that a graph is not a 3-leaf power."""

    kind: str
    vertices: tuple[int, ...]

    @property
    def is_small(self) -> bool:
        return len(self.vertices) <= 5

    def check(self, g: Graph) -> bool:
        """Verify the witness against g under the documented role order."""
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(v not in g for v in vs):
            return False
        if self.kind == HOLE:
            n = len(vs)
            if n < 4:
                return False
            for i, j in combinations(range(n), 2):
                adjacent = g.has_edge(vs[i], vs[j])
                on_cycle = (j - i == 1) or (i == 0 and j == n - 1)
                if adjacent != on_cycle:
                    return False
            return True
        if len(vs) != 5 or self.kind not in (BULL, DART, GEM):
            return False
        want = {frozenset(e) for e in _PATTERNS[self.kind]}
        for i, j in combinations(range(5), 2):
            if g.has_edge(vs[i], vs[j]) != (frozenset((i, j)) in want):
                return False
        return True


class NotLeafPower(Exception):
    """Raised when a 3-leaf power was required; carries an obstruction."""

    def __init__(self, obstruction: Obstruction):
        super().__init__(f"graph is not a 3-leaf power ({obstruction.kind})")
        self.obstruction = obstruction


# -- small obstructions ------------------------------------------------------


def _subset_mask5(masks, s):
    m = 0
    bit = 1
    for a in range(5):
        ma = masks[s[a]]
        for b in range(a + 1, 5):
            if (ma >> s[b]) & 1:
                m |= bit
            bit <<= 1
    return m


def _subset_mask4(masks, s):
    m = 0
    bit = 1
    for a in range(4):
        ma = masks[s[a]]
        for b in range(a + 1, 4):
            if (ma >> s[b]) & 1:
                m |= bit
            bit <<= 1
    return m


def find_small_obstruction(g: Graph, through: int | None = None) -> Obstruction | None:
    """First induced C4/C5/bull/dart/gem in lexicographic subset order, or None.

    With `through` set, only obstructions containing that vertex are reported.
    All 4-subsets are scanned before any 5-subset.
    """
    verts, index, masks = g.bit_adjacency()
    n = len(verts)
    if through is not None:
        ti = index[through]
        others = [i for i in range(n) if i != ti]
        quads = (tuple(sorted((ti,) + c)) for c in combinations(others, 3))
        quints = (tuple(sorted((ti,) + c)) for c in combinations(others, 4))
    else:
        quads = combinations(range(n), 4)
        quints = combinations(range(n), 5)
    for s in quads:
        sigma = _TABLE4.get(_subset_mask4(masks, s))
        if sigma is not None:
            return Obstruction(HOLE, tuple(verts[s[sigma[r]]] for r in range(4)))
    for s in quints:
        hit = _TABLE5.get(_subset_mask5(masks, s))
        if hit is not None:
            kind, sigma = hit
            return Obstruction(kind, tuple(verts[s[sigma[r]]] for r in range(5)))
    return None


# -- chordality and holes ----------------------------------------------------


def _mcs_chordal(g: Graph) -> bool:
    """Maximum-cardinality-search perfect-elimination-ordering test."""
    verts, index, masks = g.bit_adjacency()
    n = len(verts)
    if n == 0:
        return True
    weight = [0] * n
    numbered = 0
    order = []  # reverse elimination order
    pos = [-1] * n
    for step in range(n):
        best = max((i for i in range(n) if pos[i] < 0), key=lambda i: (weight[i], -i))
        pos[best] = step
        order.append(best)
        for j in range(n):
            if pos[j] < 0 and (masks[best] >> j) & 1:
                weight[j] += 1
        numbered += 1
    # check: for v, earlier-numbered neighbors must form a clique; it suffices
    # to check they fall inside the closed neighborhood of the latest one.
    for i in range(n):
        v = order[i]
        earlier = [order[j] for j in range(i) if (masks[v] >> order[j]) & 1]
        if len(earlier) >= 2:
            u = earlier[-1]  # latest-numbered earlier neighbor
            for w in earlier[:-1]:
                if w != u and not (masks[u] >> w) & 1:
                    return False
    return True


def _hole_via(g: Graph, u: int) -> Obstruction | None:
    """A hole through u: u plus an induced x-y path avoiding N[u]\\{x,y}."""
    nbrs = sorted(g.neighbors(u))
    closed = g.closed_neighbors(u)
    for ii, x in enumerate(nbrs):
        for y in nbrs[ii + 1:]:
            if g.has_edge(x, y):
                continue
            allowed = (set(g.vertices) - closed) | {x, y}
            # BFS shortest path x -> y inside `allowed`; shortest => induced
            prev = {x: None}
            queue = deque([x])
            while queue:
                a = queue.popleft()
                if a == y:
                    break
                for b in sorted(g.neighbors(a)):
                    if b in allowed and b not in prev:
                        prev[b] = a
                        queue.append(b)
            if y in prev:
                path = [y]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                path.reverse()
                return Obstruction(HOLE, tuple([u] + path))
    return None


def find_hole(g: Graph, through: int | None = None) -> Obstruction | None:
    """Some hole (induced cycle, length >= 4), or None if g is chordal.

    With `through`, only holes containing that vertex are searched.
    """
    if through is not None:
        return _hole_via(g, through)
    if _mcs_chordal(g):
        return None
    for u in g.vertices:
        hole = _hole_via(g, u)
        if hole is not None:
            return hole
    raise AssertionError("chordality test and hole search disagree")


def is_chordal(g: Graph):
    """True, or an Obstruction of kind hole. Compare with `is True`."""
    hole = find_hole(g)
    return True if hole is None else hole


# -- full recognition --------------------------------------------------------


def find_obstruction(g: Graph) -> Obstruction | None:
    """A small obstruction if one exists, else a hole, else None."""
    small = find_small_obstruction(g)
    if small is not None:
        return small
    return find_hole(g)


def _component_bag_quotient(g: Graph, comp: tuple[int, ...]):
    """Maximal true twin classes of g[comp] plus class adjacency edge count.

    Adjacency between closed-neighborhood classes is all-or-nothing, so one
    representative pair per class pair decides it.
    """
    sub = g.induced_subgraph(comp)
    classes = true_twin_partition(sub)
    edges = set()
    member = {}
    for i, c in enumerate(classes):
        for v in c:
            member[v] = i
    for u, v in sub.edges:
        i, j = member[u], member[v]
        if i != j:
            edges.add((min(i, j), max(i, j)))
    return classes, sorted(edges)


def is_three_leaf_power(g: Graph) -> bool:
    """Twin-quotient test: every component's bag quotient must be a tree."""
    for comp in components(g):
        classes, qedges = _component_bag_quotient(g, comp)
        if len(qedges) != len(classes) - 1:
            return False
    return True


@dataclass(frozen=True)
class TreeCliqueDecomposition:
    """Forest of bag nodes; bags partition V(G) and realize its adjacency."""

    forest: Graph
    bags: dict[int, tuple[int, ...]]


def tree_clique_decomposition(g: Graph) -> TreeCliqueDecomposition:
    """Decompose a 3-leaf power into its bag forest.

    Complete components become a single bag; incomplete components use their
    maximal true twin classes, whose quotient must form a tree.
    Raises NotLeafPower (with a witness) otherwise.
    """
    bags: dict[int, tuple[int, ...]] = {}
    forest_edges: list[tuple[int, int]] = []
    next_id = 0
    for comp in components(g):
        if is_clique(g, comp):
            bags[next_id] = tuple(comp)
            next_id += 1
            continue
        classes, qedges = _component_bag_quotient(g, comp)
        if len(qedges) != len(classes) - 1:
            obstruction = find_obstruction(g)
            assert obstruction is not None
            raise NotLeafPower(obstruction)
        base = next_id
        for c in classes:
            bags[next_id] = c
            next_id += 1
        forest_edges.extend((base + i, base + j) for i, j in qedges)
    return TreeCliqueDecomposition(Graph(range(next_id), forest_edges), bags)


def rebuild_graph(decomp: TreeCliqueDecomposition) -> Graph:
    """Reconstruct the graph a decomposition describes (round-trip check)."""
    verts = [v for bag in decomp.bags.values() for v in bag]
    edges = []
    for bag in decomp.bags.values():
        edges.extend(combinations(bag, 2))
    for a, b in decomp.forest.edges:
        edges.extend((x, y) for x in decomp.bags[a] for y in decomp.bags[b])
    return Graph(verts, edges)


def apex_spans_long_path(g: Graph, path: tuple[int, ...], v: int) -> bool:
    """True iff `path` has length >= 3 and v is adjacent to both of its ends.

    Such a configuration is not distance-hereditary, hence not a 3-leaf power.
    `path` must be an induced path in g not containing v.
    """
    if v in path:
        raise ValueError("apex vertex lies on the path")
    for i, j in combinations(range(len(path)), 2):
        if g.has_edge(path[i], path[j]) != (j - i == 1):
            raise ValueError("not an induced path")
    return len(path) >= 4 and g.has_edge(v, path[0]) and g.has_edge(v, path[-1])

"""Reduction rules bounding the graph outside a good modulator.

Each rule takes (g, k, s) with s a non-empty good modulator, and returns the
reduced Instance or None when not applicable.  Rules never recompute the
modulator; the driver owns that.  Determinism: components and twin classes
are scanned ascending by smallest member, subset families in lexicographic
order, so a rerun reproduces the same reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, components, is_clique, true_twin_partition
from .instance import Instance
from .recognition import tree_clique_decomposition


# -- structural predicates ---------------------------------------------------


def is_blocking_pair(g: Graph, x, v: int, w: int) -> bool:
    """True unless v,w are adjacent with the same clique neighborhood in x.

    A blocking pair witnesses that (x, rest) cannot be a complete split.
    v and w must be distinct neighbors of x.
    """
    xs = set(x)
    nx = g.neighbors_of_set(xs)
    if v == w or v not in nx or w not in nx:
        raise ValueError("need two distinct vertices in N(x)")
    nv = g.neighbors(v) & xs
    nw = g.neighbors(w) & xs
    if g.has_edge(v, w) and nv == nw:
        return not _is_clique_set(g, nv)
    return True


def _is_clique_set(g: Graph, xs) -> bool:
    xs = sorted(xs)
    return all(g.has_edge(a, b) for a, b in combinations(xs, 2))


@dataclass(frozen=True)
class SplitCandidate:
    a: tuple[int, ...]
    b: tuple[int, ...]


def is_complete_split(g: Graph, cand: SplitCandidate) -> bool:
    """(A,B) partitions V, both sides >= 2, N(A) complete to N(B), and
    N(A) u N(B) is a clique."""
    a, b = set(cand.a), set(cand.b)
    if a & b or a | b != set(g.vertices):
        raise ValueError("candidate must partition the vertex set")
    if len(a) < 2 or len(b) < 2:
        raise ValueError("both sides must have at least two vertices")
    na = g.neighbors_of_set(a)
    nb = g.neighbors_of_set(b)
    for x in na:
        if not nb <= g.neighbors(x):
            return False
    return _is_clique_set(g, na | nb)


def partition_s_plus_minus(g: Graph, s) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a good modulator into S+ (every component sees it as true twins)
    and S- (the rest)."""
    sset = set(s)
    comps = [set(c) for c in components(g.delete_vertices(sset))]
    splus = []
    for v in sorted(sset):
        ok = True
        for comp in comps:
            touched = g.neighbors(v) & comp
            if len(touched) < 2:
                continue
            sub = g.induced_subgraph(comp)
            vs = sorted(touched)
            base = sub.closed_neighbors(vs[0])
            if any(sub.closed_neighbors(u) != base for u in vs[1:]):
                ok = False
                break
        if ok:
            splus.append(v)
    sminus = tuple(v for v in sorted(sset) if v not in set(splus))
    return tuple(splus), sminus


# -- rule R2: delete the edges of an overrepresented component ---------------


@dataclass(frozen=True)
class MarkingGraphQ:
    """Bipartite marking graph: (S+ pair, tag) against components."""

    pairs: tuple[tuple[int, int], ...]
    component_ids: tuple[int, ...]  # index into `comps`
    comps: tuple[tuple[int, ...], ...]
    edges: dict  # component id -> ordered tuple of (pair index, tag)


@dataclass(frozen=True)
class CappedMatching:
    cap: int
    edges: tuple[tuple[tuple[int, int], int], ...]  # ((pair idx, tag), comp id)


def build_marking_graph(g: Graph, s) -> MarkingGraphQ:
    splus, sminus = partition_s_plus_minus(g, s)
    sminus_set = set(sminus)
    comps = components(g.delete_vertices(set(s)))
    ys = []
    for ci, comp in enumerate(comps):
        if len(comp) >= 2 and not (g.neighbors_of_set(comp) & sminus_set):
            ys.append(ci)
    pairs = tuple((v, w) for v, w in combinations(sorted(splus), 2))
    edges = {}
    for ci in ys:
        comp = set(comps[ci])
        ncomp = g.neighbors_of_set(comp)
        hits = []
        for pi, (v, w) in enumerate(pairs):
            both_near = v in ncomp and w in ncomp
            if both_near and is_blocking_pair(g, comp, v, w):
                hits.append((pi, 1))
            if any(v in g.neighbors(x) and w in g.neighbors(x) for x in comp):
                hits.append((pi, 2))
            tag3 = False
            for x in sorted(comp):
                if not (g.has_edge(x, v) and g.has_edge(x, w)):
                    continue
                for y in sorted(g.neighbors(x) & comp):
                    if not g.has_edge(y, v) and not g.has_edge(y, w):
                        tag3 = True
                        break
                if tag3:
                    break
            if tag3:
                hits.append((pi, 3))
        hits.sort()
        edges[ci] = tuple(hits)
    return MarkingGraphQ(pairs, tuple(ys), tuple(comps), edges)


def rule_R2(g: Graph, k: int, s) -> Instance | None:
    """If a maximal capped matching in the marking graph avoids some
    component, delete all of that component's edges."""
    _require(g, k, s)
    q = build_marking_graph(g, s)
    cap = k + 2
    load: dict[tuple[int, int], int] = {}
    unmatched = None
    for ci in q.component_ids:
        for e in q.edges[ci]:
            if load.get(e, 0) < cap:
                load[e] = load.get(e, 0) + 1
                break
        else:
            unmatched = ci
            break
    if unmatched is None:
        return None
    comp = set(q.comps[unmatched])
    inside = [(u, v) for u, v in g.edges if u in comp and v in comp]
    return Instance(g.delete_edges(inside), k)


# -- rules R3/R4: marking by modulator neighborhoods -------------------------


def _marked_by_neighborhood(g: Graph, s, xs, cap: int) -> set[int]:
    """Union of per-(A1,A2) marks: for each split of a 2..4-subset of s, the
    first `cap` vertices of xs whose s-trace on the subset is exactly A1."""
    s_sorted = sorted(s)
    xs_sorted = sorted(xs)
    sigs = {v: g.neighbors(v) & set(s) for v in xs_sorted}
    marked: set[int] = set()
    for size in (2, 3, 4):
        for t in combinations(s_sorted, size):
            tset = set(t)
            buckets: dict[frozenset, list[int]] = {}
            for v in xs_sorted:
                key = frozenset(sigs[v] & tset)
                bucket = buckets.setdefault(key, [])
                if len(bucket) < cap:
                    bucket.append(v)
            for bucket in buckets.values():
                marked.update(bucket)
    return marked


def rule_R3(g: Graph, k: int, s) -> Instance | None:
    """Delete an isolated-outside-s vertex not protected by the marking."""
    _require(g, k, s)
    comps = components(g.delete_vertices(set(s)))
    xs = [c[0] for c in comps if len(c) == 1]
    if len(xs) <= k + 3:
        return None
    marked = _marked_by_neighborhood(g, s, xs, k + 3)
    unmarked = sorted(set(xs) - marked)
    if not unmarked:
        return None
    return Instance(g.delete_vertices({unmarked[0]}), k)


def rule_R4(g: Graph, k: int, s) -> Instance | None:
    """Delete an unprotected vertex of an oversized complete component."""
    _require(g, k, s)
    for comp in components(g.delete_vertices(set(s))):
        if len(comp) <= k + 3 or not is_clique(g, comp):
            continue
        marked = _marked_by_neighborhood(g, s, comp, k + 3)
        unmarked = sorted(set(comp) - marked)
        if unmarked:
            return Instance(g.delete_vertices({unmarked[0]}), k)
    return None


# -- rule R5: oversized true twin-sets outside s -----------------------------


def rule_R5(g: Graph, k: int, s) -> Instance | None:
    """Delete one vertex from a true twin-set of size >= k+2 outside s."""
    if k <= 0:
        raise ValueError("budget must be positive")
    sset = set(s)
    for cls in true_twin_partition(g):
        outside = [v for v in cls if v not in sset]
        if len(outside) >= k + 2:
            return Instance(g.delete_vertices({max(outside)}), k)
    return None


# -- rule R6: trim dangling components behind a bag --------------------------


def rule_R6(g: Graph, k: int, s) -> Instance | None:
    _require(g, k, s)
    sset = set(s)
    outside = set(g.vertices) - sset
    for bag in true_twin_partition(g, outside):
        nbag = g.neighbors_of_set(bag)
        rest = g.delete_vertices(sset | set(bag))
        for comp in components(rest):
            cset = set(comp)
            if g.neighbors_of_set(cset) & sset:
                continue
            beyond = cset - nbag
            if beyond:
                return Instance(g.delete_vertices(beyond), k)
    return None


# -- rule R7: many interchangeable components behind a bag -------------------


def rule_R7(g: Graph, k: int, s) -> Instance | None:
    _require(g, k, s)
    sset = set(s)
    outside = set(g.vertices) - sset
    for bag in true_twin_partition(g, outside):
        nbag = g.neighbors_of_set(bag)
        rest = g.delete_vertices(sset | set(bag))
        groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for comp in components(rest):
            key = tuple(sorted(g.neighbors_of_set(comp)))
            groups.setdefault(key, []).append(comp)
        for key in sorted(groups):
            full = [c for c in groups[key] if set(c) <= nbag]
            partial = [c for c in groups[key] if set(c) & nbag and not set(c) <= nbag]
            for bucket in (full, partial):
                if len(bucket) >= k + 4:
                    victim = min(bucket, key=lambda c: c[0])
                    return Instance(g.delete_vertices(victim), k)
    return None


# -- rule R8: contract a long chain of bags ----------------------------------


@dataclass(frozen=True)
class BagChain:
    bags: tuple[tuple[int, ...], ...]  # m >= 6, in chain order
    keep_index: int  # minimum-size interior bag (0-based, in 2..m-3)


def _path_order_nodes(f: Graph, nodes) -> list[int]:
    nodes = list(nodes)
    if len(nodes) == 1:
        return nodes
    sub = f.induced_subgraph(nodes)
    ends = sorted(v for v in nodes if sub.degree(v) <= 1)
    order = [ends[0]]
    prev = None
    while len(order) < len(nodes):
        nxt = next(w for w in sorted(sub.neighbors(order[-1])) if w != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def find_bag_chain(g: Graph, s) -> BagChain | None:
    """A chain of >= 6 bags of g \\ s whose interior bags have no neighbors
    outside the chain (in particular none in s)."""
    sset = set(s)
    for comp in components(g.delete_vertices(sset)):
        sub = g.induced_subgraph(comp)
        if is_clique(sub, comp):
            continue
        decomp = tree_clique_decomposition(sub)
        forest = decomp.forest
        chain_ok = {
            u
            for u in forest.vertices
            if forest.degree(u) <= 2 and not (g.neighbors_of_set(decomp.bags[u]) & sset)
        }
        for seg in components(forest.induced_subgraph(chain_ok)):
            if len(seg) < 4:
                continue  # even with both end extensions the chain stays < 6
            path = _path_order_nodes(forest, seg)
            segset = set(seg)
            left = sorted(forest.neighbors(path[0]) - segset)
            right = sorted(forest.neighbors(path[-1]) - segset)
            nodes = left[:1] + path + right[:1]
            m = len(nodes)
            if m < 6:
                continue
            bags = tuple(decomp.bags[u] for u in nodes)
            # interior bags must see exactly their two chain neighbors
            ok = all(
                g.neighbors_of_set(bags[i]) == set(bags[i - 1]) | set(bags[i + 1])
                for i in range(1, m - 1)
            )
            if not ok:
                continue
            interior = range(2, m - 2)
            keep = min(interior, key=lambda i: (len(bags[i]), i))
            return BagChain(bags, keep)
    return None


def rule_R8(g: Graph, k: int, s) -> Instance | None:
    """Collapse a chain of bags: keep one smallest interior bag and splice it
    onto both chain ends."""
    _require(g, k, s)
    chain = find_bag_chain(g, s)
    if chain is None:
        return None
    bags = chain.bags
    m = len(bags)
    drop = set()
    for i in range(2, m - 2):
        if i != chain.keep_index:
            drop |= set(bags[i])
    kept = bags[chain.keep_index]
    anchors = list(bags[1]) + list(bags[m - 2])
    reduced = g.delete_vertices(drop)
    new_edges = [(x, y) for x in kept for y in anchors if not reduced.has_edge(x, y)]
    return Instance(reduced.with_edges(new_edges), k)


def _require(g: Graph, k: int, s):
    if k <= 0:
        raise ValueError("budget must be positive")
    if not s:
        raise ValueError("modulator must be non-empty")


ALL_RULES = (
    ("R2", rule_R2),
    ("R3", rule_R3),
    ("R4", rule_R4),
    ("R5", rule_R5),
    ("R6", rule_R6),
    ("R7", rule_R7),
    ("R8", rule_R8),
)

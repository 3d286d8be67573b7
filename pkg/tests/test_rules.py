import random
from itertools import combinations

import networkx as nx
import pytest

from helpers import (
    BULL_NX,
    DART_NX,
    GEM_NX,
    disjoint_union,
    from_nx,
    random_graph,
    to_nx,
)
from leafpower.graph import Graph, components, true_twin_partition
from leafpower.instance import Instance
from leafpower.modulator import build_good_modulator, NoInstanceSignal, rule_R1
from leafpower.oracle import GeneratorConfig, exact_solve, generate
from leafpower.recognition import is_three_leaf_power
from leafpower.rules import (
    ALL_RULES,
    SplitCandidate,
    is_blocking_pair,
    is_complete_split,
    partition_s_plus_minus,
)
from triggers import RULE_TRIGGERS, trigger_R1


# -- structural lemma suites -------------------------------------------------


def all_obstruction_subsets(g: Graph):
    """Every vertex subset inducing an obstruction, with its kind."""
    h = to_nx(g)
    vs = sorted(g.vertices)
    out = []
    for size in range(4, len(vs) + 1):
        for sub in combinations(vs, size):
            hs = h.subgraph(sub)
            degs = sorted(d for _, d in hs.degree)
            if degs and degs[0] == degs[-1] == 2 and nx.is_connected(hs):
                out.append((sub, "hole"))
                continue
            if size == 5:
                for pat, name in ((BULL_NX, "bull"), (DART_NX, "dart"), (GEM_NX, "gem")):
                    if nx.is_isomorphic(hs, pat):
                        out.append((sub, name))
                        break
    return out


def complete_split_violations(trials: int, seed: int = 0, max_n: int = 8):
    """Complete-split definition vs the blocking-pair characterization."""
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        n = rng.randint(4, max_n)
        g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
        vs = list(g.vertices)
        for bits in range(1, 2 ** (n - 1)):
            a = {vs[i] for i in range(n) if (bits >> i) & 1}
            b = set(vs) - a
            if len(a) < 2 or len(b) < 2:
                continue
            direct = is_complete_split(g, SplitCandidate(tuple(a), tuple(b)))
            na = g.neighbors_of_set(a)
            nb = g.neighbors_of_set(b)
            nb_clique = all(g.has_edge(x, y) for x, y in combinations(sorted(nb), 2))
            no_blocking = not any(
                is_blocking_pair(g, a, v, w)
                for v, w in combinations(sorted(na), 2)
            )
            if direct != (nb_clique and no_blocking):
                bad.append((t, sorted(a)))
    return bad


def test_complete_split_characterization():
    assert complete_split_violations(25, seed=1) == []


def blocked_components_violations(trials: int, seed: int = 0):
    """Two components blocked by one pair always yield an obstruction."""
    rng = random.Random(seed)
    bad = []
    hits = 0
    for t in range(trials):
        n = rng.randint(6, 9)
        g = random_graph(rng, n, rng.choice([0.25, 0.35, 0.5]))
        v, w = 0, 1
        rest = [x for x in g.vertices if x not in (v, w)]
        comps = components(g.induced_subgraph(rest))
        blocked = []
        for c in comps:
            nc = g.neighbors_of_set(c)
            if v in nc and w in nc and is_blocking_pair(g, c, v, w):
                blocked.append(c)
        for c1, c2 in combinations(blocked, 2):
            hits += 1
            sub = g.induced_subgraph(set(c1) | set(c2) | {v, w})
            if is_three_leaf_power(sub):
                bad.append((t, c1, c2))
    return bad, hits


def test_blocked_pair_of_components_gives_obstruction():
    bad, hits = blocked_components_violations(1000, seed=2)
    assert bad == []
    assert hits > 25


def split_obstruction_violations(trials: int, seed: int = 0, max_n: int = 9):
    """In a complete split: holes avoid one side; an obstruction with exactly
    two vertices on a side is a bull."""
    rng = random.Random(seed)
    bad = []
    hits = 0
    for t in range(trials):
        n = rng.randint(5, max_n)
        g = random_graph(rng, n, rng.choice([0.3, 0.45]))
        vs = list(g.vertices)
        obstructions = all_obstruction_subsets(g)
        if not obstructions:
            continue
        for bits in range(1, 2 ** (n - 1)):
            a = {vs[i] for i in range(n) if (bits >> i) & 1}
            b = set(vs) - a
            if len(a) < 2 or len(b) < 2:
                continue
            if not is_complete_split(g, SplitCandidate(tuple(a), tuple(b))):
                continue
            hits += 1
            for sub, kind in obstructions:
                inter_a = len(set(sub) & a)
                if kind == "hole" and 0 < inter_a < len(sub):
                    bad.append((t, "hole crosses the split", sub))
                if inter_a == 2 and kind != "bull":
                    bad.append((t, "non-bull with two vertices on a side", sub))
    return bad, hits


def test_obstructions_against_complete_splits():
    bad, hits = split_obstruction_violations(120, seed=3)
    assert bad == []
    assert hits > 20


def s_minus_single_component_violations(trials: int, seed: int = 0):
    """Each vertex outside the twin-friendly part of a good modulator has
    neighbors in at most one component of g minus the modulator."""
    rng = random.Random(seed)
    bad = []
    hits = 0
    for t in range(trials):
        g = random_graph(rng, rng.randint(5, 11), rng.choice([0.2, 0.3]))
        built = build_good_modulator(g, 2)
        if isinstance(built, NoInstanceSignal):
            continue
        inst, s, _ = built
        if not s:
            continue
        g2 = inst.graph
        _, sminus = partition_s_plus_minus(g2, s)
        comps = components(g2.delete_vertices(set(s)))
        for v in sminus:
            hits += 1
            touched = [c for c in comps if g2.neighbors(v) & set(c)]
            if len(touched) > 1:
                bad.append((t, v))
    return bad, hits


def test_s_minus_touches_one_component():
    bad, hits = s_minus_single_component_violations(300, seed=4)
    assert bad == []
    assert hits > 5


def twin_preservation_violations(trials: int, seed: int = 0):
    """Removing one vertex from a connected incomplete 3-leaf power does not
    change true-twin relations among the rest."""
    rng = random.Random(seed)
    bad = []
    hits = 0
    for t in range(trials):
        inst = generate(GeneratorConfig(seed=seed * 1000 + t, bag_count=(3, 6), bag_size=(1, 3)))
        g = inst.graph
        for comp in components(g):
            sub = g.induced_subgraph(comp)
            if sub.m == len(comp) * (len(comp) - 1) // 2:
                continue  # complete
            for v in comp:
                rest = sub.delete_vertices({v})
                if len(components(rest)) != 1 or rest.n < 2:
                    continue
                if rest.m == rest.n * (rest.n - 1) // 2:
                    continue
                hits += 1
                for t1, t2 in combinations(sorted(rest.vertices), 2):
                    in_g = sub.closed_neighbors(t1) == sub.closed_neighbors(t2)
                    in_rest = rest.closed_neighbors(t1) == rest.closed_neighbors(t2)
                    if in_g != in_rest:
                        bad.append((t, v, t1, t2))
    return bad, hits


def test_twin_classes_survive_vertex_removal():
    bad, hits = twin_preservation_violations(60, seed=5)
    assert bad == []
    assert hits > 30


def twin_attachment_violations(trials: int, seed: int = 0):
    """In a 3-leaf power, a removable vertex attaches to some twin-set B of
    the rest with N(v) = B or N[v] = N[B]."""
    rng = random.Random(seed)
    bad = []
    hits = 0
    for t in range(trials):
        inst = generate(GeneratorConfig(seed=seed * 1000 + t, bag_count=(2, 5), bag_size=(1, 3)))
        g = inst.graph
        for v in g.vertices:
            if g.degree(v) == 0:
                continue
            rest = g.delete_vertices({v})
            comp_count = len(components(rest))
            if rest.n == 0 or comp_count != 1:
                continue
            hits += 1
            nv = g.neighbors(v)
            closed_v = g.closed_neighbors(v)
            ok = False
            for cls in true_twin_partition(rest):
                for size in range(1, len(cls) + 1):
                    for b in combinations(cls, size):
                        bset = set(b)
                        if nv == bset:
                            ok = True
                        closed_b = set(b)
                        for x in b:
                            closed_b |= g.neighbors(x)
                        if closed_v == closed_b:
                            ok = True
                if ok:
                    break
            if not ok:
                bad.append((t, v))
    return bad, hits


def test_twin_attachment_of_removable_vertices():
    bad, hits = twin_attachment_violations(60, seed=6)
    assert bad == []
    assert hits > 40


def split_good_modulator_violations(trials: int, seed: int = 0):
    """Complete split with the good modulator inside B minus N(A): every
    obstruction has at most one vertex in A."""
    rng = random.Random(seed)
    bad = []
    hits = 0
    for t in range(trials):
        # A side: random graph with a1 = its gate; B side: random graph with
        # gate q; only the edge a1-q crosses.
        na = rng.randint(2, 4)
        nb = rng.randint(4, 6)
        ga = random_graph(rng, na, 0.6)
        gb_raw = random_graph(rng, nb, rng.choice([0.35, 0.5]))
        gb = Graph(
            [v + 10 for v in gb_raw.vertices],
            [(u + 10, v + 10) for u, v in gb_raw.edges],
        )
        g = disjoint_union(ga, gb).with_edges([(0, 10)])
        a = set(ga.vertices)
        b = set(gb.vertices)
        # search for a non-empty good modulator inside B \ N(A)
        pool = sorted(b - {10})
        found = None
        for size in (1, 2, 3):
            for sub in combinations(pool, size):
                from leafpower.modulator import is_good_modulator

                if is_good_modulator(g, sub):
                    found = set(sub)
                    break
            if found:
                break
        if found is None:
            continue
        hits += 1
        for sub, _kind in all_obstruction_subsets(g):
            if len(set(sub) & a) > 1:
                bad.append((t, sub))
    return bad, hits


def test_good_modulator_behind_split_shields_far_side():
    bad, hits = split_good_modulator_violations(80, seed=7)
    assert bad == []
    assert hits > 20


def chain_contraction_violations(trials: int, seed: int = 0):
    """Membership is preserved by deleting chain interiors: with twin-sets
    B_1..B_m (m >= 5) where N(B_i) = B_{i-1} u B_{i+1} for the interior, g is
    a 3-leaf power iff g minus B_3..B_{m-2} is one with no B_2 to B_{m-1}
    path."""
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        m = rng.randint(5, 7)
        fresh = 0
        bags = []
        edges = []
        for _ in range(m):
            size = rng.choice([1, 1, 2])
            bag = list(range(fresh, fresh + size))
            fresh += size
            if size == 2:
                edges.append(tuple(bag))
            if bags:
                edges += [(x, y) for x in bags[-1] for y in bag]
            bags.append(bag)
        close = rng.random() < 0.5
        extra = None
        if close:
            extra = fresh
            fresh += 1
            edges += [(x, extra) for x in bags[0]]
            edges += [(x, extra) for x in bags[-1]]
        g = Graph(range(fresh), edges)
        interior = [v for bag in bags[2 : m - 2] for v in bag]
        reduced = g.delete_vertices(interior)
        h = to_nx(reduced)
        has_path = any(
            nx.has_path(h, x, y) for x in bags[1] for y in bags[m - 2]
        )
        lhs = is_three_leaf_power(g)
        rhs = is_three_leaf_power(reduced) and not has_path
        if lhs != rhs:
            bad.append((t, close))
    return bad


def test_chain_interior_deletion_preserves_membership():
    assert chain_contraction_violations(120, seed=8) == []


# -- per-rule safeness -------------------------------------------------------


def rule_safeness_violations(name: str, count: int, seed_base: int = 0):
    bad = []
    if name == "R1":
        for i in range(count):
            g, k, v, witnesses = trigger_R1(seed_base + i)
            nxt = rule_R1(g, k, witnesses, v)
            before, _ = exact_solve(Instance(g, k))
            after, _ = exact_solve(nxt)
            if before != after:
                bad.append((name, i))
        return bad
    rule = dict(ALL_RULES)[name]
    trig = RULE_TRIGGERS[name]
    for i in range(count):
        g, k, s = trig(seed_base + i)
        result = rule(g, k, s)
        if result is None:
            bad.append((name, i, "did not fire"))
            continue
        if result.graph.n > g.n or (result.graph.n, result.graph.m) == (g.n, g.m):
            bad.append((name, i, "did not shrink"))
        before, _ = exact_solve(Instance(g, k))
        after, _ = exact_solve(result)
        if before != after:
            bad.append((name, i, "answer changed"))
    return bad


@pytest.mark.parametrize("name", ["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"])
def test_rule_safeness(name):
    assert rule_safeness_violations(name, 40, seed_base=100) == []


def test_rules_reject_bad_budget():
    g, k, s = RULE_TRIGGERS["R3"](1)
    for _name, rule in ALL_RULES:
        with pytest.raises(ValueError):
            rule(g, 0, s)

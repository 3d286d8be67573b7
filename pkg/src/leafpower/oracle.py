"""Ground truth for safeness and equivalence tests.

`exact_solve` decides whether deleting at most k vertices yields a 3-leaf
power, by branching on obstruction vertices.  `generate` builds random
instances as a forest of substituted cliques (a guaranteed 3-leaf power)
plus configurable noise.  Both are deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .instance import Instance
from .recognition import find_obstruction, is_three_leaf_power


class Indeterminate(Exception):
    """Raised when the branching solver exhausts its node budget."""


def exact_solve(
    inst: Instance, node_budget: int | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """Decide the instance exactly; return (answer, witness-or-None).

    Branches on the vertices of an obstruction, depth bounded by k.  Intended
    for desk-scale inputs; `node_budget` caps the number of search nodes and
    raises Indeterminate when exceeded.
    """
    budget = [node_budget if node_budget is not None else -1]

    def rec(g: Graph, k: int) -> tuple[int, ...] | None:
        if budget[0] == 0:
            raise Indeterminate()
        if budget[0] > 0:
            budget[0] -= 1
        if is_three_leaf_power(g):
            return ()
        if k == 0:
            return None
        obstruction = find_obstruction(g)
        assert obstruction is not None
        for v in sorted(obstruction.vertices):
            sub = rec(g.delete_vertices({v}), k - 1)
            if sub is not None:
                return tuple(sorted(sub + (v,)))
        return None

    witness = rec(inst.graph, inst.k)
    return (witness is not None, witness)


def exact_solve_subsets(inst: Instance) -> tuple[bool, tuple[int, ...] | None]:
    """Second, dumber oracle: enumerate every vertex subset of size <= k."""
    g, k = inst.graph, inst.k
    for size in range(min(k, g.n) + 1):
        for sub in combinations(g.vertices, size):
            if is_three_leaf_power(g.delete_vertices(sub)):
                return True, sub
    return False, None


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs for random instance generation; fully determined by `seed`.

    The base graph is a random forest whose nodes are substituted by cliques.
    `noise_vertices` extra vertices are attached to random vertex subsets;
    with `noise_edges` = 0, deleting all of them restores the base graph, so
    the instance with budget >= noise_vertices is a yes-instance.
    `planted_k` is the budget attached to the emitted instance.
    """

    seed: int = 0
    bag_count: tuple[int, int] = (3, 6)
    bag_size: tuple[int, int] = (1, 3)
    noise_edges: int = 0
    noise_vertices: int = 0
    planted_k: int = 0

    def __post_init__(self):
        for lo, hi in (self.bag_count, self.bag_size):
            if lo > hi or lo < 1:
                raise ValueError("empty or non-positive range")
        if self.noise_edges < 0 or self.noise_vertices < 0 or self.planted_k < 0:
            raise ValueError("negative count")


def generate(cfg: GeneratorConfig) -> Instance:
    rng = random.Random(cfg.seed)
    bags = rng.randint(*cfg.bag_count)
    sizes = [rng.randint(*cfg.bag_size) for _ in range(bags)]
    # random forest over bag nodes: each node except 0 picks an earlier parent
    # or stays a root
    bag_vertices: list[list[int]] = []
    nxt = 0
    for s in sizes:
        bag_vertices.append(list(range(nxt, nxt + s)))
        nxt += s
    edges: list[tuple[int, int]] = []
    for vs in bag_vertices:
        edges.extend(combinations(vs, 2))
    for i in range(1, bags):
        if rng.random() < 0.8:
            parent = rng.randrange(i)
            edges.extend((x, y) for x in bag_vertices[i] for y in bag_vertices[parent])
    base_n = nxt
    verts = list(range(base_n))
    for _ in range(cfg.noise_vertices):
        v = nxt
        nxt += 1
        verts.append(v)
        if base_n:
            deg = rng.randint(1, max(1, min(4, base_n)))
            for w in rng.sample(range(base_n), deg):
                edges.append((v, w))
    g = Graph(verts, edges)
    non_edges = [(u, v) for u, v in combinations(verts, 2) if not g.has_edge(u, v)]
    rng.shuffle(non_edges)
    if cfg.noise_edges:
        g = g.with_edges(non_edges[: cfg.noise_edges])
    return Instance(g, cfg.planted_k)

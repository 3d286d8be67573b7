"""Modulator construction: approximate deletion sets that make the rest a
3-leaf power, and the "good" strengthening where every obstruction meets the
set at least twice.

The pipeline: pack vertex-disjoint small obstructions, reduce the chordal
residue to weighted feedback vertex set on the twin quotient, 2-approximate
that, then per-vertex packing plus a hole flower/cover dichotomy upgrades the
modulator to a good one (or certifies a vertex forced into every solution).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, components, true_twin_partition
from .instance import Instance
from .recognition import (
    Obstruction,
    find_hole,
    find_small_obstruction,
    is_three_leaf_power,
)


class _Sentinel:
    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name


INFEASIBLE = _Sentinel("INFEASIBLE")
TOO_LARGE = _Sentinel("TOO_LARGE")


# -- weighted feedback vertex set -------------------------------------------


@dataclass(frozen=True)
class WeightedFvsInstance:
    graph: Graph
    weights: dict[int, Fraction]
    budget: Fraction

    def __post_init__(self):
        if set(self.weights) != set(self.graph.vertices):
            raise ValueError("weights must cover every vertex")
        if any(w < 0 for w in self.weights.values()) or self.budget < 0:
            raise ValueError("weights and budget must be non-negative")


def _is_forest(g: Graph) -> bool:
    return all(g.induced_subgraph(c).m == len(c) - 1 for c in components(g))


def _strip_low_degree(g: Graph) -> Graph:
    while True:
        drop = [v for v in g.vertices if g.degree(v) <= 1]
        if not drop:
            return g
        g = g.delete_vertices(drop)


def _semidisjoint_cycle(g: Graph) -> list[int] | None:
    """A cycle whose vertices all have degree 2 in g, except at most one."""
    deg2 = {v for v in g.vertices if g.degree(v) == 2}
    if not deg2:
        return None
    sub = g.induced_subgraph(deg2)
    for comp in components(sub):
        cg = sub.induced_subgraph(comp)
        if cg.m == len(comp):  # a cycle entirely of degree-2 vertices
            return _cycle_order(cg, comp)
        ends = [v for v in comp if cg.degree(v) <= 1]
        if len(ends) != 2:
            # a lone degree-2 vertex cannot close a simple cycle with a
            # single extra vertex
            continue
        a, b = ends
        common = sorted((g.neighbors(a) - set(comp)) & (g.neighbors(b) - set(comp)))
        if common:
            return _path_order(cg, a, b) + [common[0]]
    return None


def _cycle_order(cg: Graph, comp) -> list[int]:
    start = comp[0]
    order = [start]
    prev = None
    while True:
        nxt = min(w for w in cg.neighbors(order[-1]) if w != prev)
        if nxt == start:
            return order
        prev = order[-1]
        order.append(nxt)


def _path_order(cg: Graph, a: int, b: int) -> list[int]:
    order = [a]
    prev = None
    while order[-1] != b:
        nxt = next(w for w in cg.neighbors(order[-1]) if w != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def wfvs_2approx(inst: WeightedFvsInstance):
    """Local-ratio 2-approximation for weighted feedback vertex set.

    Returns a feedback vertex set of weight <= 2 * budget, or INFEASIBLE when
    no feedback vertex set of weight <= budget exists.  Degree-weighted
    rounds with semidisjoint-cycle handling, then reverse-delete.
    """
    g0 = inst.graph
    w = {v: Fraction(inst.weights[v]) for v in g0.vertices}
    g = _strip_low_degree(g0)
    stack: list[int] = []
    while g.n:
        zero = sorted(v for v in g.vertices if w[v] == 0)
        if zero:
            stack.extend(zero)
            g = _strip_low_degree(g.delete_vertices(zero))
            continue
        cyc = _semidisjoint_cycle(g)
        if cyc is not None:
            gamma = min(w[v] for v in cyc)
            for v in cyc:
                w[v] -= gamma
        else:
            gamma = min(w[v] / (g.degree(v) - 1) for v in g.vertices)
            for v in g.vertices:
                w[v] -= gamma * (g.degree(v) - 1)
    # reverse-delete minimalization against the original graph
    chosen = set(stack)
    for v in reversed(stack):
        if _is_forest(g0.delete_vertices(chosen - {v})):
            chosen.discard(v)
    weight = sum((inst.weights[v] for v in chosen), Fraction(0))
    if weight > 2 * inst.budget:
        return INFEASIBLE
    return tuple(sorted(chosen))


# -- modulators --------------------------------------------------------------


def pack_small_obstructions(g: Graph) -> list[Obstruction]:
    """Greedy maximal packing of vertex-disjoint small obstructions."""
    packing = []
    h = g
    while True:
        obstruction = find_small_obstruction(h)
        if obstruction is None:
            return packing
        packing.append(obstruction)
        h = h.delete_vertices(obstruction.vertices)


def find_modulator(g: Graph, k: int):
    """A modulator of size <= 7k, or TOO_LARGE if none of size <= k exists.

    Packs small obstructions (reject if more than k fit disjointly), then
    solves weighted FVS on the twin quotient of the chordal-residue part.
    """
    if k <= 0:
        raise ValueError("budget must be positive")
    packing = pack_small_obstructions(g)
    if len(packing) > k:
        return TOO_LARGE
    packed = {v for o in packing for v in o.vertices}
    rest = g.delete_vertices(packed)
    classes = true_twin_partition(rest)
    reps = [c[0] for c in classes]
    quotient = rest.induced_subgraph(reps)
    weights = {c[0]: Fraction(len(c)) for c in classes}
    fvs = wfvs_2approx(WeightedFvsInstance(quotient, weights, Fraction(k)))
    if fvs is INFEASIBLE:
        return TOO_LARGE
    by_rep = {c[0]: c for c in classes}
    chosen = set(packed)
    for r in fvs:
        chosen.update(by_rep[r])
    return tuple(sorted(chosen))


# -- hole flowers and covers -------------------------------------------------


@dataclass(frozen=True)
class FlowerCoverResult:
    """Outcome of the hole dichotomy at a vertex v.

    Exactly one of the following holds:
      flower      -- at least t+1 holes pairwise intersecting exactly in {v}
      cover       -- a set avoiding v, size <= 12t, whose removal kills all holes
      uncoverable -- certified: every hole-hitting set avoiding v exceeds t,
                     so v belongs to every modulator within budget t
    """

    flower: tuple[Obstruction, ...] | None = None
    cover: tuple[int, ...] | None = None
    uncoverable: bool = False


def _hole_cover(g: Graph, v: int, budget: int) -> tuple[int, ...] | None:
    """Branching search for a hole-hitting set avoiding v, size <= budget."""
    hole = find_hole(g, through=v)
    if hole is None:
        return ()
    if budget == 0:
        return None
    for u in sorted(set(hole.vertices) - {v}):
        rest = _hole_cover(g.delete_vertices({u}), v, budget - 1)
        if rest is not None:
            return tuple(sorted(rest + (u,)))
    return None


def flower_or_cover(g: Graph, t: int, v: int) -> FlowerCoverResult:
    """Either a flower of t+1 holes at v, a small hole cover avoiding v, or a
    certificate that no such cover of size <= t exists.

    Requires g \\ v to be chordal (then every hole passes through v).
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if find_hole(g.delete_vertices({v})) is not None:
        raise ValueError("g minus v must be chordal")
    holes: list[Obstruction] = []
    h = g
    while len(holes) < t + 1:
        hole = find_hole(h, through=v)
        if hole is None:
            break
        holes.append(hole)
        h = h.delete_vertices(set(hole.vertices) - {v})
    if len(holes) >= t + 1:
        return FlowerCoverResult(flower=tuple(holes))
    cover = _hole_cover(g, v, t)
    if cover is not None:
        return FlowerCoverResult(cover=cover)
    return FlowerCoverResult(uncoverable=True)


# -- rule R1 and the good-modulator builder ----------------------------------


def rule_R1(g: Graph, k: int, witnesses: list[Obstruction], v: int) -> Instance:
    """Delete a vertex shared by k+1 otherwise-disjoint obstructions.

    Verifies the witnesses before applying; such a vertex is in every
    deletion set of size <= k.
    """
    if k <= 0:
        raise ValueError("budget must be positive")
    if len(witnesses) < k + 1:
        raise ValueError("need at least k+1 witness obstructions")
    for o in witnesses:
        if not o.check(g) or v not in o.vertices:
            raise ValueError("invalid witness obstruction")
    for i in range(len(witnesses)):
        for j in range(i + 1, len(witnesses)):
            common = set(witnesses[i].vertices) & set(witnesses[j].vertices)
            if common != {v}:
                raise ValueError("witnesses must pairwise intersect exactly in the vertex")
    return Instance(g.delete_vertices({v}), k - 1)


def _pack_small_through(g: Graph, v: int) -> list[Obstruction]:
    """Maximal packing of small obstructions pairwise sharing exactly v."""
    packing = []
    h = g
    while True:
        obstruction = find_small_obstruction(h, through=v)
        if obstruction is None:
            return packing
        packing.append(obstruction)
        h = h.delete_vertices(set(obstruction.vertices) - {v})


@dataclass
class GoodModulatorTrace:
    """Bookkeeping for one good-modulator construction."""

    base_modulator: tuple[int, ...] = ()
    per_vertex: dict[int, dict] = field(default_factory=dict)
    deletions: list[dict] = field(default_factory=list)  # forced-vertex steps
    modulator: tuple[int, ...] = ()


class NoInstanceSignal:
    """The instance was certified a no-instance during construction."""

    def __init__(self, trace: GoodModulatorTrace):
        self.trace = trace


def build_good_modulator(g: Graph, k: int):
    """Return (equivalent Instance, good modulator of its graph, trace).

    Follows the approximate-modulator-then-per-vertex-repair scheme; when a
    vertex is forced into every solution it is deleted, the budget drops, and
    the construction restarts on the smaller instance.  Returns
    NoInstanceSignal when infeasibility is certified.
    """
    if k <= 0:
        raise ValueError("budget must be positive")
    trace = GoodModulatorTrace()
    while True:
        if k == 0:
            if is_three_leaf_power(g):
                trace.modulator = ()
                return Instance(g, 0), (), trace
            return NoInstanceSignal(trace)
        base = find_modulator(g, k)
        if base is TOO_LARGE:
            return NoInstanceSignal(trace)
        trace.base_modulator = base
        trace.per_vertex = {}
        restart = False
        extra: set[int] = set()
        for v in base:
            g_v = g.delete_vertices(set(base) - {v})
            smalls = _pack_small_through(g_v, v)
            record = {"smalls": smalls}
            trace.per_vertex[v] = record
            if len(smalls) >= k + 1:
                trace.deletions.append(
                    {"vertex": v, "k_before": k, "witnesses": smalls[: k + 1]}
                )
                nxt = rule_R1(g, k, smalls[: k + 1], v)
                g, k = nxt.graph, nxt.k
                restart = True
                break
            used = {u for o in smalls for u in o.vertices if u != v}
            g_v2 = g_v.delete_vertices(used)
            outcome = flower_or_cover(g_v2, k - len(smalls), v)
            record["dichotomy"] = outcome
            if outcome.flower is not None or outcome.uncoverable:
                witnesses = smalls + list(outcome.flower or ())
                trace.deletions.append(
                    {"vertex": v, "k_before": k, "witnesses": witnesses}
                )
                if outcome.flower is not None:
                    nxt = rule_R1(g, k, witnesses, v)
                    g, k = nxt.graph, nxt.k
                else:
                    # certified: every hole cover avoiding v exceeds the
                    # remaining budget, so v is in every small enough solution
                    g, k = g.delete_vertices({v}), k - 1
                restart = True
                break
            s_v = (used | set(outcome.cover)) - {v}
            record["s_v"] = tuple(sorted(s_v))
            extra |= s_v
        if restart:
            continue
        modulator = tuple(sorted(set(base) | extra))
        trace.modulator = modulator
        return Instance(g, k), modulator, trace


def is_good_modulator(g: Graph, s) -> bool:
    """True iff g \\ s is a 3-leaf power and stays one when any single vertex
    of s is spared."""
    s = set(s)
    if not is_three_leaf_power(g.delete_vertices(s)):
        return False
    return all(is_three_leaf_power(g.delete_vertices(s - {v})) for v in s)

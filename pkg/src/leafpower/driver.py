"""Kernelization driver: good modulator plus reduction rules to a fixed point.

`compress` implements the overall control loop.  Starting from (G, k):
  * k = 0 is resolved outright (trivial yes- or no-instance),
  * the good-modulator construction may certify a no-instance or shrink the
    instance via forced deletions,
  * a modulator of size <= k proves a yes-instance,
  * otherwise the rules fire in ascending order; after each application the
    modulator is rebuilt and the loop repeats.
When no rule applies, the current instance is the kernel.  Every step is
recorded as a replayable trace of graph edits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .instance import Instance
from .modulator import NoInstanceSignal, build_good_modulator
from .recognition import is_three_leaf_power
from .rules import ALL_RULES


@dataclass(frozen=True)
class TraceRecord:
    rule: str  # R1..R8, GoodModulator, Terminal
    k_before: int
    k_after: int
    n_before: int
    n_after: int
    removed_vertices: tuple[int, ...] = ()
    removed_edges: tuple[tuple[int, int], ...] = ()
    added_edges: tuple[tuple[int, int], ...] = ()
    params: dict = field(default_factory=dict)


RuleTrace = list  # of TraceRecord


def _diff_record(rule: str, before: Instance, after: Instance, **params) -> TraceRecord:
    gb, ga = before.graph, after.graph
    removed_v = tuple(sorted(set(gb.vertices) - set(ga.vertices)))
    eb, ea = set(gb.edges), set(ga.edges)
    gone = set(removed_v)
    removed_e = tuple(sorted(e for e in eb - ea if not (e[0] in gone or e[1] in gone)))
    added_e = tuple(sorted(ea - eb))
    return TraceRecord(
        rule,
        before.k,
        after.k,
        gb.n,
        ga.n,
        removed_v,
        removed_e,
        added_e,
        dict(params),
    )


def _terminal(kind: str, inst: Instance, out: Instance, **params) -> TraceRecord:
    return TraceRecord(
        "Terminal",
        inst.k,
        out.k,
        inst.graph.n,
        out.graph.n,
        params=dict(params, kind=kind),
    )


def _k1() -> Instance:
    return Instance(Graph([0], []), 0)


def _k22() -> Instance:
    return Instance(Graph(range(4), [(0, 2), (0, 3), (1, 2), (1, 3)]), 0)


def compress(inst: Instance) -> tuple[Instance, RuleTrace]:
    g, k = inst.graph, inst.k
    trace: RuleTrace = []
    max_steps = g.n + g.m + k + 8
    steps = 0
    while True:
        steps += 1
        assert steps <= max_steps, "reduction loop failed to terminate"
        cur = Instance(g, k)
        if k == 0:
            out = _k1() if is_three_leaf_power(g) else _k22()
            trace.append(_terminal("budget-exhausted", cur, out))
            return out, trace
        built = build_good_modulator(g, k)
        if isinstance(built, NoInstanceSignal):
            out = _k22()
            trace.append(_terminal("no-instance", cur, out))
            return out, trace
        nxt, s, gm_trace = built
        for step in gm_trace.deletions:
            v = step["vertex"]
            kb = step["k_before"]
            trace.append(
                TraceRecord("R1", kb, kb - 1, g.n, g.n - 1, (v,), params={"vertex": v})
            )
            g = g.delete_vertices({v})
        assert (g, k - len(gm_trace.deletions)) == (nxt.graph, nxt.k)
        g, k = nxt.graph, nxt.k
        cur = Instance(g, k)
        if k == 0:
            out = _k1() if is_three_leaf_power(g) else _k22()
            trace.append(_terminal("budget-exhausted", cur, out))
            return out, trace
        if len(s) <= k:
            out = _k1()
            trace.append(_terminal("small-modulator", cur, out, modulator=s))
            return out, trace
        for name, rule in ALL_RULES:
            result = rule(g, k, s)
            if result is not None:
                trace.append(_diff_record(name, cur, result, modulator=s))
                g, k = result.graph, result.k
                break
        else:
            trace.append(_terminal("kernel", cur, cur, modulator=s))
            return cur, trace


def replay(inst: Instance, trace: RuleTrace) -> Instance:
    """Apply the recorded edits to the input; must reproduce compress output."""
    g, k = inst.graph, inst.k
    for rec in trace:
        if rec.rule == "Terminal":
            kind = rec.params["kind"]
            if kind == "kernel":
                return Instance(g, k)
            return _k1() if rec.n_after == 1 else _k22()
        if rec.removed_vertices:
            g = g.delete_vertices(rec.removed_vertices)
        if rec.removed_edges:
            g = g.delete_edges(rec.removed_edges)
        if rec.added_edges:
            g = g.with_edges(rec.added_edges)
        k = rec.k_after
    return Instance(g, k)


def kernel_size_bound(k: int) -> int:
    """Explicit vertex bound for the kernel as a function of the input budget.

    Assembled from: modulator size s = 84k^2+7k, at most 2(k+3)s^4/3 isolated
    vertices, at most 2(k+2)s^2 non-trivial components, each of size at most
    max(2(k+3)s^4/3, (k+1)(k+4)s(s+2k+15)).  For k = 0 the output is one of
    the 4-vertex terminal instances.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    if k == 0:
        return 4
    s = 84 * k * k + 7 * k
    isolated = 2 * (k + 3) * s**4 // 3
    comp_size = max(isolated, (k + 1) * (k + 4) * s * (s + 2 * k + 15))
    return s + isolated + 2 * (k + 2) * s * s * comp_size


# -- instance I/O ------------------------------------------------------------


def parse_instance(text: str, k: int = 0) -> Instance:
    """Parse the `p <n> <m>` / `e <u> <v>` format; `#` starts a comment."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "p" or len(parts) != 3:
                raise ValueError(f"line {lineno}: expected header 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer header field") from None
            if n < 0 or m < 0:
                raise ValueError(f"line {lineno}: negative header field")
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise ValueError(f"line {lineno}: expected edge 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer endpoint") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: endpoint out of range")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ValueError("line 1: missing header")
    if len(edges) != m:
        raise ValueError(f"header announced {m} edges, found {len(edges)}")
    return Instance(Graph(range(n), edges), k)


def serialize_instance(inst: Instance) -> str:
    """Inverse of parse_instance; vertices are renumbered 0..n-1 in id order."""
    g = inst.graph
    index = {v: i for i, v in enumerate(g.vertices)}
    lines = [f"p {g.n} {g.m}"]
    for u, v in sorted((index[u], index[v]) for u, v in g.edges):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"

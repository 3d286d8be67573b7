"""Sweep random instances through the kernelizer and report what happened.

Usage: python scripts/kernel_stats.py [--count 500] [--seed 0] [--noise 3]
"""

import argparse
import random
import time
from collections import Counter

from leafpower.driver import compress, kernel_size_bound
from leafpower.oracle import GeneratorConfig, exact_solve, generate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--noise", type=int, default=3, help="max noise edges/vertices")
    ap.add_argument("--verify", action="store_true", help="oracle-check every run")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rules = Counter()
    terminals = Counter()
    shrink = []
    t0 = time.time()
    for i in range(args.count):
        cfg = GeneratorConfig(
            seed=args.seed * 1_000_000 + i,
            bag_count=(2, 5),
            bag_size=(1, 3),
            noise_edges=rng.randint(0, args.noise),
            noise_vertices=rng.randint(0, args.noise),
            planted_k=rng.randint(0, 2),
        )
        inst = generate(cfg)
        out, trace = compress(inst)
        for rec in trace:
            if rec.rule == "Terminal":
                terminals[rec.params["kind"]] += 1
            else:
                rules[rec.rule] += 1
        if inst.graph.n:
            shrink.append(out.graph.n / inst.graph.n)
        assert out.graph.n <= kernel_size_bound(inst.k)
        if args.verify:
            a, _ = exact_solve(inst)
            b, _ = exact_solve(out)
            assert a == b, f"answer changed on seed {cfg.seed}"
    dt = time.time() - t0
    print(f"{args.count} instances in {dt:.1f}s ({dt / args.count * 1000:.1f} ms each)")
    print("terminal kinds:", dict(terminals))
    print("rule applications:", dict(rules) or "none")
    if shrink:
        print(f"mean |V(out)|/|V(in)|: {sum(shrink) / len(shrink):.3f}")


if __name__ == "__main__":
    main()

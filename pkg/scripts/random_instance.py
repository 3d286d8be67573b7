"""Emit a random instance in the CLI file format on stdout.

Usage: python scripts/random_instance.py --seed 3 --noise-edges 2 --planted-k 1
"""

import argparse
import sys

from leafpower.driver import serialize_instance
from leafpower.oracle import GeneratorConfig, generate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--bags", type=int, nargs=2, default=(3, 6), metavar=("LO", "HI"))
    ap.add_argument("--bag-size", type=int, nargs=2, default=(1, 3), metavar=("LO", "HI"))
    ap.add_argument("--noise-edges", type=int, default=0)
    ap.add_argument("--noise-vertices", type=int, default=0)
    ap.add_argument("--planted-k", type=int, default=0)
    args = ap.parse_args()
    inst = generate(
        GeneratorConfig(
            seed=args.seed,
            bag_count=tuple(args.bags),
            bag_size=tuple(args.bag_size),
            noise_edges=args.noise_edges,
            noise_vertices=args.noise_vertices,
            planted_k=args.planted_k,
        )
    )
    sys.stdout.write(f"# seed {args.seed}, suggested budget {inst.k}\n")
    sys.stdout.write(serialize_instance(inst))


if __name__ == "__main__":
    main()

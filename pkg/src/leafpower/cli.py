"""Command line front end: read an instance, kernelize, print the result.

Output format matches the input: a `k <int>` line, then `p <n> <m>` and the
edge lines.  Exit codes: 0 success, 1 I/O or parse error, 2 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .driver import compress, parse_instance, serialize_instance
from .instance import Instance
from .oracle import exact_solve


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kernelize",
        description="Shrink a 3-Leaf Power Deletion instance to an equivalent kernel.",
    )
    p.add_argument("input", help="instance file ('p <n> <m>' header, 'e <u> <v>' lines)")
    p.add_argument("-k", type=int, required=True, help="deletion budget, >= 0")
    p.add_argument("--trace", metavar="PATH", help="write the reduction trace as JSON lines")
    p.add_argument(
        "--verify",
        action="store_true",
        help="also run the exact solver on both instances (small inputs only) "
        "and print YES/NO to stderr",
    )
    p.add_argument(
        "--verify-cap",
        type=int,
        default=16,
        metavar="N",
        help="skip --verify when the input has more than N vertices (default 16)",
    )
    p.add_argument(
        "--seed",
        type=int,
        default=0,
        help="reserved; the kernelization itself is deterministic",
    )
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.k < 0:
        print("error: -k must be non-negative", file=sys.stderr)
        return 1
    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        inst = parse_instance(text, args.k)
    except ValueError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return 1
    try:
        out, trace = compress(inst)
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    if args.trace:
        try:
            with open(args.trace, "w") as fh:
                for rec in trace:
                    fh.write(json.dumps(dataclasses.asdict(rec), default=_plain) + "\n")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    sys.stdout.write(f"k {out.k}\n")
    sys.stdout.write(serialize_instance(out))
    if args.verify:
        if inst.graph.n > args.verify_cap:
            print(f"verify skipped: more than {args.verify_cap} vertices", file=sys.stderr)
        else:
            answer_in, _ = exact_solve(inst)
            answer_out, _ = exact_solve(Instance(out.graph, out.k))
            if answer_in != answer_out:
                print("internal error: kernel changed the answer", file=sys.stderr)
                return 2
            print("YES" if answer_in else "NO", file=sys.stderr)
    return 0


def _plain(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    return str(obj)


if __name__ == "__main__":
    sys.exit(main())

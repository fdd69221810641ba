"""Replay the reduction on gamma against BG' and the two control graphs.

Usage: python3 scripts/replay_counterexample.py [--trace]
"""

import argparse

from aslamcheck.harness import build_bg_prime, gamma_union_graph, reproduce_counterexample
from aslamcheck.matching import BipartiteGraph, Edge


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trace", action="store_true", help="print the round trace for BG'")
    args = ap.parse_args()

    cases = [
        ("BG' (union minus 76)", build_bg_prime()),
        ("union minus 78", gamma_union_graph().without(Edge(7, 8))),
        ("K_9,9", BipartiteGraph.complete(9)),
    ]
    print(f"{'graph':<24}{'claimed':>8}{'truth':>7}{'delta':>7}{'permanent':>11}")
    for name, bg in cases:
        r = reproduce_counterexample(bg)
        print(f"{name:<24}{r.claimed:>8}{r.truth:>7}{r.delta:>+7d}{r.oracle:>11}")
    if args.trace:
        r = reproduce_counterexample()
        print()
        print("\n".join(r.trace))


if __name__ == "__main__":
    main()

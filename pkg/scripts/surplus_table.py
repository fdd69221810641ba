"""Tabulate the surplus-edge properties of Gamma(n) for small n."""

import argparse
import math

from aslamcheck.gengraph import build_generating_graph, enumerate_cvmps
from aslamcheck.harness import check_surplus_cardinalities, count_se_classes


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        cvmps = enumerate_cvmps(build_generating_graph(n))
        print(f"n={n}: cvmps={len(cvmps)} (n!={math.factorial(n)})  {check_surplus_cardinalities(n)}")
        for i in range(1, n):
            print(f"    {count_se_classes(n, i)}")


if __name__ == "__main__":
    main()

"""Discrepancy rate of the reduction over a grid of sizes and edge densities.

Each cell runs ``--trials`` seeded trials and reports how many graphs were
miscounted, plus the largest overcount seen. Gamma mode samples subgraphs of
the union of gamma's five matchings.

Usage: python3 scripts/fuzz_sweep.py [--trials 200] [--seed 0] [--gamma]
"""

import argparse

from aslamcheck.harness import FuzzConfig, run_trial


def sweep(cfg_kwargs: dict, trials: int) -> tuple[int, int, int]:
    cfg = FuzzConfig(trials=trials, **cfg_kwargs)
    found = undercounts = worst = 0
    for t in range(trials):
        r = run_trial(cfg, t)
        if r.delta:
            found += 1
            undercounts += r.delta < 0
            worst = max(worst, r.delta)
    return found, undercounts, worst


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--gamma", action="store_true")
    ap.add_argument("--densities", default="0.3,0.5,0.7,0.9")
    args = ap.parse_args()
    densities = [float(x) for x in args.densities.split(",")]
    sizes = [9] if args.gamma else [3, 4, 5]

    print(f"{'n':>3}{'density':>9}{'miscounted':>12}{'under':>7}{'max delta':>11}")
    for n in sizes:
        for d in densities:
            kw = dict(n=n, density=d, seed=args.seed, gamma=args.gamma)
            found, under, worst = sweep(kw, args.trials)
            print(f"{n:>3}{d:>9.2f}{found:>8}/{args.trials:<3}{under:>7}{worst:>+11d}")


if __name__ == "__main__":
    main()

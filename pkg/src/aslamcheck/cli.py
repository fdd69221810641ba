"""Command line entry point.

Exit codes: 0 success, 1 counter-example mismatch, 2 usage or parse error,
3 instance too large for the requested method.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from aslamcheck.errors import CapacityError, GraphParseError, InvalidInputError
from aslamcheck.gengraph import (
    build_gamma,
    build_generating_graph,
    dump_graph,
    enumerate_cvmps,
    format_cvmp_line,
)
from aslamcheck.graphio import format_graph, read_graph
from aslamcheck.harness import (
    EXPECTED,
    FuzzConfig,
    build_bg_prime,
    check_surplus_cardinalities,
    count_se_classes,
    evaluate,
    run_trial,
)
from aslamcheck.oracles import METHODS

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3
MAX_ASLAM_N = 5


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        self.code, self.message = code, message


def _load(path: str):
    try:
        return read_graph(path)
    except GraphParseError as exc:
        raise _Exit(EXIT_USAGE, f"{path}: {exc}") from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise _Exit(EXIT_USAGE, f"{path}: {exc}") from exc


def cmd_count(args) -> int:
    bg = _load(args.input)
    payload: dict = {"method": args.method, "n": bg.n}
    t0 = time.perf_counter()
    if args.method == "aslam":
        if args.gamma:
            if bg.n != 9:
                raise _Exit(EXIT_USAGE, "--gamma needs a 9x9 graph")
            g = build_gamma()
        elif bg.n > MAX_ASLAM_N:
            raise _Exit(EXIT_CAPACITY, f"aslam on Gamma(n) is limited to n <= {MAX_ASLAM_N}; use --gamma")
        else:
            g = build_generating_graph(bg.n)
        report = evaluate(g, bg)
        count = report.claimed
        payload["delta"] = report.delta
        if args.trace:
            payload["trace"] = list(report.trace)
    else:
        count = METHODS[args.method](bg)
    payload["count"] = str(count)
    payload["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    print(count)
    if args.method == "aslam" and args.trace:
        print("\n".join(payload["trace"]))
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def cmd_refute(args) -> int:
    bg = _load(args.bg) if args.bg else build_bg_prime()
    if bg.n != 9:
        raise _Exit(EXIT_USAGE, "the counter-example graph must be 9x9")
    report = evaluate(build_gamma(), bg)
    sys.stdout.write(report.to_text())
    if args.trace:
        sys.stdout.write("".join(line + "\n" for line in report.trace))
    if args.expect:
        try:
            claimed, truth = (int(x) for x in args.expect.split(","))
        except ValueError:
            raise _Exit(EXIT_USAGE, "--expect takes CLAIMED,TRUTH")
        expected = (claimed, truth, claimed - truth)
    elif args.bg:
        return EXIT_OK
    else:
        expected = EXPECTED
    got = (report.claimed, report.truth, report.delta)
    if got != expected:
        print(
            f"MISMATCH expected claimed={expected[0]} truth={expected[1]} delta={expected[2]:+d}"
            f" got claimed={got[0]} truth={got[1]} delta={got[2]:+d}"
        )
        return EXIT_MISMATCH
    print(f"reproduced: claimed={got[0]} truth={got[1]} delta={got[2]:+d}")
    return EXIT_OK


def cmd_fuzz(args) -> int:
    base = _load(args.base) if args.base else None
    n = 9 if args.gamma and args.n is None else (args.n if args.n is not None else 4)
    try:
        cfg = FuzzConfig(
            n=n,
            trials=args.trials,
            density=args.density,
            seed=args.seed,
            gamma=args.gamma,
            base=base,
        )
    except CapacityError as exc:
        raise _Exit(EXIT_CAPACITY, str(exc))
    except InvalidInputError as exc:
        raise _Exit(EXIT_USAGE, str(exc))
    out = open(args.out, "w", encoding="ascii", newline="\n") if args.out else sys.stdout
    found = 0
    try:
        for t in range(cfg.trials):
            report = run_trial(cfg, t)
            if report.delta != 0:
                found += 1
                out.write(report.to_text())
                out.flush()
        summary = f"trials={cfg.trials} discrepancies={found}\n"
        out.write(summary)
    finally:
        if out is not sys.stdout:
            out.close()
    if out is not sys.stdout:
        sys.stdout.write(summary)
    return EXIT_OK


def cmd_lemmas(args) -> int:
    try:
        reports = [check_surplus_cardinalities(n) for n in range(2, args.n + 1)]
        reports += [count_se_classes(args.n, i) for i in range(1, args.n)]
    except CapacityError as exc:
        raise _Exit(EXIT_CAPACITY, str(exc))
    for r in reports:
        print(r)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_MISMATCH


def cmd_dump(args) -> int:
    if args.gamma:
        g = build_gamma()
    else:
        if args.n is None or args.n < 1:
            raise _Exit(EXIT_USAGE, "give --gamma or --n N")
        if args.n > 9:
            raise _Exit(EXIT_CAPACITY, "dumps are limited to n <= 9")
        g = build_generating_graph(args.n)
    sys.stdout.write(dump_graph(g))
    if args.cvmps:
        if not args.gamma and args.n > 6:
            raise _Exit(EXIT_CAPACITY, "CVMP listing is limited to n <= 6")
        for p in enumerate_cvmps(g):
            print(format_cvmp_line(g, p))
    return EXIT_OK


def cmd_bgprime(args) -> int:
    sys.stdout.write(
        format_graph(build_bg_prime(), ["union of the five gamma matchings without edge (7,6)"])
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="aslamcheck",
        description="Exact perfect-matching counters and a replay of the VMPSet reduction's overcount.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count perfect matchings of a graph file")
    c.add_argument("input")
    c.add_argument(
        "--method",
        choices=["dp", "ryser", "enumerate", "aslam"],
        default="dp",
        help="dp, ryser and enumerate are exact; aslam is the UNTRUSTED reduction under test",
    )
    c.add_argument("--gamma", action="store_true", help="run aslam on the 14-node fixture instead of Gamma(n)")
    c.add_argument("--json", metavar="PATH", help="write a JSON report")
    c.add_argument("--trace", action="store_true", help="print the reduction's round trace (aslam only)")
    c.set_defaults(func=cmd_count)

    r = sub.add_parser("refute", help="replay the counter-example on gamma")
    r.add_argument("--bg", metavar="FILE", help="replace BG' by another 9x9 graph")
    r.add_argument("--expect", metavar="CLAIMED,TRUTH", help="expected numbers (default 5,3 without --bg)")
    r.add_argument("--trace", action="store_true")
    r.set_defaults(func=cmd_refute)

    f = sub.add_parser("fuzz", help="search random graphs for reduction miscounts")
    f.add_argument("--n", type=int, default=None)
    f.add_argument("--trials", type=int, default=100)
    f.add_argument("--density", type=float, default=0.5)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--gamma", action="store_true", help="fuzz subgraphs of the gamma union graph (n=9)")
    f.add_argument("--base", metavar="FILE", help="sample edges of this graph instead")
    f.add_argument("--out", metavar="FILE")
    f.set_defaults(func=cmd_fuzz)

    m = sub.add_parser("lemmas", help="exhaustive surplus-edge property checks")
    m.add_argument("--n", type=int, default=5)
    m.set_defaults(func=cmd_lemmas)

    d = sub.add_parser("dump", help="print a generating graph")
    d.add_argument("--gamma", action="store_true")
    d.add_argument("--n", type=int)
    d.add_argument("--cvmps", action="store_true")
    d.set_defaults(func=cmd_dump)

    b = sub.add_parser("bgprime", help="print the counter-example graph BG' as a graph file")
    b.set_defaults(func=cmd_bgprime)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"aslamcheck: {exc.message}", file=sys.stderr)
        return exc.code
    except CapacityError as exc:
        print(f"aslamcheck: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())

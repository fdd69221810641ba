"""Exit criteria A1-A10. Each test times itself against its budget and reports one line.

Run with ``pytest tests/test_acceptance.py`` (the summary block is printed at the end)
or directly as a script.
"""

import itertools
import math
import random
import time
from contextlib import contextmanager

import pytest

from aslamcheck.cli import main
from aslamcheck.gengraph import (
    build_gamma,
    build_generating_graph,
    e_of,
    enumerate_cvmps,
    ep_of,
    is_perfect_matching,
    path_to_permutation,
    se_of,
)
from aslamcheck.harness import (
    build_bg_prime,
    check_surplus_cardinalities,
    count_se_classes,
    gamma_union_graph,
    reproduce_counterexample,
)
from aslamcheck.matching import (
    BipartiteGraph,
    Edge,
    Permutation,
    compose_transpositions,
    decompose,
    edges,
    matching_from_permutation,
)
from aslamcheck.oracles import count_ryser, count_subset_dp, enumerate_perfect_matchings
from aslamcheck.reduction import run_aslam

RESULTS: list[str] = []


@contextmanager
def criterion(name: str, budget_s: float, what: str):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        RESULTS.append(f"{name} FAIL  {what}")
        raise
    elapsed = time.perf_counter() - t0
    ok = elapsed < budget_s
    RESULTS.append(f"{name} {'PASS' if ok else 'FAIL'}  {what} ({elapsed:.2f}s, budget {budget_s:g}s)")
    assert ok, f"{name} took {elapsed:.2f}s, budget {budget_s}s"


GAMMA_MATCHINGS = [
    edges("19", "24", "31", "43", "57", "62", "76", "85", "98"),
    edges("19", "24", "31", "43", "58", "62", "76", "87", "95"),
    edges("19", "26", "31", "43", "57", "64", "72", "85", "98"),
    edges("19", "26", "31", "43", "58", "64", "72", "87", "95"),
    edges("19", "24", "31", "43", "57", "62", "78", "86", "95"),
]


def test_a1_gamma_golden():
    with criterion("A1", 1, "gamma has exactly the five published CVMP matchings"):
        cvmps = enumerate_cvmps(build_gamma())
        assert len(cvmps) == 5
        assert sorted(sorted(e_of(p).edges) for p in cvmps) == sorted(sorted(e) for e in GAMMA_MATCHINGS)


def test_a2_encoding_consistency():
    with criterion("A2", 10, "E(p) equals the matching of pi(p) on gamma and Gamma(3..5)"):
        graphs = [build_gamma()] + [build_generating_graph(n) for n in (3, 4, 5)]
        checked = 0
        for g in graphs:
            for p in enumerate_cvmps(g):
                assert e_of(p) == matching_from_permutation(path_to_permutation(p, g.n))
                checked += 1
        assert checked == 5 + 6 + 24 + 120


def test_a3_counter_example():
    with criterion("A3", 1, "reduction on (gamma, BG') claims 5, truth 3, delta +2"):
        r = reproduce_counterexample()
        assert (r.claimed, r.truth, r.delta) == (5, 3, 2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_a4_factorial_gate(n):
    with criterion(f"A4[n={n}]", 30, f"Gamma({n}) has {math.factorial(n)} CVMPs, all distinct matchings"):
        cvmps = enumerate_cvmps(build_generating_graph(n))
        assert len(cvmps) == math.factorial(n)
        matchings = {e_of(p).edges for p in cvmps}
        assert len(matchings) == math.factorial(n)
        assert all(is_perfect_matching(e_of(p)) for p in cvmps)


def test_a5_oracle_cross_check():
    with criterion("A5", 10, "dp = ryser = enumeration on 50 random graphs; K_nn gives n!"):
        rng = random.Random(2009)
        for _ in range(50):
            n = rng.randint(1, 8)
            density = rng.choice([0.25, 0.5, 0.75])
            bg = BipartiteGraph.from_matrix([[rng.random() < density for _ in range(n)] for _ in range(n)])
            dp = count_subset_dp(bg)
            assert dp == count_ryser(bg) == len(enumerate_perfect_matchings(bg))
        for n in range(1, 9):
            k = BipartiteGraph.complete(n)
            assert count_subset_dp(k) == count_ryser(k) == len(enumerate_perfect_matchings(k)) == math.factorial(n)


def test_a6_round_trip():
    with criterion("A6", 1, "compose(decompose(p)) = p on S_5 and 1000 samples of S_9"):
        for img in itertools.permutations(range(1, 6)):
            p = Permutation(img)
            assert compose_transpositions(decompose(p), 5) == p
        rng = random.Random(9)
        for _ in range(1000):
            img = list(range(1, 10))
            rng.shuffle(img)
            p = Permutation(tuple(img))
            assert compose_transpositions(decompose(p), 9) == p


def test_a7_surplus_cardinalities():
    with criterion("A7", 10, "Gamma(5) non-identity CVMPs: |EP|=9, |SE|=4, SE<EP, |E|=5, count>=24"):
        g = build_generating_graph(5)
        qualifying = [p for p in enumerate_cvmps(g) if not any(a.is_identity for a in p[:4])]
        assert len(qualifying) >= 24
        for p in qualifying:
            ep, se = ep_of(p), se_of(p)
            assert len(ep) == 9 and len(se) == 4 and se < ep and len(e_of(p).edges) == 5
        assert check_surplus_cardinalities(5).holds


def test_a8_surplus_classes():
    with criterion("A8", 10, "Gamma(5) distinct-SE prefix classes >= C(5,i) for i=2,3,4"):
        for i, bound in [(2, 10), (3, 10), (4, 5)]:
            r = count_se_classes(5, i)
            assert r.bound == bound and r.classes >= bound


def test_a9_controls():
    with criterion("A9", 1, "reduction is right on gamma with union-minus-78 (4) and K_99 (5)"):
        g = build_gamma()
        minus78 = gamma_union_graph().without(Edge(7, 8))
        assert run_aslam(g, minus78).count == 4 == reproduce_counterexample(minus78).truth
        k9 = BipartiteGraph.complete(9)
        assert run_aslam(g, k9).count == 5 == reproduce_counterexample(k9).truth


def test_a10_fuzz_determinism(tmp_path):
    with criterion("A10", 30, "fixed-seed fuzz output is byte-identical across runs"):
        outs = []
        for name in ("first.txt", "second.txt"):
            path = tmp_path / name
            argv = ["fuzz", "--n", "4", "--trials", "500", "--density", "0.6", "--seed", "20090515", "--out", str(path)]
            assert main(argv) == 0
            outs.append(path.read_bytes())
        assert outs[0] == outs[1]
        assert b"discrepancies=" in outs[0]


def test_bg_prime_is_the_published_graph():
    assert len(build_bg_prime().edges()) == 16


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))

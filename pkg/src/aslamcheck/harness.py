"""Counter-example replay, lemma property suites and a seeded discrepancy fuzzer."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from aslamcheck.errors import CapacityError, InvalidInputError
from aslamcheck.gengraph import (
    GeneratingGraph,
    GPath,
    build_gamma,
    build_generating_graph,
    cvmps_cached,
    e_of,
    ep_of,
    er_of,
    path_to_permutation,
    se_of,
)
from aslamcheck.matching import BipartiteGraph, Edge, format_edges
from aslamcheck.oracles import count_subset_dp
from aslamcheck.reduction import run_aslam

MISSING_EDGE = Edge(7, 6)
EXPECTED = (5, 3, 2)  # claimed, truth, delta on (gamma, BG')


def gamma_union_graph() -> BipartiteGraph:
    """Union of the matchings of gamma's five CVMPs (17 edges)."""
    g = build_gamma()
    union = frozenset().union(*(e_of(p).edges for p in cvmps_cached(g)))
    return BipartiteGraph.from_edges(9, union)


def build_bg_prime() -> BipartiteGraph:
    return gamma_union_graph().without(MISSING_EDGE)


@dataclass(frozen=True)
class PathWitness:
    nodes: GPath
    path: str
    pi: str
    matching: frozenset[Edge]
    er: frozenset[Edge]
    counted: bool

    @property
    def valid(self) -> bool:
        return not self.er


@dataclass(frozen=True)
class DiscrepancyReport:
    graph: BipartiteGraph
    claimed: int
    truth: int
    oracle: int
    witness: tuple[PathWitness, ...]
    trial: int | None = None
    trace: tuple[str, ...] = field(default=(), compare=False, repr=False)

    @property
    def delta(self) -> int:
        return self.claimed - self.truth

    def to_text(self) -> str:
        n = self.graph.n
        lines = ["report"]
        if self.trial is not None:
            lines.append(f"trial: {self.trial}")
        lines += [
            f"n: {n}",
            "edges: " + " ".join(e.label(n) for e in self.graph.edges()),
            f"claimed: {self.claimed}",
            f"truth: {self.truth}",
            f"delta: {self.delta:+d}",
            f"permanent: {self.oracle}",
            "paths:",
        ]
        for w in self.witness:
            lines.append(
                f"  {w.path} | pi={w.pi} | E={format_edges(w.matching, n)}"
                f" | ER={format_edges(w.er, n)} | {'counted' if w.counted else 'skipped'}"
                f" | {'valid' if w.valid else 'invalid'}"
            )
        return "\n".join(lines) + "\n"


def evaluate(
    g: GeneratingGraph,
    bg: BipartiteGraph,
    witness: Literal["all", "mismatch"] = "all",
    trial: int | None = None,
) -> DiscrepancyReport:
    """Compare the reduction's count on (g, bg) with the CVMP-scoped truth."""
    result = run_aslam(g, bg, mode="audit")
    counted = result.counted_paths()
    rows = []
    truth = 0
    for p in cvmps_cached(g):
        er = er_of(p, bg)
        truth += not er
        w = PathWitness(
            nodes=p,
            path=g.path_name(p),
            pi=str(path_to_permutation(p, g.n)),
            matching=e_of(p).edges,
            er=er,
            counted=p in counted,
        )
        if witness == "all" or w.counted != w.valid:
            rows.append(w)
    return DiscrepancyReport(
        graph=bg,
        claimed=result.count,
        truth=truth,
        oracle=count_subset_dp(bg),
        witness=tuple(rows),
        trial=trial,
        trace=tuple(result.trace.lines),
    )


def reproduce_counterexample(bg: BipartiteGraph | None = None) -> DiscrepancyReport:
    return evaluate(build_gamma(), build_bg_prime() if bg is None else bg)


# --- lemma suites ---------------------------------------------------------


@dataclass(frozen=True)
class PropertyReport:
    name: str
    holds: bool
    details: dict = field(default_factory=dict)

    def __str__(self) -> str:
        body = ", ".join(f"{k}={v}" for k, v in self.details.items())
        return f"{self.name}: {'PASS' if self.holds else 'FAIL'} ({body})"


def _small_gamma(n: int, limit: int = 6) -> GeneratingGraph:
    if n < 1:
        raise InvalidInputError("n must be >= 1")
    if n > limit:
        raise CapacityError(f"exhaustive lemma checks are limited to n <= {limit}")
    return build_generating_graph(n)


def check_surplus_cardinalities(n: int) -> PropertyReport:
    """CVMPs whose first n-1 nodes are non-identity: |EP|=2n-1, |SE|=n-1, SE < EP, |E|=n."""
    g = _small_gamma(n)
    qualifying = [p for p in cvmps_cached(g) if not any(a.is_identity for a in p[:-1])]
    bad = [
        g.path_name(p)
        for p in qualifying
        if not (
            len(ep_of(p)) == 2 * n - 1
            and len(se_of(p)) == n - 1
            and se_of(p) < ep_of(p)
            and len(e_of(p).edges) == n
        )
    ]
    bound = math.factorial(n - 1)
    return PropertyReport(
        f"surplus-cardinality n={n}",
        holds=not bad and len(qualifying) >= bound,
        details={"qualifying": len(qualifying), "bound": bound, "violations": len(bad)},
    )


@dataclass(frozen=True)
class SEClassReport:
    n: int
    i: int
    classes: int
    prefixes: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.classes >= self.bound

    def __str__(self) -> str:
        return (
            f"se-classes n={self.n} i={self.i}: {'PASS' if self.holds else 'FAIL'}"
            f" (classes={self.classes}, prefixes={self.prefixes}, bound={self.bound})"
        )


def count_se_classes(n: int, i: int) -> SEClassReport:
    """Group the distinct partition-1..i prefixes of CVMPs by their surplus-edge set."""
    if not 1 <= i < n:
        raise InvalidInputError("need 1 <= i < n")
    g = _small_gamma(n)
    prefixes = {p[:i] for p in cvmps_cached(g)}
    classes = {se_of(q) for q in prefixes}
    return SEClassReport(n, i, len(classes), len(prefixes), math.comb(n, i))


# --- fuzzing --------------------------------------------------------------

MAX_FUZZ_N = 5


@dataclass(frozen=True)
class FuzzConfig:
    """Random incomplete graphs for the reduction.

    In full mode the generating graph is Gamma(n) and every cell of the n x n
    matrix is kept with probability ``density``. In gamma mode (n = 9) the
    fixture gamma is used and each edge of ``base`` (default: the union of
    gamma's five matchings) is kept with probability ``density``.
    """

    n: int = 4
    trials: int = 100
    density: float = 0.5
    seed: int = 0
    gamma: bool = False
    base: BipartiteGraph | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidInputError("trials must be >= 1")
        if not 0.0 <= self.density <= 1.0:
            raise InvalidInputError("density must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise InvalidInputError("seed must be a 64-bit unsigned integer")
        if self.gamma:
            if self.n != 9:
                raise InvalidInputError("gamma mode needs n = 9")
        elif not 1 <= self.n <= MAX_FUZZ_N:
            raise CapacityError(f"full-graph fuzzing is limited to 1 <= n <= {MAX_FUZZ_N}")
        if self.base is not None and self.base.n != self.n:
            raise InvalidInputError("base graph size does not match n")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """PCG64 stream keyed by (seed, trial), independent of scheduling."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


def sample_graph(cfg: FuzzConfig, trial: int) -> BipartiteGraph:
    rng = trial_rng(cfg.seed, trial)
    if cfg.gamma or cfg.base is not None:
        base = cfg.base or gamma_union_graph()
        pool = base.edges()
    else:
        pool = [Edge(i, j) for i in range(1, cfg.n + 1) for j in range(1, cfg.n + 1)]
    draws = rng.random(len(pool))
    return BipartiteGraph.from_edges(cfg.n, [e for e, u in zip(pool, draws) if u < cfg.density])


def run_trial(cfg: FuzzConfig, trial: int) -> DiscrepancyReport:
    g = build_gamma() if cfg.gamma else build_generating_graph(cfg.n)
    report = evaluate(g, sample_graph(cfg, trial), witness="mismatch", trial=trial)
    if not cfg.gamma and report.truth != report.oracle:
        # CVMPs of Gamma(n) biject with permutations, so the scoped truth must be the permanent
        raise AssertionError(
            f"trial {trial}: CVMP-scoped truth {report.truth} != permanent {report.oracle}"
        )
    return report


def fuzz(cfg: FuzzConfig) -> list[DiscrepancyReport]:
    return [r for t in range(cfg.trials) if (r := run_trial(cfg, t)).delta != 0]

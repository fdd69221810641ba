"""The generating graph Gamma(n), the 14-node fixture gamma, and path evaluation.

A node ``(ik,ji)`` in partition i carries the edge pair {(i,k), (j,i)}. A path
takes one node per consecutive partition. Its matching is recovered either
from the transposition product of its nodes or as EP minus the surplus edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from aslamcheck.errors import InvalidInputError
from aslamcheck.matching import (
    BipartiteGraph,
    Edge,
    Matching,
    Permutation,
    Transposition,
    compose_transpositions,
    format_edges,
    is_perfect_matching,
    matching_from_permutation,
)


class GNode(NamedTuple):
    """Node ``(ik,ji)`` of partition ``partition`` (= i)."""

    partition: int
    k: int
    j: int

    @property
    def is_identity(self) -> bool:
        return self.k == self.partition

    def label(self, n: int = 9) -> str:
        i = self.partition
        return f"({Edge(i, self.k).label(n)},{Edge(self.j, i).label(n)})"


def gnode(i: int, k: int, j: int, n: int) -> GNode:
    if not ((i < k <= n and i < j <= n) or (i == j == k and 1 <= i <= n)):
        raise InvalidInputError(f"({i}{k},{j}{i}) is not a node of partition {i} for n={n}")
    return GNode(i, k, j)


GPath = tuple[GNode, ...]


@dataclass(frozen=True, eq=False)
class GeneratingGraph:
    n: int
    partitions: dict[int, tuple[GNode, ...]]
    succ: dict[GNode, tuple[GNode, ...]]
    jumps: dict[GNode, tuple[GNode, ...]] = field(default_factory=dict)
    names: dict[GNode, str] = field(default_factory=dict)

    @property
    def nodes(self) -> list[GNode]:
        return [a for i in sorted(self.partitions) for a in self.partitions[i]]

    def edges(self) -> list[tuple[GNode, GNode]]:
        return [(a, b) for a in self.nodes for b in self.succ.get(a, ())]

    def name(self, a: GNode) -> str:
        return self.names.get(a) or a.label(self.n)

    def path_name(self, p: Sequence[GNode]) -> str:
        return " ".join(self.name(a) for a in p)


# --- path formulas -------------------------------------------------------


def psi(a: GNode) -> Transposition:
    return Transposition(a.partition, a.k)


def node_ep(a: GNode) -> frozenset[Edge]:
    i = a.partition
    return frozenset({Edge(i, a.k), Edge(a.j, i)})


def node_se(a: GNode) -> frozenset[Edge]:
    """Surplus edge (j, k) of a non-identity node; identity nodes carry none."""
    if a.is_identity:
        return frozenset()
    return frozenset({Edge(a.j, a.k)})


def node_er(a: GNode, bg: BipartiteGraph) -> frozenset[Edge]:
    return frozenset(e for e in node_ep(a) if e not in bg)


def ep_of(p: Sequence[GNode]) -> frozenset[Edge]:
    return frozenset().union(*(node_ep(a) for a in p))


def se_of(p: Sequence[GNode]) -> frozenset[Edge]:
    return frozenset().union(*(node_se(a) for a in p))


def e_of(p: Sequence[GNode]) -> Matching:
    ep = ep_of(p)
    return Matching(ep - (se_of(p) & ep), _path_n(p))


def er_of(p: Sequence[GNode], bg: BipartiteGraph) -> frozenset[Edge]:
    req = frozenset().union(*(node_er(a, bg) for a in p))
    return req - (se_of(p) & req)


def _path_n(p: Sequence[GNode]) -> int:
    return p[-1].partition if p else 0


def path_to_permutation(p: Sequence[GNode], n: int | None = None) -> Permutation:
    n = n or _path_n(p)
    return compose_transpositions([psi(a) for a in reversed(p)], n)


@dataclass(frozen=True)
class PathSets:
    ep: frozenset[Edge]
    se: frozenset[Edge]
    e: frozenset[Edge]
    er: frozenset[Edge] | None = None


def path_sets(p: Sequence[GNode], bg: BipartiteGraph | None = None) -> PathSets:
    return PathSets(
        ep=ep_of(p),
        se=se_of(p),
        e=e_of(p).edges,
        er=None if bg is None else er_of(p, bg),
    )


def is_cvmp(p: Sequence[GNode], n: int | None = None) -> bool:
    """E(p) is a perfect matching and agrees with the matching of pi(p)."""
    n = n or _path_n(p)
    if len(p) != n or any(a.partition != i for i, a in enumerate(p, start=1)):
        return False
    m = e_of(p)
    return is_perfect_matching(m) and m == matching_from_permutation(path_to_permutation(p, n))


def traversal_paths(g: GeneratingGraph) -> Iterator[GPath]:
    """All partition-1 -> partition-n paths along traversal edges, label order."""
    def walk(prefix: list[GNode]) -> Iterator[GPath]:
        a = prefix[-1]
        if a.partition == g.n:
            yield tuple(prefix)
            return
        for b in sorted(g.succ.get(a, ())):
            prefix.append(b)
            yield from walk(prefix)
            prefix.pop()

    for a in sorted(g.partitions.get(1, ())):
        yield from walk([a])


def enumerate_cvmps(g: GeneratingGraph) -> list[GPath]:
    return [p for p in traversal_paths(g) if is_cvmp(p, g.n)]


@lru_cache(maxsize=32)
def cvmps_cached(g: GeneratingGraph) -> tuple[GPath, ...]:
    return tuple(enumerate_cvmps(g))


# --- Gamma(n) -------------------------------------------------------------


def is_r_relation(a: GNode, b: GNode) -> bool:
    """b sits in partition j of a = (ik,ji) and carries a's surplus as (jk, .j)."""
    return not a.is_identity and b.partition == a.j and b.k == a.k


def literal_s_clause(a: GNode, b: GNode) -> bool:
    """Literal S-edge clauses between consecutive partitions.

    With a = (i k1, k2 i) and b = (i+1 t1, t2 i+1): both of {k1, t2} below both
    of {k2, t1}, or both of {k2, t1} below both of {k1, t2}, or k1 == k2 below
    both of {t1, t2}. Kept for reference; this relation alone is too sparse to
    carry all n! matchings (see ``can_follow``).
    """
    if b.partition != a.partition + 1:
        return False
    k1, k2, t1, t2 = a.k, a.j, b.k, b.j
    return (
        max(k1, t2) < min(k2, t1)
        or max(k2, t1) < min(k1, t2)
        or (k1 == k2 and k1 < min(t1, t2))
    )


def can_follow(a: GNode, b: GNode) -> bool:
    """Whether b can be the next node after a on some path realising a matching.

    Reading a node of partition i as (i, r(i)), (r^-1(i), i) for the residual
    permutation r left after peeling psi_1..psi_{i-1}, peeling psi_i redirects
    j to k. The next node is then forced to carry k if j == i+1, to carry j as
    its second index if k == i+1, and otherwise must avoid both.
    """
    if b.partition != a.partition + 1:
        return False
    if a.is_identity:
        return True
    nxt = b.partition
    if a.j == nxt:
        return b.k == a.k
    if a.k == nxt:
        return b.j == a.j
    return b.k != a.k and b.j != a.j


@lru_cache(maxsize=16)
def build_generating_graph(n: int) -> GeneratingGraph:
    if n < 1:
        raise InvalidInputError("n must be >= 1")
    parts: dict[int, tuple[GNode, ...]] = {}
    for i in range(1, n + 1):
        layer = [GNode(i, i, i)]
        layer += [GNode(i, k, j) for k in range(i + 1, n + 1) for j in range(i + 1, n + 1)]
        parts[i] = tuple(sorted(layer))
    succ, jumps = {}, {}
    for i in range(1, n):
        for a in parts[i]:
            succ[a] = tuple(b for b in parts[i + 1] if can_follow(a, b))
            if not a.is_identity and a.j > i + 1:
                jumps[a] = tuple(b for b in parts[a.j] if is_r_relation(a, b))
    return GeneratingGraph(n, parts, succ, jumps)


def node_count(n: int) -> int:
    return sum((n - i) ** 2 for i in range(1, n)) + n


# --- the fixture gamma ----------------------------------------------------

GAMMA_NODES: dict[str, tuple[int, int, int]] = {
    "c1": (1, 9, 3),
    "a2": (2, 4, 6),
    "b2": (2, 6, 7),
    "c3": (3, 9, 4),
    "c4": (4, 9, 6),
    "a5": (5, 7, 8),
    "b5": (5, 8, 9),
    "d5": (5, 7, 9),
    "c6": (6, 9, 7),
    "d6": (6, 9, 8),
    "c7": (7, 9, 8),
    "d7": (7, 8, 9),
    "c8": (8, 9, 9),
    "c9": (9, 9, 9),
}

GAMMA_SUCC: dict[str, tuple[str, ...]] = {
    "c1": ("a2", "b2"),
    "a2": ("c3",),
    "b2": ("c3",),
    "c3": ("c4",),
    "c4": ("a5", "b5", "d5"),
    "a5": ("c6",),
    "b5": ("c6",),
    "d5": ("d6",),
    "c6": ("c7",),
    "d6": ("d7",),
    "c7": ("c8",),
    "d7": ("c8",),
    "c8": ("c9",),
}


@lru_cache(maxsize=1)
def build_gamma() -> GeneratingGraph:
    node = {name: gnode(*t, n=9) for name, t in GAMMA_NODES.items()}
    parts: dict[int, list[GNode]] = {}
    for a in node.values():
        parts.setdefault(a.partition, []).append(a)
    succ = {node[s]: tuple(sorted(node[t] for t in ts)) for s, ts in GAMMA_SUCC.items()}
    return GeneratingGraph(
        n=9,
        partitions={i: tuple(sorted(v)) for i, v in sorted(parts.items())},
        succ=succ,
        names={a: name for name, a in node.items()},
    )


def gamma_node(name: str) -> GNode:
    return GNode(*GAMMA_NODES[name])


def gamma_path(x2: str, x5: str) -> GPath:
    """P(x2, x5): the gamma path from c1 through x2 and x5 to c9."""
    g = build_gamma()
    want = {gamma_node(x2), gamma_node(x5)}
    for p in traversal_paths(g):
        if want <= set(p):
            return p
    raise InvalidInputError(f"no path through {x2} and {x5} in gamma")


# --- text output ----------------------------------------------------------


def dump_graph(g: GeneratingGraph) -> str:
    lines = []
    for i in sorted(g.partitions):
        for a in g.partitions[i]:
            succ = " ".join(g.name(b) for b in g.succ.get(a, ()))
            head = g.name(a)
            if a in g.names:
                head = f"{head}={a.label(g.n)}"
            lines.append(f"partition {i}: {head} -> {succ}".rstrip())
    return "\n".join(lines) + "\n"


def format_cvmp_line(g: GeneratingGraph, p: Sequence[GNode]) -> str:
    pi = path_to_permutation(p, g.n)
    return " | ".join(
        [g.path_name(p), str(pi), format_edges(e_of(p).edges, g.n), format_edges(se_of(p), g.n)]
    )

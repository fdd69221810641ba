"""Permutations, transpositions and the permutation <-> perfect matching encoding.

All public indices are 1-based. A product of transpositions is always handled
as a list in *application order*: the first element acts first. The written
product ``(5,5)(4,5)(3,5)(2,3)(1,5)`` is that list read left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from aslamcheck.errors import InvalidInputError


class Edge(NamedTuple):
    """Edge v_row -- w_col of a bipartite graph."""

    row: int
    col: int

    def label(self, n: int = 9) -> str:
        if n <= 9:
            return f"{self.row}{self.col}"
        return f"({self.row},{self.col})"


def format_edges(edges: Iterable[Edge], n: int = 9) -> str:
    return "{" + ",".join(e.label(n) for e in sorted(edges)) + "}"


def parse_edge(text: str) -> Edge:
    """Parse ``"76"`` (two digits) or ``"(7,6)"``."""
    text = text.strip()
    m = re.fullmatch(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    if m:
        return Edge(int(m.group(1)), int(m.group(2)))
    if re.fullmatch(r"\d\d", text):
        return Edge(int(text[0]), int(text[1]))
    raise InvalidInputError(f"cannot parse edge {text!r}")


def edges(*labels: str) -> frozenset[Edge]:
    """Shorthand: ``edges("19", "24")`` -> {Edge(1, 9), Edge(2, 4)}."""
    return frozenset(parse_edge(s) for s in labels)


@dataclass(frozen=True)
class BipartiteGraph:
    """n x n presence matrix; ``present[i-1][j-1]`` iff edge (i, j) exists."""

    n: int
    present: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError("n must be >= 1")
        if len(self.present) != self.n or any(len(r) != self.n for r in self.present):
            raise InvalidInputError(f"presence matrix must be {self.n}x{self.n}")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int | bool]]) -> "BipartiteGraph":
        return cls(len(rows), tuple(tuple(bool(x) for x in r) for r in rows))

    @classmethod
    def from_edges(cls, n: int, es: Iterable[Edge | tuple[int, int]]) -> "BipartiteGraph":
        grid = [[False] * n for _ in range(n)]
        for i, j in es:
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidInputError(f"edge ({i},{j}) outside 1..{n}")
            grid[i - 1][j - 1] = True
        return cls(n, tuple(tuple(r) for r in grid))

    @classmethod
    def complete(cls, n: int) -> "BipartiteGraph":
        return cls(n, tuple((True,) * n for _ in range(n)))

    def has_edge(self, e: Edge | tuple[int, int]) -> bool:
        i, j = e
        return 1 <= i <= self.n and 1 <= j <= self.n and self.present[i - 1][j - 1]

    def __contains__(self, e) -> bool:
        return self.has_edge(e)

    def edges(self) -> list[Edge]:
        return [
            Edge(i + 1, j + 1)
            for i in range(self.n)
            for j in range(self.n)
            if self.present[i][j]
        ]

    def without(self, *es: Edge) -> "BipartiteGraph":
        drop = set(es)
        return BipartiteGraph.from_edges(self.n, [e for e in self.edges() if e not in drop])

    def to_matrix(self) -> list[list[int]]:
        return [[int(x) for x in r] for r in self.present]


class Transposition(NamedTuple):
    """The transposition (i, k) with i <= k; i == k is the identity."""

    i: int
    k: int

    def apply(self, x: int) -> int:
        if x == self.i:
            return self.k
        if x == self.k:
            return self.i
        return x

    def __str__(self) -> str:
        return f"({self.i},{self.k})"


def transposition(i: int, k: int, n: int) -> Transposition:
    if not (1 <= i <= k <= n):
        raise InvalidInputError(f"transposition ({i},{k}) needs 1 <= i <= k <= {n}")
    return Transposition(i, k)


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}; ``image[i-1] == pi(i)``."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise InvalidInputError(f"not a permutation of 1..{len(self.image)}: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.image, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Each cycle (a_1, ..., a_m) maps a_r -> a_{r+1} and a_m -> a_1."""
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n or a in seen:
                    raise InvalidInputError(f"bad cycle element {a} for n={n}")
                seen.add(a)
            for r, a in enumerate(cyc):
                image[a - 1] = cyc[(r + 1) % len(cyc)]
        return cls(tuple(image))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``"(2,3,1,5,4)"`` or ``"(1,3)(2,4)"``."""
        cycles = [
            [int(x) for x in body.split(",") if x.strip()]
            for body in re.findall(r"\(([^()]*)\)", text)
        ]
        if re.sub(r"\([^()]*\)", "", text).strip():
            raise InvalidInputError(f"cannot parse cycle notation {text!r}")
        if n is None:
            n = max((max(c) for c in cycles if c), default=0)
        return cls.from_cycles(n, [c for c in cycles if c])

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its least element."""
        out, seen = [], set()
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)


def compose_transpositions(ts: Sequence[Transposition | tuple[int, int]], n: int) -> Permutation:
    """Permutation obtained by applying ``ts`` left to right to every point."""
    checked = [transposition(i, k, n) for i, k in ts]
    image = []
    for x in range(1, n + 1):
        for t in checked:
            x = t.apply(x)
        image.append(x)
    return Permutation(tuple(image))


def decompose(p: Permutation) -> list[Transposition]:
    """The unique list [psi_n, ..., psi_1] with psi_i = (i, k), k >= i, composing to p.

    psi_1 acts last, so it must send 1 to p(1); cancelling it leaves a
    permutation fixing 1, and the argument repeats on 2, 3, ...
    """
    residual = list(p.image)
    peeled = []
    for i in range(1, p.n + 1):
        k = residual[i - 1]
        peeled.append(Transposition(i, k))
        # residual <- psi_i o residual
        residual = [Transposition(i, k).apply(v) for v in residual]
    return peeled[::-1]


def format_transpositions(ts: Iterable[Transposition | tuple[int, int]]) -> str:
    return "".join(f"({i},{k})" for i, k in ts)


def parse_transpositions(text: str, n: int) -> list[Transposition]:
    pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    if re.sub(r"\(\s*\d+\s*,\s*\d+\s*\)", "", text).strip():
        raise InvalidInputError(f"cannot parse transposition list {text!r}")
    return [transposition(int(i), int(k), n) for i, k in pairs]


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]
    n: int

    def __str__(self) -> str:
        return format_edges(self.edges, self.n)


def matching_from_permutation(p: Permutation) -> Matching:
    return Matching(frozenset(Edge(i, p(i)) for i in range(1, p.n + 1)), p.n)


def is_perfect_matching(m: Matching) -> bool:
    full = set(range(1, m.n + 1))
    rows = [e.row for e in m.edges]
    cols = [e.col for e in m.edges]
    return (
        len(m.edges) == m.n
        and len(set(rows)) == m.n
        and set(rows) == full
        and set(cols) == full
        and len(set(cols)) == m.n
    )

"""The VMPSet add/multiply reduction, implemented as described rather than as it should be.

A VMPSet stands for a set of path segments between two nodes and stores one
ER for all of them plus one set-level record of surplus edges. Adding two sets
unions their surplus records; multiplying cancels the ER of either side against
the surplus record of both. Once several segments share one record, a surplus
edge that only some members carry can cancel a requirement for all of them,
which is how the count drifts above the truth.

Member paths are kept on every set: the multiplication precondition (every
pair of members must join into a valid segment) is a property of the members.
``count`` is still maintained purely arithmetically, so ``len(members)`` is an
independent check on it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Literal

from aslamcheck.errors import NotAddableError, NotMultipliableError
from aslamcheck.gengraph import (
    GeneratingGraph,
    GNode,
    GPath,
    cvmps_cached,
    er_of,
    node_er,
    se_of,
)
from aslamcheck.matching import BipartiteGraph, Edge, format_edges

Mode = Literal["faithful", "audit"]


@dataclass(frozen=True, eq=False)
class VMPSet:
    start: GNode
    end: GNode
    count: int
    er: frozenset[Edge]
    se_tracked: frozenset[Edge]
    members: tuple[GPath, ...]
    parts: tuple["VMPSet", ...] = ()
    factors: tuple["VMPSet", "VMPSet"] | None = None

    @property
    def endpoints(self) -> tuple[GNode, GNode]:
        return self.start, self.end


ReductionMatrix = dict[tuple[GNode, GNode], list[VMPSet]]


def unit_vmpset(segment: GPath, bg: BipartiteGraph) -> VMPSet:
    return VMPSet(
        start=segment[0],
        end=segment[-1],
        count=1,
        er=er_of(segment, bg),
        se_tracked=se_of(segment),
        members=(tuple(segment),),
    )


def init_ptm(g: GeneratingGraph, bg: BipartiteGraph) -> ReductionMatrix:
    """One single-path VMPSet per traversal edge; the graph itself is left intact."""
    cells: ReductionMatrix = {}
    if g.n == 1:
        for a in g.partitions.get(1, ()):
            cells[(a, a)] = [unit_vmpset((a,), bg)]
        return cells
    for a, b in g.edges():
        cells.setdefault((a, b), []).append(unit_vmpset((a, b), bg))
    return cells


def vmpset_add(a: VMPSet, b: VMPSet) -> VMPSet:
    if a.endpoints != b.endpoints:
        raise NotAddableError("VMPSets have different endpoints")
    if a.er != b.er:
        raise NotAddableError("VMPSets have different ER")
    if a is b or set(a.members) & set(b.members):
        raise NotAddableError("VMPSets share member paths")
    return VMPSet(
        start=a.start,
        end=a.end,
        count=a.count + b.count,
        er=a.er,
        se_tracked=a.se_tracked | b.se_tracked,
        members=a.members + b.members,
        parts=(a.parts or (a,)) + (b.parts or (b,)),
    )


def vmpset_multiply(a: VMPSet, c: VMPSet) -> VMPSet:
    if a.end != c.start:
        raise NotMultipliableError("left set does not end where right set starts")
    tracked = a.se_tracked | c.se_tracked
    return VMPSet(
        start=a.start,
        end=c.end,
        count=a.count * c.count,
        er=(a.er | c.er) - tracked,
        se_tracked=tracked,
        members=tuple(p + q[1:] for p in a.members for q in c.members),
        factors=(a, c),
    )


class VmpOracle:
    """Segment validity: a segment is a VMP iff it lies on some CVMP of the graph."""

    def __init__(self, g: GeneratingGraph):
        self.segments: set[GPath] = set()
        for p in cvmps_cached(g):
            for lo in range(len(p)):
                for hi in range(lo + 1, len(p) + 1):
                    self.segments.add(p[lo:hi])

    def __call__(self, segment: GPath) -> bool:
        return tuple(segment) in self.segments


def all_pairs_multiply(a: VMPSet, c: VMPSet, is_vmp: VmpOracle) -> bool:
    """Every member of ``a`` joins every member of ``c`` into a VMP."""
    return a.end == c.start and all(is_vmp(p + q[1:]) for p in a.members for q in c.members)


def partition_er_uniform(c: VMPSet, bg: BipartiteGraph) -> bool:
    """Nodes covered by members of ``c`` in one partition all have the same ER.

    This is the per-partition precondition Aslam states for the right operand
    of a product. It is reported, never enforced: it is neither necessary nor
    sufficient for the product to have a single ER.
    """
    seen: dict[int, set[frozenset[Edge]]] = {}
    for p in c.members:
        for a in p:
            seen.setdefault(a.partition, set()).add(node_er(a, bg))
    return all(len(v) == 1 for v in seen.values())


def split(x: VMPSet) -> list[VMPSet]:
    """Finer sets whose members partition ``x``'s members (``x.count`` > 1)."""
    if x.parts:
        return list(x.parts)
    assert x.factors is not None
    left, right = x.factors
    if left.count > 1:
        return [vmpset_multiply(piece, right) for piece in split(left)]
    return [vmpset_multiply(left, piece) for piece in split(right)]


@dataclass
class RoundTrace:
    lines: list[str] = field(default_factory=list)
    rounds: int = 0

    def __str__(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


@dataclass(frozen=True)
class SetAudit:
    start: str
    end: str
    count: int
    er: frozenset[Edge]
    member_ers: tuple[tuple[frozenset[Edge], int], ...]

    @property
    def uniform(self) -> bool:
        return len(self.member_ers) <= 1

    @property
    def true_valid(self) -> int:
        return sum(k for er, k in self.member_ers if not er)


@dataclass
class AslamResult:
    count: int
    trace: RoundTrace
    final: list[VMPSet]
    audit: list[SetAudit] | None = None

    def counted_paths(self) -> set[GPath]:
        """Full paths whose final set was summed (stored ER empty)."""
        return {p for s in self.final if not s.er for p in s.members}


class _Reducer:
    def __init__(self, g: GeneratingGraph, bg: BipartiteGraph, mode: Mode, is_vmp: VmpOracle):
        self.g, self.bg, self.mode, self.is_vmp = g, bg, mode, is_vmp
        self.trace = RoundTrace()
        self.round = 0
        self.n_format = g.n

    def _span(self, s: VMPSet) -> str:
        return f"({self.g.name(s.start)},{self.g.name(s.end)})"

    def _er(self, er: Iterable[Edge]) -> str:
        return "ER=" + format_edges(er, self.n_format)

    def _check(self, s: VMPSet) -> VMPSet:
        if self.mode == "audit" and s.count != len(s.members):
            raise AssertionError(f"count {s.count} != {len(s.members)} members on {self._span(s)}")
        return s

    def log(self, msg: str) -> None:
        self.trace.lines.append(f"round {self.round}: {msg}")

    def add_phase(self, cells: ReductionMatrix) -> ReductionMatrix:
        out: ReductionMatrix = {}
        for key in sorted(cells):
            groups: dict[frozenset[Edge], VMPSet] = {}
            order: list[frozenset[Edge]] = []
            for s in cells[key]:
                if s.er not in groups:
                    groups[s.er] = s
                    order.append(s.er)
                    continue
                acc = groups[s.er]
                merged = self._check(vmpset_add(acc, s))
                self.log(
                    f"ADD {self._span(s)} {acc.count}+{s.count} -> {merged.count} | {self._er(merged.er)}"
                )
                groups[s.er] = merged
            out[key] = [groups[er] for er in order]
        return out

    def multiply(self, x: VMPSet, y: VMPSet) -> list[VMPSet]:
        if all_pairs_multiply(x, y, self.is_vmp):
            prod = self._check(vmpset_multiply(x, y))
            self.log(
                f"MUL {self._span(x)}x{self._span(y)} {x.count}*{y.count} -> {prod.count}"
                f" | {self._er(prod.er)}"
            )
            return [prod]
        if x.count == 1 and y.count == 1:
            return []
        side, pieces = ("left", split(x)) if x.count > 1 else ("right", split(y))
        self.log(
            f"SPLIT {self._span(x)}x{self._span(y)} {side} into {len(pieces)}"
            " (not every pair forms a VMP)"
        )
        out = []
        for piece in pieces:
            out += self.multiply(piece, y) if side == "left" else self.multiply(x, piece)
        return out

    def run(self) -> AslamResult:
        g = self.g
        cells = init_ptm(g, self.bg)
        bps = list(range(1, g.n + 1))
        while len(bps) > 2:
            self.round += 1
            cells = self.add_phase(cells)
            nxt: ReductionMatrix = {}
            for idx in range(0, len(bps) - 1, 2):
                lo, mid = bps[idx], bps[idx + 1]
                left = {k: v for k, v in cells.items() if k[0].partition == lo and k[1].partition == mid}
                if idx + 2 >= len(bps):
                    nxt.update(left)
                    continue
                hi = bps[idx + 2]
                right = {k: v for k, v in cells.items() if k[0].partition == mid and k[1].partition == hi}
                for (a, b) in sorted(left):
                    for (b2, c) in sorted(right):
                        if b2 != b:
                            continue
                        for x in left[(a, b)]:
                            for y in right[(b, c)]:
                                for prod in self.multiply(x, y):
                                    nxt.setdefault((a, c), []).append(prod)
            cells = nxt
            bps = bps[::2] if bps[-1] in bps[::2] else bps[::2] + [bps[-1]]
        self.round += 1
        cells = self.add_phase(cells)
        final = [
            s
            for (a, c), ss in sorted(cells.items())
            if a.partition == 1 and c.partition == g.n
            for s in ss
        ]
        total = 0
        for s in final:
            counted = not s.er
            if counted:
                total += s.count
            self.log(
                f"SUM {self._span(s)} {s.count} | {self._er(s.er)} | {'counted' if counted else 'skipped'}"
            )
        self.trace.rounds = self.round
        audit = None
        if self.mode == "audit":
            audit = [self._audit(s) for s in final]
            for a in audit:
                tally = " ".join(
                    f"{format_edges(er, self.n_format)}x{k}" for er, k in a.member_ers
                )
                self.log(f"AUDIT ({a.start},{a.end}) {a.count} | {self._er(a.er)} | members {tally}")
        return AslamResult(total, self.trace, final, audit)

    def _audit(self, s: VMPSet) -> SetAudit:
        tally = Counter(er_of(p, self.bg) for p in s.members)
        ordered = tuple(sorted(tally.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))
        return SetAudit(self.g.name(s.start), self.g.name(s.end), s.count, s.er, ordered)


_ORACLES: dict[int, tuple[GeneratingGraph, VmpOracle]] = {}


def vmp_oracle(g: GeneratingGraph) -> VmpOracle:
    hit = _ORACLES.get(id(g))
    if hit is None or hit[0] is not g:
        hit = (g, VmpOracle(g))
        _ORACLES[id(g)] = hit
    return hit[1]


def run_aslam(g: GeneratingGraph, bg: BipartiteGraph, mode: Mode = "faithful") -> AslamResult:
    """Run the reduction on ``g`` against the incomplete graph ``bg``.

    Span boundaries start at every partition and are halved each round
    (balanced doubling). Each round first adds, within each cell, all sets with
    equal stored ER, then multiplies neighbouring spans. A product whose members
    do not all pair into VMPs is retried on the summands of the coarser operand.
    The result sums the counts of full-span sets whose stored ER is empty.
    """
    if mode not in ("faithful", "audit"):
        raise ValueError(f"unknown mode {mode!r}")
    if bg.n != g.n:
        raise ValueError(f"graph sizes differ: {g.n} vs {bg.n}")
    return _Reducer(g, bg, mode, vmp_oracle(g)).run()

"""Exact perfect-matching counts (the permanent of a 0/1 matrix).

Three independent routes: a DP over matched column subsets, Ryser's
inclusion-exclusion formula walked in Gray-code order, and plain backtracking
enumeration. All counts are Python ints, so n! never overflows.
"""

from __future__ import annotations

from aslamcheck.errors import CapacityError
from aslamcheck.matching import BipartiteGraph, Edge, Matching

MAX_DP_N = 28
MAX_RYSER_N = 30
MAX_ENUM_N = 10


def _guard(bg: BipartiteGraph, limit: int, method: str) -> None:
    if bg.n > limit:
        raise CapacityError(f"{method} is limited to n <= {limit}, got n={bg.n}")


def _row_masks(bg: BipartiteGraph) -> list[int]:
    return [sum(1 << j for j, x in enumerate(row) if x) for row in bg.present]


def count_subset_dp(bg: BipartiteGraph) -> int:
    """dp[mask] = ways to match rows 0..|mask|-1 onto exactly the columns in mask."""
    _guard(bg, MAX_DP_N, "subset DP")
    n = bg.n
    rows = _row_masks(bg)
    dp = {0: 1}
    for r in range(n):
        nxt: dict[int, int] = {}
        avail = rows[r]
        for mask, ways in dp.items():
            free = avail & ~mask
            while free:
                low = free & -free
                free ^= low
                key = mask | low
                nxt[key] = nxt.get(key, 0) + ways
        dp = nxt
        if not dp:
            return 0
    return dp.get((1 << n) - 1, 0)


def count_ryser(bg: BipartiteGraph) -> int:
    """perm(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij.

    Subsets S are visited in Gray-code order so each step adds or removes a
    single column from the running row sums.
    """
    _guard(bg, MAX_RYSER_N, "Ryser")
    n = bg.n
    a = bg.to_matrix()
    row_sums = [0] * n
    total = 0
    size = 0
    prev_gray = 0
    for step in range(1, 1 << n):
        gray = step ^ (step >> 1)
        flipped = gray ^ prev_gray
        col = flipped.bit_length() - 1
        if gray & flipped:
            size += 1
            for i in range(n):
                row_sums[i] += a[i][col]
        else:
            size -= 1
            for i in range(n):
                row_sums[i] -= a[i][col]
        prev_gray = gray
        prod = 1
        for s in row_sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if size & 1 else prod
    return -total if n & 1 else total


def enumerate_perfect_matchings(bg: BipartiteGraph) -> list[Matching]:
    """All perfect matchings, rows in order and columns ascending (lexicographic)."""
    _guard(bg, MAX_ENUM_N, "enumeration")
    n = bg.n
    out: list[Matching] = []
    chosen: list[int] = []
    used = [False] * n

    def place(r: int) -> None:
        if r == n:
            out.append(Matching(frozenset(Edge(i + 1, c + 1) for i, c in enumerate(chosen)), n))
            return
        for c in range(n):
            if bg.present[r][c] and not used[c]:
                used[c] = True
                chosen.append(c)
                place(r + 1)
                chosen.pop()
                used[c] = False

    place(0)
    return out


METHODS = {
    "dp": count_subset_dp,
    "ryser": count_ryser,
    "enumerate": lambda bg: len(enumerate_perfect_matchings(bg)),
}

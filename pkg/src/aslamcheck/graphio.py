"""Plain-text adjacency matrix files.

Format: a header line holding n, then n lines of n single-space separated 0/1
entries (row i is v_i, column j is w_j). Lines starting with '#' are skipped.
"""

from __future__ import annotations

from pathlib import Path

from aslamcheck.errors import GraphParseError
from aslamcheck.matching import BipartiteGraph


def parse_graph(text: str) -> BipartiteGraph:
    n = None
    rows: list[list[int]] = []
    last = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if raw.startswith("#"):
            continue
        if raw == "" and (n is None or len(rows) == n):
            continue
        last = lineno
        if n is None:
            if not raw.isdigit() or int(raw) < 1:
                raise GraphParseError(lineno, 1, f"expected a positive size header, got {raw!r}")
            n = int(raw)
            continue
        if len(rows) == n:
            raise GraphParseError(lineno, 1, f"extra data after {n} matrix rows")
        row, col = [], 1
        tokens = raw.split(" ")
        for tok in tokens:
            if tok not in ("0", "1"):
                raise GraphParseError(lineno, col, f"expected 0 or 1, got {tok!r}")
            row.append(int(tok))
            col += len(tok) + 1
        if len(row) != n:
            raise GraphParseError(lineno, len(raw) + 1, f"expected {n} entries, got {len(row)}")
        rows.append(row)
    if n is None:
        raise GraphParseError(max(last, 1), 1, "missing size header")
    if len(rows) != n:
        raise GraphParseError(last + 1, 1, f"expected {n} matrix rows, got {len(rows)}")
    return BipartiteGraph.from_matrix(rows)


def format_graph(bg: BipartiteGraph, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(str(bg.n))
    lines += [" ".join(str(x) for x in row) for row in bg.to_matrix()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> BipartiteGraph:
    return parse_graph(Path(path).read_text(encoding="ascii"))


def write_graph(path: str | Path, bg: BipartiteGraph, comments: list[str] | None = None) -> None:
    Path(path).write_bytes(format_graph(bg, comments).encode("ascii"))

"""Plain-text tables for A × Z extents and Z intents, and cell-level diffs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import AGraph
from .mvsets import AValuedSet

__all__ = ["CellDiff", "diff_tables", "extent_table", "intent_table", "render_extent", "render_intent"]


def extent_table(G: AGraph, f: AValuedSet) -> list[list[str]]:
    A = G.algebra
    return [[A.format(v) for v in row] for row in G.as_table(f)]


def intent_table(G: AGraph, u: AValuedSet) -> list[str]:
    return [G.algebra.format(v) for v in u.values]


def _grid(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    fmt = lambda r: (r[0].rjust(widths[0]) + " | " + "  ".join(
        c.ljust(w) for c, w in zip(r[1:], widths[1:]))).rstrip()
    rule = "-" * (widths[0] + 1) + "+" + "-" * (sum(widths[1:]) + 2 * len(widths[1:]) - 1)
    return "\n".join([fmt(header), rule] + [fmt(r) for r in rows])


def render_extent(G: AGraph, f: AValuedSet, title: str | None = None) -> str:
    """Rows are carrier elements ascending, columns follow the node order."""
    A = G.algebra
    rows = [[A.format(b)] + r for b, r in enumerate(extent_table(G, f))]
    body = _grid(["β"] + [str(z) for z in G.nodes], rows)
    return f"{title}\n{body}" if title else body


def render_intent(G: AGraph, u: AValuedSet, title: str | None = None) -> str:
    body = _grid([""] + [str(z) for z in G.nodes], [["z"] + intent_table(G, u)])
    return f"{title}\n{body}" if title else body


@dataclass(frozen=True)
class CellDiff:
    beta: str
    node: str
    expected: str
    actual: str

    def __str__(self) -> str:
        return f"(β={self.beta}, {self.node}): expected {self.expected}, got {self.actual}"


def diff_tables(G: AGraph, expected: AValuedSet, actual: AValuedSet) -> list[CellDiff]:
    A = G.algebra
    e, a = G.as_table(expected), G.as_table(actual)
    return [
        CellDiff(A.format(i), str(G.nodes[j]), A.format(e[i, j]), A.format(a[i, j]))
        for i, j in zip(*np.nonzero(e != a))
    ]

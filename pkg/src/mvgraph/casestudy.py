"""The three-database dietary-theories frame on the 11-element Łukasiewicz chain.

Nodes are databases built under the ancient (``z_A``), modern (``z_M``) and
hormonal-response (``z_H``) theories.  ``E(z, z')`` grades how far ``z'``
carries the information relevant to the theory behind ``z``; each theory
``X`` contributes one relation ``R_X`` for its box, and its diamond uses the
converse of that matrix.  ``phi`` and ``psi`` are two diet hypotheses.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

from .frame_io import LoadedFrame, load_frame_document
from .formula import parse
from .model import evaluate
from .mvsets import subseteq
from .render import CellDiff, diff_tables

__all__ = ["CASE_STUDY", "CaseStudyCheck", "CaseStudyReport", "case_study", "case_study_document",
           "reproduce"]

NODES = ["z_A", "z_M", "z_H"]

E = [
    ["1", "0.2", "0.6"],
    ["1", "1", "1"],
    ["1", "0.4", "1"],
]

R_A = E
R_M = [["1"] * 3 for _ in range(3)]
# Stored as drawn; it differs from E at (z_A, z_H), (z_A, z_M) and (z_H, z_M).
R_H = [
    ["1", "0.3", "0.9"],
    ["1", "1", "1"],
    ["1", "0.5", "1"],
]


def _column_table(*columns: list[str]) -> list[list[str]]:
    return [list(row) for row in zip(*columns)]


_UP = ["0.0", "0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9", "1.0"]


def _shifted(start: int) -> list[str]:
    return [_UP[min(10, start + k)] for k in range(11)]


PHI = _column_table(_shifted(5), _shifted(5), _shifted(5))
PSI = _column_table(_shifted(8), _shifted(4), _shifted(8))
BOX_M_PSI = _column_table(_shifted(4), _shifted(4), _shifted(4))

CASE_STUDY = {
    "algebra": {"kind": "lukasiewicz", "size": 11},
    "nodes": NODES,
    "E": E,
    "relations": {
        "A": {"box": R_A},
        "M": {"box": R_M},
        "H": {"box": R_H},
    },
    "valuations": {"phi": PHI, "psi": PSI},
    "close": False,
    "meta": {
        "title": "competing dietary theories",
        "dia": "converse of box for every theory",
    },
}


def case_study_document() -> dict:
    """A fresh copy of the embedded frame document."""
    return copy.deepcopy(CASE_STUDY)


def case_study() -> LoadedFrame:
    return load_frame_document(case_study_document())


@dataclass
class CaseStudyCheck:
    name: str
    kind: str  # "table", "identity" or "inequality"
    ok: bool
    diffs: list[CellDiff] = field(default_factory=list)


@dataclass
class CaseStudyReport:
    checks: list[CaseStudyCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def summary(self) -> str:
        eq = [c for c in self.checks if c.kind in ("table", "identity")]
        ineq = [c for c in self.checks if c.kind == "inequality"]
        return (f"{sum(c.ok for c in eq)} identities/tables verified, "
                f"{sum(c.ok for c in ineq)} inequalities verified")

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"{'ok  ' if c.ok else 'FAIL'} {c.name}")
            lines += [f"       {d}" for d in c.diffs]
        lines.append(self.summary())
        return "\n".join(lines)


def reproduce(loaded: LoadedFrame | None = None) -> CaseStudyReport:
    """Recompute the boxed extensions and compare them with the expected tables."""
    loaded = loaded or case_study()
    G, M = loaded.graph, loaded.model
    ext = lambda s: evaluate(M, parse(s)).extent
    phi, psi = ext("phi"), ext("psi")
    box_m_psi = ext("[]_M psi")
    checks = []

    def equal(name, kind, expected, actual):
        diffs = diff_tables(G, expected, actual)
        checks.append(CaseStudyCheck(name, kind, not diffs, diffs))

    equal("[[ []_M psi ]] = printed table", "table", G.table(BOX_M_PSI), box_m_psi)
    equal("[[ []_H phi ]] = [[ phi ]]", "identity", phi, ext("[]_H phi"))
    equal("[[ []_H psi ]] = [[ psi ]]", "identity", psi, ext("[]_H psi"))
    equal("[[ []_M phi ]] = [[ phi ]]", "identity", phi, ext("[]_M phi"))
    checks.append(CaseStudyCheck("[[ []_M psi ]] <= [[ phi ]]", "inequality", subseteq(box_m_psi, phi)))
    checks.append(CaseStudyCheck("[[ []_M psi ]] <= [[ psi ]]", "inequality", subseteq(box_m_psi, psi)))
    return CaseStudyReport(checks)


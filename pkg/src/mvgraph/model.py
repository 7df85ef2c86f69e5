"""Graph-based models: valuations, compositional evaluation and sequents."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .algebra import TruthValue
from .formula import (
    And,
    Atom,
    Bottom,
    Box,
    Dia,
    Formula,
    Or,
    Top,
    atoms,
    parse,
    subformulas,
)
from .graph import GraphFrame, frame_box, frame_dia
from .mvsets import AValuedSet, Situation, subseteq
from .polarity import (
    BudgetExceeded,
    Concept,
    concept_join,
    concept_meet,
    concept_of_extent,
    concept_of_intent,
    enumerate_concepts,
)

__all__ = [
    "MonotonicityReport",
    "Model",
    "StabilityError",
    "UnknownAtomError",
    "ValidityResult",
    "check_monotone_in_beta",
    "evaluate",
    "make_valuation",
    "refutation_degree",
    "refutes",
    "sequent_true",
    "sequent_valid_on_frame",
    "support_degree",
    "supports",
]


class StabilityError(ValueError):
    def __init__(self, atom: str, point, value: str, closed: str):
        self.atom = atom
        self.point = point
        super().__init__(
            f"valuation of {atom!r} is not stable: at {point} the closure gives "
            f"{closed} but the table has {value}"
        )


class UnknownAtomError(KeyError):
    def __str__(self) -> str:
        return f"atom {self.args[0]!r} has no valuation"


@dataclass
class Model:
    """A frame with a concept-valued valuation of atoms."""

    frame: GraphFrame
    valuation: dict[str, Concept]

    def __post_init__(self):
        for name, c in self.valuation.items():
            if c.polarity is not self.frame.polarity:
                raise ValueError(f"valuation of {name!r} is not a concept of the frame")

    def with_valuation(self, valuation: Mapping[str, Concept]) -> "Model":
        return Model(self.frame, dict(valuation))


def _as_formula(phi) -> Formula:
    return parse(phi) if isinstance(phi, str) else phi


def make_valuation(frame: GraphFrame, tables: Mapping[str, object], mode: str = "strict") -> Model:
    """Turn extent tables over ``A × Z`` into a model.

    Tables may be :class:`AValuedSet` objects or nested rows (one row per
    carrier element, one column per node).  In ``strict`` mode every table
    must already be stable; ``close`` mode replaces it by its closure.
    """
    if mode not in ("strict", "close"):
        raise ValueError(f"mode must be 'strict' or 'close', not {mode!r}")
    G = frame.graph
    P = frame.polarity
    A = frame.algebra
    valuation = {}
    for name, table in tables.items():
        f = table if isinstance(table, AValuedSet) else G.table(table)
        concept = concept_of_extent(P, f)
        if mode == "strict" and concept.extent != f:
            bad = int(np.nonzero(concept.extent.values != f.values)[0][0])
            point = f.index[bad]
            raise StabilityError(
                name,
                (A.format(point.value), point.node),
                A.format(f.values[bad]),
                A.format(concept.extent.values[bad]),
            )
        valuation[name] = concept
    return Model(frame, valuation)


def _evaluate(M: Model, phi: Formula, memo: dict) -> Concept:
    hit = memo.get(phi)
    if hit is not None:
        return hit
    F = M.frame
    P = F.polarity
    if isinstance(phi, Atom):
        try:
            out = M.valuation[phi.name]
        except KeyError:
            raise UnknownAtomError(phi.name) from None
    elif isinstance(phi, Top):
        out = concept_of_extent(P, P.full("objects"))
    elif isinstance(phi, Bottom):
        out = concept_of_intent(P, P.full("attributes"))
    elif isinstance(phi, And):
        out = concept_meet(P, _evaluate(M, phi.left, memo), _evaluate(M, phi.right, memo))
    elif isinstance(phi, Or):
        out = concept_join(P, _evaluate(M, phi.left, memo), _evaluate(M, phi.right, memo))
    elif isinstance(phi, Box):
        out = frame_box(F, phi.label, _evaluate(M, phi.sub, memo))
    elif isinstance(phi, Dia):
        out = frame_dia(F, phi.label, _evaluate(M, phi.sub, memo))
    else:
        raise TypeError(f"not a formula: {phi!r}")
    memo[phi] = out
    return out


def evaluate(M: Model, phi: Formula | str) -> Concept:
    """The concept ``V(φ) = (⟦φ⟧, ⦇φ⦈)``, by structural recursion."""
    return _evaluate(M, _as_formula(phi), {})


def _situation(M: Model, beta, z) -> Situation:
    A = M.frame.algebra
    return Situation(A.index_of(beta), z)


def support_degree(M: Model, beta, z, phi) -> TruthValue:
    """``⟦φ⟧(β, z)``."""
    return evaluate(M, phi).extent(_situation(M, beta, z))


def refutation_degree(M: Model, z, phi) -> TruthValue:
    """``⦇φ⦈(z)``."""
    return evaluate(M, phi).intent(z)


def supports(M: Model, beta, z, alpha, phi) -> bool:
    """``M, (β, z) ⊩^α φ`` iff ``α ≤ ⟦φ⟧(β, z)``."""
    A = M.frame.algebra
    return A.element(alpha) <= support_degree(M, beta, z, phi)


def refutes(M: Model, z, alpha, phi) -> bool:
    """``M, z ≻^α φ`` iff ``α ≤ ⦇φ⦈(z)``."""
    A = M.frame.algebra
    return A.element(alpha) <= refutation_degree(M, z, phi)


@dataclass
class MonotonicityReport:
    violations: list[tuple]  # (node, beta, beta', value, value')

    @property
    def ok(self) -> bool:
        return not self.violations


def check_monotone_in_beta(M: Model, phi, *, extent: AValuedSet | None = None) -> MonotonicityReport:
    """Check ``β ≤ β' ⇒ ⟦φ⟧(β, z) ≤ ⟦φ⟧(β', z)`` for all ``z``.

    Pass ``extent`` to check a table directly instead of evaluating ``φ``.
    """
    G = M.frame.graph
    A = G.algebra
    f = extent if extent is not None else evaluate(M, phi).extent
    tab = G.as_table(f)
    violations = []
    for b, b2 in itertools.product(range(A.size), repeat=2):
        if b == b2 or not A.leq[b, b2]:
            continue
        bad = ~A.leq[tab[b], tab[b2]]
        for j in np.nonzero(bad)[0]:
            violations.append((G.nodes[int(j)], A.format(b), A.format(b2),
                               A.format(tab[b, j]), A.format(tab[b2, j])))
    return MonotonicityReport(violations)


def sequent_true(M: Model, phi, psi) -> bool:
    """``⟦φ⟧ ⊆ ⟦ψ⟧``; the equivalent ``⦇ψ⦈ ⊆ ⦇φ⦈`` is asserted alongside."""
    phi, psi = _as_formula(phi), _as_formula(psi)
    memo: dict = {}
    c, d = _evaluate(M, phi, memo), _evaluate(M, psi, memo)
    by_extent = subseteq(c.extent, d.extent)
    by_intent = subseteq(d.intent, c.intent)
    if by_extent != by_intent:
        raise AssertionError("extent and intent disagree on sequent truth; valuation not stable")
    return by_extent


@dataclass
class ValidityResult:
    valid: bool
    checked: int
    counterexample: dict[str, Concept] | None = field(default=None, repr=False)

    def __bool__(self) -> bool:
        return self.valid


def sequent_valid_on_frame(
    F: GraphFrame, phi, psi, budget: int = 10**6
) -> ValidityResult:
    """Check ``φ ⊢ ψ`` under every concept-valued assignment of its atoms.

    The budget bounds both the concept enumeration (``|A|^|Z|`` candidate
    intents) and the number of assignments (``#concepts ^ #atoms``).
    """
    phi, psi = _as_formula(phi), _as_formula(psi)
    names = atoms(phi, psi)
    concepts = enumerate_concepts(F.polarity, budget) if names else []
    space = len(concepts) ** len(names)
    if space > budget:
        raise BudgetExceeded("frame validity", space, budget)
    # subformulas free of atoms are shared by every assignment
    M0 = Model(F, {})
    ground: dict = {}
    for f in itertools.chain(subformulas(phi), subformulas(psi)):
        if not atoms(f):
            _evaluate(M0, f, ground)
    checked = 0
    for choice in itertools.product(concepts, repeat=len(names)):
        M = Model(F, dict(zip(names, choice)))
        checked += 1
        memo = dict(ground)
        c, d = _evaluate(M, phi, memo), _evaluate(M, psi, memo)
        if not subseteq(c.extent, d.extent):
            return ValidityResult(False, checked, dict(M.valuation))
    return ValidityResult(True, checked)

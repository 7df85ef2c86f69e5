"""First-order conditions corresponding to the four basic modal axioms.

=============  ===============  ==========================================
axiom          sequent          frame condition
=============  ===============  ==========================================
BOX_BOT_BOT    ``□⊥ ⊢ ⊥``       ⋀_z' (R_□(z,z')→β) ≤ ⋀_z' (E(z,z')→β)
TOP_DIA_TOP    ``⊤ ⊢ ◇⊤``       ⋀_(α,z') (R_◇(z,z')→α) ≤ ⋀_(α,z') (E(z',z)→α)
BOX_T          ``□p ⊢ p``       E ⊆ R_□
DIA_T          ``p ⊢ ◇p``       E ⊆ R_■, where R_■(z,z') = R_◇(z',z)
=============  ===============  ==========================================
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .formula import Atom, Bottom, Box, Dia, Formula, Top
from .graph import GraphFrame
from .model import sequent_valid_on_frame
from .mvsets import ARelation, IndexMismatchError
from .polarity import BudgetExceeded

__all__ = [
    "AxiomId",
    "ConditionResult",
    "CorrespondenceReport",
    "NotAChainError",
    "check_condition",
    "check_condition_finite_chain",
    "correspondence_equivalence_test",
    "r_black",
]


class AxiomId(enum.Enum):
    BOX_BOT_BOT = "BoxBotBot"
    TOP_DIA_TOP = "TopDiaTop"
    BOX_T = "BoxT"
    DIA_T = "DiaT"

    @property
    def role(self) -> str:
        return "box" if self in (AxiomId.BOX_BOT_BOT, AxiomId.BOX_T) else "dia"

    def sequent(self, label: str = "") -> tuple[Formula, Formula]:
        p = Atom("p")
        return {
            AxiomId.BOX_BOT_BOT: (Box(label, Bottom()), Bottom()),
            AxiomId.TOP_DIA_TOP: (Top(), Dia(label, Top())),
            AxiomId.BOX_T: (Box(label, p), p),
            AxiomId.DIA_T: (p, Dia(label, p)),
        }[self]


class NotAChainError(ValueError):
    pass


def r_black(rdia: ARelation) -> ARelation:
    """``R_■(z, z') = R_◇(z', z)``."""
    if not rdia.is_square:
        raise IndexMismatchError("R_■ needs a relation on a single set")
    return rdia.converse()


@dataclass
class ConditionResult:
    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


def _relation(F: GraphFrame, label: str, axiom: AxiomId) -> ARelation:
    return F.box_relation(label) if axiom.role == "box" else F.dia_relation(label)


def check_condition(F: GraphFrame, label: str, axiom: AxiomId) -> ConditionResult:
    """Evaluate the frame condition of ``axiom`` literally for one modality."""
    G = F.graph
    A = G.algebra
    R = _relation(F, label, axiom)
    E = G.E.values
    Z = G.nodes
    res = A.residuum
    if axiom is AxiomId.BOX_BOT_BOT:
        for beta in range(A.size):
            for i, z in enumerate(Z):
                lhs = int(A.meet_reduce(res[R.values[i], beta], axis=0))
                rhs = int(A.meet_reduce(res[E[i], beta], axis=0))
                if not A.leq[lhs, rhs]:
                    return ConditionResult(False, (A.format(beta), z, A.format(lhs), A.format(rhs)))
        return ConditionResult(True)
    if axiom is AxiomId.TOP_DIA_TOP:
        alphas = np.arange(A.size)[:, None]
        for i, z in enumerate(Z):
            lhs = int(A.meet_reduce(res[R.values[i][None, :], alphas].reshape(-1), axis=0))
            rhs = int(A.meet_reduce(res[E[:, i][None, :], alphas].reshape(-1), axis=0))
            if not A.leq[lhs, rhs]:
                return ConditionResult(False, (z, A.format(lhs), A.format(rhs)))
        return ConditionResult(True)
    target = R.values if axiom is AxiomId.BOX_T else r_black(R).values
    bad = np.argwhere(~A.leq[E, target])
    if bad.size:
        i, j = (int(x) for x in bad[0])
        return ConditionResult(False, (Z[i], Z[j], A.format(E[i, j]), A.format(target[i, j])))
    return ConditionResult(True)


def check_condition_finite_chain(F: GraphFrame, label: str, axiom: AxiomId) -> ConditionResult:
    """Chain-only criterion: an attaining successor exists for every point.

    On a finite chain with reflexive ``E`` the right-hand meets collapse (to
    ``β`` for ``□⊥ ⊢ ⊥`` and to ``0`` for ``⊤ ⊢ ◇⊤``), and the left-hand
    minimum is attained, so the condition asks for a witness ``z'``.
    """
    A = F.algebra
    if not A.is_chain:
        raise NotAChainError(f"{A.name} is not a chain")
    if axiom not in (AxiomId.BOX_BOT_BOT, AxiomId.TOP_DIA_TOP):
        raise ValueError("the chain criterion covers BoxBotBot and TopDiaTop only")
    R = _relation(F, label, axiom).values
    res, leq = A.residuum, A.leq
    for i, z in enumerate(F.graph.nodes):
        if axiom is AxiomId.BOX_BOT_BOT:
            for beta in range(A.size):
                if not any(leq[res[R[i, j], beta], beta] for j in range(R.shape[1])):
                    return ConditionResult(False, (A.format(beta), z))
        else:
            if not any(res[R[i, j], A.bottom] == A.bottom for j in range(R.shape[1])):
                return ConditionResult(False, (z,))
    return ConditionResult(True)


@dataclass
class CorrespondenceReport:
    axiom: AxiomId
    label: str
    status: str  # "agree", "disagree" or "untested"
    valid: bool | None = None
    condition: bool | None = None
    detail: str = ""

    @property
    def agree(self) -> bool:
        return self.status == "agree"


def correspondence_equivalence_test(
    F: GraphFrame, label: str, axiom: AxiomId, budget: int = 10**6
) -> CorrespondenceReport:
    """Compare frame validity of the axiom with its frame condition.

    A budget overrun yields status ``"untested"``; it never counts as agreement.
    """
    lhs, rhs = axiom.sequent(F.resolve(label))
    cond = check_condition(F, label, axiom)
    try:
        valid = sequent_valid_on_frame(F, lhs, rhs, budget)
    except BudgetExceeded as exc:
        return CorrespondenceReport(axiom, label, "untested", None, cond.holds, str(exc))
    status = "agree" if valid.valid == cond.holds else "disagree"
    return CorrespondenceReport(axiom, label, status, valid.valid, cond.holds)

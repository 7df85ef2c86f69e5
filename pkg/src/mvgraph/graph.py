"""Reflexive A-graphs, their induced polarity, and graph-based frames.

For a graph ``(Z, E)`` the induced polarity has objects ``A × Z`` (pairs
``(β, z)``), attributes ``Z`` and incidence ``I_E((β, z), z') = E(z, z') → β``.
Its ``down``/``up`` maps are the ``[0]``/``[1]`` operations on the graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .algebra import TruthAlgebra
from .mvsets import (
    ARelation,
    AValuedSet,
    Index,
    IndexMismatchError,
    Situation,
    delta,
    is_reflexive,
    lift0,
    lift1,
    product_index,
    singleton,
)
from .polarity import (
    APolarity,
    BudgetExceeded,
    CompatibilityError,
    CompatibilityFailure,
    CompatibilityReport,
    Concept,
    EnrichedAPolarity,
)

__all__ = [
    "AGraph",
    "EquivalenceGroup",
    "EquivalenceReport",
    "GraphError",
    "GraphFrame",
    "RelationPair",
    "UnknownLabelError",
    "check_compat_equivalences",
    "check_E_compatibility",
    "check_E_reflexive",
    "enriched_context",
    "frame_box",
    "frame_dia",
    "induced_polarity",
    "lift_IR",
    "lift_JR",
    "rbox0",
    "rbox1",
    "rdia0",
    "rdia1",
]


class GraphError(ValueError):
    pass


class UnknownLabelError(KeyError):
    def __str__(self) -> str:
        return f"unknown modality label {self.args[0]!r}"


class AGraph:
    """A reflexive A-graph ``(Z, E)``."""

    def __init__(self, E: ARelation):
        if not E.is_square:
            raise GraphError("E must be a relation on a single node set")
        if len(E.domain) == 0:
            raise GraphError("a graph needs at least one node")
        if not is_reflexive(E):
            A = E.algebra
            for i, z in enumerate(E.domain):
                if E.values[i, i] != A.top:
                    raise GraphError(
                        f"E is not reflexive: E({z}, {z}) = {A.format(E.values[i, i])}"
                    )
        self.E = E
        self.algebra: TruthAlgebra = E.algebra
        self.nodes: Index = E.domain
        self.situations: Index = product_index(self.algebra, self.nodes)
        self.polarity = APolarity(lift_IR_values(self, E))

    @classmethod
    def discrete(cls, algebra: TruthAlgebra, nodes: Iterable) -> "AGraph":
        """The graph with ``E = Δ_Z`` (classical Kripke semantics)."""
        return cls(delta(algebra, Index(nodes)))

    def __repr__(self) -> str:
        return f"AGraph(nodes={list(self.nodes)!r}, algebra={self.algebra.name})"

    # [0] / [1] abbreviations
    def down(self, u: AValuedSet) -> AValuedSet:
        return self.polarity.down(u)

    def up(self, f: AValuedSet) -> AValuedSet:
        return self.polarity.up(f)

    def relation(self, rows) -> ARelation:
        """Build a ``Z × Z`` relation from nested rows in node order."""
        return ARelation(self.algebra, self.nodes, self.nodes, rows)

    def table(self, rows) -> AValuedSet:
        """Build an ``A × Z`` set from a table with one row per carrier element."""
        arr = np.array(
            [[self.algebra.index_of(v) for v in row] for row in rows], dtype=np.int64
        )
        if arr.shape != (self.algebra.size, len(self.nodes)):
            raise IndexMismatchError(
                f"table must be {self.algebra.size}x{len(self.nodes)}, got {arr.shape}"
            )
        return AValuedSet(self.algebra, self.situations, arr.reshape(-1))

    def as_table(self, f: AValuedSet) -> np.ndarray:
        """Reshape an ``A × Z`` set to rows = carrier, columns = nodes."""
        if f.index != self.situations:
            raise IndexMismatchError("not a set over A x Z")
        return f.values.reshape(self.algebra.size, len(self.nodes))


def induced_polarity(G: AGraph) -> APolarity:
    return G.polarity


def _check_square(G: AGraph, R: ARelation) -> None:
    if R.domain != G.nodes or R.codomain != G.nodes or R.algebra is not G.algebra:
        raise IndexMismatchError("relation must be Z x Z over the graph's algebra")


def _lifted(G: AGraph, R: ARelation) -> np.ndarray:
    # out[beta, z, z'] = R(z, z') -> beta
    A = G.algebra
    beta = np.arange(A.size)[:, None, None]
    return A.residuum[R.values[None, :, :], beta]


def lift_IR_values(G: AGraph, R: ARelation) -> ARelation:
    vals = _lifted(G, R).reshape(G.algebra.size * len(G.nodes), len(G.nodes))
    return ARelation(G.algebra, G.situations, G.nodes, vals)


def lift_IR(G: AGraph, R: ARelation) -> ARelation:
    """``I_R((β, z), z') = R(z, z') → β`` on ``Z_A × Z_X``."""
    _check_square(G, R)
    return lift_IR_values(G, R)


def lift_JR(G: AGraph, R: ARelation) -> ARelation:
    """``J_R(z, (β, z')) = R(z, z') → β`` on ``Z_X × Z_A``."""
    _check_square(G, R)
    lifted = _lifted(G, R)  # [beta, z, z']
    vals = np.transpose(lifted, (1, 0, 2)).reshape(len(G.nodes), -1)
    return ARelation(G.algebra, G.nodes, G.situations, vals)


def rbox0(G: AGraph, R: ARelation, u: AValuedSet) -> AValuedSet:
    """``(β, z) ↦ ⋀_{z'} u(z') → (R(z, z') → β)``."""
    return lift0(lift_IR(G, R), u)


def rbox1(G: AGraph, R: ARelation, f: AValuedSet) -> AValuedSet:
    """``z ↦ ⋀_{(β, z')} f(β, z') → (R(z', z) → β)``."""
    return lift1(lift_IR(G, R), f)


def rdia0(G: AGraph, R: ARelation, f: AValuedSet) -> AValuedSet:
    """``z ↦ ⋀_{(β, z')} f(β, z') → (R(z, z') → β)``."""
    return lift0(lift_JR(G, R), f)


def rdia1(G: AGraph, R: ARelation, u: AValuedSet) -> AValuedSet:
    """``(β, z) ↦ ⋀_{z'} u(z') → (R(z', z) → β)``."""
    return lift1(lift_JR(G, R), u)


# ---------------------------------------------------------------------------
# E-compatibility

def _unstable_point(G: AGraph, s: AValuedSet):
    closed = G.polarity.close(s)
    bad = np.nonzero(~G.algebra.leq[closed.values, s.values])[0]
    return s.index[int(bad[0])] if bad.size else None


def _format_point(G: AGraph, p):
    if isinstance(p, Situation):
        return (G.algebra.format(p.value), p.node)
    return p


def _families(G: AGraph, rbox: ARelation | None, rdia: ARelation | None):
    """Yield ``(family, lift, singleton index)`` for the four inclusion families."""
    if rbox is not None:
        I_R = lift_IR(G, rbox)
        yield "box[0]", lambda s: lift0(I_R, s), G.nodes
        yield "box[1]", lambda s: lift1(I_R, s), G.situations
    if rdia is not None:
        J_R = lift_JR(G, rdia)
        yield "dia[1]", lambda s: lift1(J_R, s), G.nodes
        yield "dia[0]", lambda s: lift0(J_R, s), G.situations


def check_E_compatibility(
    G: AGraph, rbox: ARelation | None, rdia: ARelation | None
) -> CompatibilityReport:
    """Evaluate the four E-compatibility inclusions exhaustively.

    For each family the image of every singleton ``{β / z}`` (over ``Z``) or
    ``{β / (α, z)}`` (over ``A × Z``) must contain its own Galois closure.
    """
    A = G.algebra
    for R in (rbox, rdia):
        if R is not None:
            _check_square(G, R)
    failures: list[CompatibilityFailure] = []
    checked = 0
    for family, lift, idx in _families(G, rbox, rdia):
        for beta in range(A.size):
            for e in idx:
                checked += 1
                point = _unstable_point(G, lift(singleton(beta, e, idx, A)))
                if point is not None:
                    failures.append(CompatibilityFailure(
                        family, A.format(beta), _format_point(G, e), _format_point(G, point)))
    return CompatibilityReport(failures, checked)


def enriched_context(G: AGraph, rbox: ARelation, rdia: ARelation, *, unchecked: bool = False) -> EnrichedAPolarity:
    """``(P_X, I_{R_□}, J_{R_◇})``; its complex algebra coincides with the frame's."""
    return EnrichedAPolarity(G.polarity, lift_IR(G, rbox), lift_JR(G, rdia), unchecked=unchecked)


# ---------------------------------------------------------------------------
# frames

@dataclass(frozen=True)
class RelationPair:
    """The box and diamond relations of one modality label; either may be absent."""

    box: ARelation | None = None
    dia: ARelation | None = None

    def __post_init__(self):
        if self.box is None and self.dia is None:
            raise GraphError("a modality needs a box or a diamond relation")


class GraphFrame:
    """A reflexive A-graph with labeled, E-compatible relation pairs.

    ``relations`` maps labels to :class:`RelationPair` (or to ``(box, dia)``
    tuples).  Compatibility is checked eagerly; ``unchecked=True`` skips the
    check so counterexample frames can be built.
    """

    def __init__(self, graph: AGraph, relations: Mapping[str, RelationPair | tuple] | None = None,
                 *, unchecked: bool = False):
        self.graph = graph
        pairs: dict[str, RelationPair] = {}
        for label, pair in (relations or {}).items():
            if not isinstance(pair, RelationPair):
                pair = RelationPair(*pair)
            for R in (pair.box, pair.dia):
                if R is not None:
                    _check_square(graph, R)
            pairs[str(label)] = pair
        self.relations = pairs
        self.unchecked = unchecked
        if not unchecked:
            for label, pair in pairs.items():
                report = check_E_compatibility(graph, pair.box, pair.dia)
                if not report.ok:
                    raise CompatibilityError(report, f"relations of modality {label!r}")

    @property
    def algebra(self) -> TruthAlgebra:
        return self.graph.algebra

    @property
    def polarity(self) -> APolarity:
        return self.graph.polarity

    @property
    def labels(self) -> list[str]:
        return list(self.relations)

    def resolve(self, label: str) -> str:
        """Map the empty label to the sole modality when there is exactly one."""
        if label in self.relations:
            return label
        if label == "" and len(self.relations) == 1:
            return next(iter(self.relations))
        raise UnknownLabelError(label)

    def pair(self, label: str) -> RelationPair:
        return self.relations[self.resolve(label)]

    def box_relation(self, label: str) -> ARelation:
        R = self.pair(label).box
        if R is None:
            raise UnknownLabelError(f"{label} (no box relation)")
        return R

    def dia_relation(self, label: str) -> ARelation:
        R = self.pair(label).dia
        if R is None:
            raise UnknownLabelError(f"{label} (no diamond relation)")
        return R

    def __repr__(self) -> str:
        return f"GraphFrame({self.graph!r}, labels={self.labels!r})"


def frame_box(F: GraphFrame, label: str, c: Concept) -> Concept:
    """``[R_□]c = (R_□^[0][intent], (R_□^[0][intent])^[1])``."""
    extent = rbox0(F.graph, F.box_relation(label), c.intent)
    return Concept(F.polarity, extent, F.graph.up(extent), checked=False)


def frame_dia(F: GraphFrame, label: str, c: Concept) -> Concept:
    """``⟨R_◇⟩c = ((R_◇^[0][extent])^[0], R_◇^[0][extent])``."""
    intent = rdia0(F.graph, F.dia_relation(label), c.extent)
    return Concept(F.polarity, F.graph.down(intent), intent, checked=False)


def check_E_reflexive(F: GraphFrame, label: str) -> bool:
    """``E ⊆ R_□`` pointwise for the box relation of ``label``."""
    return F.graph.E <= F.box_relation(label)


# ---------------------------------------------------------------------------
# equivalent forms of compatibility

@dataclass
class EquivalenceGroup:
    name: str
    singleton: bool
    all_sets: bool
    inclusion: bool
    witness: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.singleton == self.all_sets == self.inclusion


@dataclass
class EquivalenceReport:
    groups: list[EquivalenceGroup]
    exhaustive: bool
    u_checked: int
    f_checked: int

    @property
    def agree(self) -> bool:
        return all(g.agree for g in self.groups)


def _all_sets(A: TruthAlgebra, index: Index, budget: int, samples: int | None, rng):
    space = A.size ** len(index)
    if space <= budget:
        for vals in itertools.product(range(A.size), repeat=len(index)):
            yield AValuedSet(A, index, np.array(vals, dtype=np.int64))
        return
    if not samples:
        raise BudgetExceeded("compatibility equivalence", space, budget)
    rng = np.random.default_rng(rng)
    # singletons and constants always included, then random sets
    for e in index:
        for a in range(A.size):
            yield singleton(a, e, index, A)
    for _ in range(samples):
        yield AValuedSet(A, index, rng.integers(0, A.size, len(index)))


def check_compat_equivalences(
    G: AGraph,
    rbox: ARelation,
    rdia: ARelation,
    budget: int = 10**5,
    samples: int | None = None,
    rng=None,
) -> EquivalenceReport:
    """Evaluate the three equivalent forms of each compatibility condition.

    For each of the four groups: (i) stability of singleton images, (ii)
    stability of the images of every set, (iii) ``L[s] ⊆ L[s^cl]`` for the
    other lifting ``L`` and every set ``s`` on the opposite side.  Sets range over all of ``A^Z`` and ``A^{A×Z}``
    when within ``budget``; otherwise ``samples`` random sets are drawn (plus
    all singletons), and without ``samples`` :class:`BudgetExceeded` is raised.
    """
    A = G.algebra
    _check_square(G, rbox)
    _check_square(G, rdia)
    P = G.polarity
    I_R, J_R = lift_IR(G, rbox), lift_JR(G, rdia)
    us = list(_all_sets(A, G.nodes, budget, samples, rng))
    fs = list(_all_sets(A, G.situations, budget, samples, rng))
    exhaustive = A.size ** len(G.situations) <= budget

    def stable_all(lift, sets):
        for s in sets:
            if not P.is_stable(lift(s)):
                return False, s
        return True, None

    def inclusion_all(lift, sets):
        # lifts are antitone, so lift(close(s)) <= lift(s) always; the content
        # of form (iii) is the reverse inclusion
        for s in sets:
            if not lift(s) <= lift(P.close(s)):
                return False, s
        return True, None

    def singletons_ok(family):
        report = check_E_compatibility(
            G, rbox if family.startswith("box") else None, rdia if family.startswith("dia") else None
        )
        bad = [f for f in report.failures if f.family == family]
        return not bad, (bad[0] if bad else None)

    groups = []
    spec = [
        ("box[0]", lambda s: lift0(I_R, s), us, lambda s: lift1(I_R, s), fs),
        ("box[1]", lambda s: lift1(I_R, s), fs, lambda s: lift0(I_R, s), us),
        ("dia[0]", lambda s: lift0(J_R, s), fs, lambda s: lift1(J_R, s), us),
        ("dia[1]", lambda s: lift1(J_R, s), us, lambda s: lift0(J_R, s), fs),
    ]
    for family, lift, sets, other_lift, other_sets in spec:
        s_ok, s_w = singletons_ok(family)
        a_ok, a_w = stable_all(lift, sets)
        i_ok, i_w = inclusion_all(other_lift, other_sets)
        groups.append(EquivalenceGroup(
            family, s_ok, a_ok, i_ok,
            {k: v for k, v in (("singleton", s_w), ("all", a_w), ("inclusion", i_w)) if v is not None},
        ))
    return EquivalenceReport(groups, exhaustive, len(us), len(fs))

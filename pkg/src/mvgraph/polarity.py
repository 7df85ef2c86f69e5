"""Formal A-contexts, their Galois connection, concepts and complex algebras."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraMismatchError, TruthAlgebra
from .mvsets import (
    ARelation,
    AValuedSet,
    Index,
    IndexMismatchError,
    lift0,
    lift0_many,
    lift1,
    lift1_many,
    singleton,
)

__all__ = [
    "APolarity",
    "BudgetExceeded",
    "CompatibilityError",
    "CompatibilityFailure",
    "CompatibilityReport",
    "Concept",
    "ConceptError",
    "EnrichedAPolarity",
    "box_op",
    "check_I_compatibility",
    "close",
    "concept_join",
    "concept_leq",
    "concept_meet",
    "concept_of_extent",
    "concept_of_intent",
    "dia_op",
    "down",
    "enumerate_concepts",
    "is_stable",
    "up",
]

DEFAULT_BUDGET = 10**6
_CHUNK = 4096


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, size: int, budget: int):
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: search space of {size} exceeds budget {budget}")


class ConceptError(ValueError):
    pass


class APolarity:
    """A formal A-context ``(A, X, I)`` with ``I : A × X → 𝐀``."""

    def __init__(self, incidence: ARelation):
        self.incidence = incidence
        self.algebra: TruthAlgebra = incidence.algebra
        self.objects: Index = incidence.domain
        self.attributes: Index = incidence.codomain
        self._concepts: list[Concept] | None = None

    def __repr__(self) -> str:
        return f"APolarity(|A|={len(self.objects)}, |X|={len(self.attributes)})"

    def up(self, f: AValuedSet) -> AValuedSet:
        return lift1(self.incidence, f)

    def down(self, u: AValuedSet) -> AValuedSet:
        return lift0(self.incidence, u)

    def side_of(self, s: AValuedSet) -> str:
        if s.algebra is not self.algebra:
            raise AlgebraMismatchError("set and polarity over different algebras")
        if s.index == self.objects:
            return "objects"
        if s.index == self.attributes:
            return "attributes"
        raise IndexMismatchError("set lives on neither side of the polarity")

    def close(self, s: AValuedSet) -> AValuedSet:
        """``f^{↑↓}`` for object-side sets, ``u^{↓↑}`` for attribute-side sets."""
        if self.side_of(s) == "objects":
            return self.down(self.up(s))
        return self.up(self.down(s))

    def is_stable(self, s: AValuedSet) -> bool:
        return self.close(s) == s

    def full(self, side: str, value=None) -> AValuedSet:
        idx = self.objects if side == "objects" else self.attributes
        return AValuedSet.constant(self.algebra, idx, self.algebra.top if value is None else value)

    def top(self) -> "Concept":
        return concept_of_extent(self, self.full("objects"))

    def bottom(self) -> "Concept":
        return concept_of_intent(self, self.full("attributes"))


@dataclass(frozen=True, eq=False)
class Concept:
    """A Galois-stable pair ``(extent, intent)``; equality compares intents."""

    polarity: APolarity = field(repr=False)
    extent: AValuedSet
    intent: AValuedSet
    checked: bool = field(default=True, repr=False)

    def __post_init__(self):
        P = self.polarity
        if self.extent.index != P.objects or self.intent.index != P.attributes:
            raise IndexMismatchError("concept components do not match the polarity")
        if self.checked:
            if P.up(self.extent) != self.intent or P.down(self.intent) != self.extent:
                raise ConceptError("extent and intent are not Galois-stable partners")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Concept):
            return NotImplemented
        return self.polarity is other.polarity and self.intent == other.intent

    def __hash__(self) -> int:
        return hash(self.intent.key())

    def __le__(self, other: "Concept") -> bool:
        return concept_leq(self, other)


def up(P: APolarity, f: AValuedSet) -> AValuedSet:
    return P.up(f)


def down(P: APolarity, u: AValuedSet) -> AValuedSet:
    return P.down(u)


def close(P: APolarity, s: AValuedSet) -> AValuedSet:
    return P.close(s)


def is_stable(P: APolarity, s: AValuedSet) -> bool:
    return P.is_stable(s)


def concept_of_intent(P: APolarity, u: AValuedSet) -> Concept:
    extent = P.down(u)
    return Concept(P, extent, P.up(extent), checked=False)


def concept_of_extent(P: APolarity, f: AValuedSet) -> Concept:
    intent = P.up(f)
    return Concept(P, P.down(intent), intent, checked=False)


def _same_polarity(c: Concept, d: Concept) -> APolarity:
    if c.polarity is not d.polarity:
        raise ConceptError("concepts of different polarities")
    return c.polarity


def concept_leq(c: Concept, d: Concept) -> bool:
    _same_polarity(c, d)
    return c.extent <= d.extent


def concept_meet(P: APolarity, c: Concept, d: Concept) -> Concept:
    if _same_polarity(c, d) is not P:
        raise ConceptError("concepts do not belong to this polarity")
    return concept_of_extent(P, c.extent & d.extent)


def concept_join(P: APolarity, c: Concept, d: Concept) -> Concept:
    if _same_polarity(c, d) is not P:
        raise ConceptError("concepts do not belong to this polarity")
    return concept_of_intent(P, c.intent & d.intent)


def enumerate_concepts(P: APolarity, limit: int = DEFAULT_BUDGET) -> list[Concept]:
    """All formal A-concepts of ``P``, by brute force over attribute-side sets.

    Every intent is stable, so keeping the stable candidates is complete.
    The result is sorted along a linear extension of the concept order
    (bottom first), with ties broken by intent.
    """
    A = P.algebra
    n, m = A.size, len(P.attributes)
    space = n**m
    if space > limit:
        raise BudgetExceeded("concept enumeration", space, limit)
    if P._concepts is not None:
        return list(P._concepts)
    I = P.incidence
    stable: list[np.ndarray] = []
    candidates = itertools.product(range(n), repeat=m)
    while True:
        block = np.array(list(itertools.islice(candidates, _CHUNK)), dtype=np.int64)
        if block.size == 0:
            break
        block = block.reshape(-1, m)
        extents = lift0_many(I, block)
        back = lift1_many(I, extents)
        keep = (back == block).all(axis=1)
        stable.extend(block[keep])
    concepts = [
        Concept(P, P.down(u := AValuedSet(A, P.attributes, row)), u, checked=False)
        for row in stable
    ]
    concepts.sort(
        key=lambda c: (int(A.height[c.extent.values].sum()), tuple(-x for x in c.intent.values))
    )
    P._concepts = concepts
    return list(concepts)


# ---------------------------------------------------------------------------
# enriched contexts

@dataclass(frozen=True)
class CompatibilityFailure:
    family: str
    alpha: str
    element: object
    point: object  # where the closure exceeds the set

    def __str__(self) -> str:
        return f"{self.family}[{{{self.alpha}/{self.element}}}] unstable at {self.point}"


@dataclass
class CompatibilityReport:
    failures: list[CompatibilityFailure]
    checked: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"compatible ({self.checked} singleton images stable)"
        head = f"{len(self.failures)} of {self.checked} singleton images unstable"
        return "\n".join([head] + [f"  {f}" for f in self.failures])


class CompatibilityError(ValueError):
    def __init__(self, report: CompatibilityReport, what: str = "relations"):
        self.report = report
        super().__init__(f"{what} are not compatible: {report.failures[0]}")


def _first_violation(P: APolarity, s: AValuedSet):
    closed = P.close(s)
    bad = np.nonzero(~P.algebra.leq[closed.values, s.values])[0]
    return s.index[int(bad[0])] if bad.size else None


def _singleton_stability(
    P: APolarity, family: str, lift, relation: ARelation, carrier_index: Index
) -> tuple[list[CompatibilityFailure], int]:
    A = P.algebra
    failures = []
    count = 0
    for alpha in range(A.size):
        for e in carrier_index:
            image = lift(relation, singleton(alpha, e, carrier_index, A))
            count += 1
            point = _first_violation(P, image)
            if point is not None:
                failures.append(CompatibilityFailure(family, A.format(alpha), e, point))
    return failures, count


def check_I_compatibility(P: APolarity, rbox: ARelation | None, rdia: ARelation | None) -> CompatibilityReport:
    """Stability of every lifted singleton of ``rbox`` (A × X) and ``rdia`` (X × A)."""
    failures: list[CompatibilityFailure] = []
    checked = 0
    if rbox is not None:
        if rbox.domain != P.objects or rbox.codomain != P.attributes:
            raise IndexMismatchError("box relation must be A x X")
        for family, lift, idx in (
            ("Rbox(0)", lift0, P.attributes),
            ("Rbox(1)", lift1, P.objects),
        ):
            fs, k = _singleton_stability(P, family, lift, rbox, idx)
            failures += fs
            checked += k
    if rdia is not None:
        if rdia.domain != P.attributes or rdia.codomain != P.objects:
            raise IndexMismatchError("diamond relation must be X x A")
        for family, lift, idx in (
            ("Rdia(0)", lift0, P.objects),
            ("Rdia(1)", lift1, P.attributes),
        ):
            fs, k = _singleton_stability(P, family, lift, rdia, idx)
            failures += fs
            checked += k
    return CompatibilityReport(failures, checked)


class EnrichedAPolarity:
    """``(P, R_□, R_◇)`` with I-compatible relations.

    Construction runs :func:`check_I_compatibility` and raises
    :class:`CompatibilityError` on failure unless ``unchecked=True``.
    """

    def __init__(self, base: APolarity, rbox: ARelation, rdia: ARelation, *, unchecked: bool = False):
        self.base = base
        self.rbox = rbox
        self.rdia = rdia
        if not unchecked:
            report = check_I_compatibility(base, rbox, rdia)
            if not report.ok:
                raise CompatibilityError(report)

    def compatibility(self) -> CompatibilityReport:
        return check_I_compatibility(self.base, self.rbox, self.rdia)


def box_op(EP: EnrichedAPolarity, c: Concept) -> Concept:
    """``[R_□]c = (R_□^(0)[intent], (R_□^(0)[intent])^↑)``."""
    extent = lift0(EP.rbox, c.intent)
    return Concept(EP.base, extent, EP.base.up(extent), checked=False)


def dia_op(EP: EnrichedAPolarity, c: Concept) -> Concept:
    """``⟨R_◇⟩c = ((R_◇^(0)[extent])^↓, R_◇^(0)[extent])``."""
    intent = lift0(EP.rdia, c.extent)
    return Concept(EP.base, EP.base.down(intent), intent, checked=False)

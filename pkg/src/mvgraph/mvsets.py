"""A-valued subsets and relations over finite ordered index sets."""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .algebra import AlgebraMismatchError, TruthAlgebra, TruthValue

__all__ = [
    "ARelation",
    "AValuedSet",
    "Index",
    "IndexMismatchError",
    "Situation",
    "delta",
    "is_reflexive",
    "lift0",
    "lift1",
    "product_index",
    "singleton",
    "subseteq",
    "subsethood",
]


class IndexMismatchError(ValueError):
    pass


class Situation(NamedTuple):
    """A point ``(β, z)`` of ``A × Z``; ``value`` is a carrier position."""

    value: int
    node: Hashable

    def __str__(self) -> str:
        return f"({self.value}, {self.node})"


class Index:
    """A finite ordered set of hashable labels with O(1) position lookup."""

    __slots__ = ("labels", "_pos", "_hash")

    def __init__(self, labels: Iterable[Hashable]):
        self.labels = tuple(labels)
        self._pos = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._pos) != len(self.labels):
            raise ValueError("index labels must be distinct")
        self._hash = hash(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.labels)

    def __contains__(self, item) -> bool:
        return item in self._pos

    def __getitem__(self, i):
        return self.labels[i]

    def position(self, label) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise IndexMismatchError(f"{label!r} is not in the index set") from None

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Index):
            return NotImplemented
        return self._hash == other._hash and self.labels == other.labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Index({list(self.labels)!r})"


def product_index(algebra: TruthAlgebra, nodes: Index) -> Index:
    """``A × Z`` in lexicographic order: carrier position first, then node."""
    return Index(Situation(i, z) for i in range(algebra.size) for z in nodes)


def _as_index(index) -> Index:
    return index if isinstance(index, Index) else Index(index)


class AValuedSet:
    """A total map ``W → A`` stored as an integer array of carrier positions."""

    __slots__ = ("algebra", "index", "values")

    def __init__(self, algebra: TruthAlgebra, index, values):
        self.algebra = algebra
        self.index = _as_index(index)
        vals = np.array(
            [algebra.index_of(v) for v in values] if not isinstance(values, np.ndarray) else values,
            dtype=np.int64,
        ).reshape(-1)
        if vals.shape != (len(self.index),):
            raise IndexMismatchError(
                f"expected {len(self.index)} values, got {vals.shape[0]}"
            )
        if vals.size and (vals.min() < 0 or vals.max() >= algebra.size):
            raise ValueError("values outside the carrier")
        vals.setflags(write=False)
        self.values = vals

    @classmethod
    def constant(cls, algebra: TruthAlgebra, index, value) -> "AValuedSet":
        index = _as_index(index)
        return cls(algebra, index, np.full(len(index), algebra.index_of(value), dtype=np.int64))

    def __call__(self, w) -> TruthValue:
        return TruthValue(self.algebra, int(self.values[self.index.position(w)]))

    def items(self) -> Iterator[tuple[Hashable, TruthValue]]:
        for w, v in zip(self.index, self.values):
            yield w, TruthValue(self.algebra, int(v))

    def __len__(self) -> int:
        return len(self.index)

    def _check(self, other: "AValuedSet") -> None:
        if not isinstance(other, AValuedSet):
            raise TypeError(f"expected AValuedSet, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError("A-valued sets over different algebras")
        if other.index != self.index:
            raise IndexMismatchError("A-valued sets over different index sets")

    def _new(self, values: np.ndarray) -> "AValuedSet":
        return AValuedSet(self.algebra, self.index, np.asarray(values, dtype=np.int64))

    def __and__(self, other: "AValuedSet") -> "AValuedSet":
        self._check(other)
        return self._new(self.algebra.meet[self.values, other.values])

    def __or__(self, other: "AValuedSet") -> "AValuedSet":
        self._check(other)
        return self._new(self.algebra.join[self.values, other.values])

    def __le__(self, other: "AValuedSet") -> bool:
        self._check(other)
        return bool(self.algebra.leq[self.values, other.values].all())

    def __ge__(self, other: "AValuedSet") -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, AValuedSet):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.index == other.index
            and bool(np.array_equal(self.values, other.values))
        )

    def __hash__(self) -> int:
        return hash((self.index, self.values.tobytes()))

    def key(self) -> bytes:
        return self.values.tobytes()

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {self.algebra.format(v)}" for w, v in zip(self.index, self.values))
        return f"AValuedSet({{{body}}})"


def subsethood(f: AValuedSet, g: AValuedSet) -> TruthValue:
    """Graded inclusion ``⋀_w (f(w) → g(w))``."""
    f._check(g)
    A = f.algebra
    return TruthValue(A, int(A.meet_reduce(A.residuum[f.values, g.values], axis=0)))


def subseteq(f: AValuedSet, g: AValuedSet) -> bool:
    """Pointwise order; equivalent to ``subsethood(f, g)`` being the top."""
    return f <= g


def singleton(value, w, index, algebra: TruthAlgebra | None = None) -> AValuedSet:
    """``{α / w}``: ``w ↦ α`` and every other point to the bottom."""
    if isinstance(value, TruthValue):
        algebra = value.algebra
    if algebra is None:
        raise TypeError("algebra is required when value is not a TruthValue")
    index = _as_index(index)
    vals = np.full(len(index), algebra.bottom, dtype=np.int64)
    vals[index.position(w)] = algebra.index_of(value)
    return AValuedSet(algebra, index, vals)


class ARelation:
    """A total map ``U × W → A``; rows follow ``domain``, columns ``codomain``."""

    __slots__ = ("algebra", "domain", "codomain", "values")

    def __init__(self, algebra: TruthAlgebra, domain, codomain, values):
        self.algebra = algebra
        self.domain = _as_index(domain)
        self.codomain = _as_index(codomain)
        if isinstance(values, np.ndarray):
            vals = np.array(values, dtype=np.int64)
        else:
            vals = np.array(
                [[algebra.index_of(v) for v in row] for row in values], dtype=np.int64
            )
        shape = (len(self.domain), len(self.codomain))
        if vals.size == 0:
            vals = vals.reshape(shape)
        if vals.shape != shape:
            raise IndexMismatchError(f"relation must have shape {shape}, got {vals.shape}")
        if vals.size and (vals.min() < 0 or vals.max() >= algebra.size):
            raise ValueError("relation values outside the carrier")
        vals.setflags(write=False)
        self.values = vals

    @classmethod
    def constant(cls, algebra: TruthAlgebra, domain, codomain, value) -> "ARelation":
        domain, codomain = _as_index(domain), _as_index(codomain)
        return cls(
            algebra, domain, codomain,
            np.full((len(domain), len(codomain)), algebra.index_of(value), dtype=np.int64),
        )

    def __call__(self, a, x) -> TruthValue:
        return TruthValue(
            self.algebra,
            int(self.values[self.domain.position(a), self.codomain.position(x)]),
        )

    @property
    def is_square(self) -> bool:
        return self.domain == self.codomain

    def converse(self) -> "ARelation":
        return ARelation(self.algebra, self.codomain, self.domain, self.values.T.copy())

    def with_entry(self, a, x, value) -> "ARelation":
        vals = self.values.copy()
        vals[self.domain.position(a), self.codomain.position(x)] = self.algebra.index_of(value)
        return ARelation(self.algebra, self.domain, self.codomain, vals)

    def __le__(self, other: "ARelation") -> bool:
        self._check(other)
        return bool(self.algebra.leq[self.values, other.values].all())

    def _check(self, other: "ARelation") -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError("relations over different algebras")
        if other.domain != self.domain or other.codomain != self.codomain:
            raise IndexMismatchError("relations over different index sets")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ARelation):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.domain == other.domain
            and self.codomain == other.codomain
            and bool(np.array_equal(self.values, other.values))
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self.values.tobytes()))

    def rows(self) -> list[list[str]]:
        return [[self.algebra.format(v) for v in row] for row in self.values]

    def __repr__(self) -> str:
        return f"ARelation({self.rows()!r})"


def delta(algebra: TruthAlgebra, nodes) -> ARelation:
    """The crisp identity relation ``Δ_Z``."""
    nodes = _as_index(nodes)
    vals = np.full((len(nodes), len(nodes)), algebra.bottom, dtype=np.int64)
    np.fill_diagonal(vals, algebra.top)
    return ARelation(algebra, nodes, nodes, vals)


def is_reflexive(R: ARelation) -> bool:
    if not R.is_square:
        raise IndexMismatchError("reflexivity needs a relation on a single set")
    return bool((np.diagonal(R.values) == R.algebra.top).all())


def lift0(R: ARelation, u: AValuedSet) -> AValuedSet:
    """``R^(0)[u](a) = ⋀_x (u(x) → R(a, x))``; ``u`` lives on the codomain."""
    if u.algebra is not R.algebra:
        raise AlgebraMismatchError("relation and set over different algebras")
    if u.index != R.codomain:
        raise IndexMismatchError("lift0 expects a set over the relation's codomain")
    A = R.algebra
    vals = A.meet_reduce(A.residuum[u.values[None, :], R.values], axis=1)
    return AValuedSet(A, R.domain, vals)


def lift1(R: ARelation, f: AValuedSet) -> AValuedSet:
    """``R^(1)[f](x) = ⋀_a (f(a) → R(a, x))``; ``f`` lives on the domain."""
    if f.algebra is not R.algebra:
        raise AlgebraMismatchError("relation and set over different algebras")
    if f.index != R.domain:
        raise IndexMismatchError("lift1 expects a set over the relation's domain")
    A = R.algebra
    vals = A.meet_reduce(A.residuum[f.values[:, None], R.values], axis=0)
    return AValuedSet(A, R.codomain, vals)


def lift0_many(R: ARelation, us: np.ndarray) -> np.ndarray:
    """Row-wise :func:`lift0` for a stack of value arrays of shape ``(N, |W|)``."""
    A = R.algebra
    return A.meet_reduce(A.residuum[us[:, None, :], R.values[None, :, :]], axis=2)


def lift1_many(R: ARelation, fs: np.ndarray) -> np.ndarray:
    """Row-wise :func:`lift1` for a stack of value arrays of shape ``(N, |U|)``."""
    A = R.algebra
    return A.meet_reduce(A.residuum[fs[:, :, None], R.values[None, :, :]], axis=1)


def stack(sets: Sequence[AValuedSet]) -> np.ndarray:
    return np.stack([s.values for s in sets]) if sets else np.zeros((0, 0), dtype=np.int64)

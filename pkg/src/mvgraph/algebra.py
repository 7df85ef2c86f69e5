"""Finite residuated lattices of truth values.

Elements are stored as integer positions in the carrier.  For the chain
families the position *k* stands for the rational ``k / (n - 1)``, so every
table in the package is reproduced with exact integer arithmetic.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "AlgebraError",
    "AlgebraMismatchError",
    "AlgebraValidationError",
    "AlgebraReport",
    "LawResult",
    "TruthAlgebra",
    "TruthValue",
    "big_join",
    "big_meet",
    "make_goedel_chain",
    "make_lukasiewicz_chain",
    "make_table_algebra",
    "validate_algebra",
]


class AlgebraError(ValueError):
    """Raised for malformed algebra definitions."""


class AlgebraMismatchError(AlgebraError):
    """Raised when values from different algebras are combined."""


class AlgebraValidationError(AlgebraError):
    def __init__(self, report: "AlgebraReport"):
        self.report = report
        first = report.first_failure
        super().__init__(
            f"algebra {report.algebra_name!r} violates {first.law}: {first.detail}"
        )


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=np.int64)
    out.setflags(write=False)
    return out


class TruthAlgebra:
    """A finite commutative residuated lattice ``(D, 1, 0, ∨, ∧, ⊗, →)``.

    Instances are immutable.  ``labels[i]`` is the display string of the
    i-th carrier element; ``denominator`` is set for the chain families, where
    element ``i`` denotes ``i / denominator``.
    """

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        leq,
        meet,
        join,
        otimes,
        residuum,
        *,
        kind: str = "table",
        denominator: int | None = None,
    ):
        self.name = name
        self.labels = tuple(labels)
        self.size = len(self.labels)
        self.leq = np.array(leq, dtype=bool)
        self.leq.setflags(write=False)
        self.meet = _frozen(meet)
        self.join = _frozen(join)
        self.otimes = _frozen(otimes)
        self.residuum = _frozen(residuum)
        self.kind = kind
        self.denominator = denominator
        n = self.size
        for tab_name in ("leq", "meet", "join", "otimes", "residuum"):
            if getattr(self, tab_name).shape != (n, n):
                raise AlgebraError(f"{tab_name} table must be {n}x{n}")
        for tab_name in ("meet", "join", "otimes", "residuum"):
            tab = getattr(self, tab_name)
            if tab.size and (tab.min() < 0 or tab.max() >= n):
                raise AlgebraError(f"{tab_name} table has entries outside the carrier")
        bottoms = [i for i in range(n) if self.leq[i].all()]
        tops = [i for i in range(n) if self.leq[:, i].all()]
        if len(bottoms) != 1 or len(tops) != 1:
            raise AlgebraError("order has no unique bottom and top")
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.is_chain = bool((self.leq | self.leq.T).all())
        # |{b : b <= a}| is strictly monotone, so it sorts any family of
        # elements (or pointwise sums of them) along a linear extension.
        self.height = _frozen(self.leq.sum(axis=0))
        self._position = {label: i for i, label in enumerate(self.labels)}
        # chains listed ascending reduce with plain min/max
        self._ascending = self.is_chain and bool(
            (self.leq == np.triu(np.ones((n, n), dtype=bool))).all()
        )

    def __repr__(self) -> str:
        return f"TruthAlgebra({self.name!r}, size={self.size})"

    # -- elements -----------------------------------------------------------
    def element(self, key) -> "TruthValue":
        """Return the element named by a label, index, or exact number."""
        return TruthValue(self, self.index_of(key))

    def index_of(self, key) -> int:
        if isinstance(key, TruthValue):
            if key.algebra is not self:
                raise AlgebraMismatchError("truth value belongs to another algebra")
            return key.index
        if isinstance(key, (bool, np.bool_)):
            return self.top if key else self.bottom
        if isinstance(key, (int, np.integer)) and not isinstance(key, bool):
            if 0 <= key < self.size:
                return int(key)
            raise AlgebraError(f"index {key} outside carrier of size {self.size}")
        if isinstance(key, Fraction):
            return self._index_of_fraction(key, key)
        if isinstance(key, str):
            key = key.strip()
            if key in self._position:
                return self._position[key]
            if self.denominator is not None:
                try:
                    frac = Fraction(key)
                except (ValueError, ZeroDivisionError):
                    pass
                else:
                    return self._index_of_fraction(frac, key)
            raise AlgebraError(f"{key!r} is not an element of {self.name}")
        raise AlgebraError(f"cannot interpret {key!r} as an element of {self.name}")

    def _index_of_fraction(self, frac: Fraction, raw) -> int:
        if self.denominator is None:
            raise AlgebraError(f"{self.name} has no numeric elements")
        k = frac * self.denominator
        if k.denominator != 1 or not 0 <= k <= self.denominator:
            raise AlgebraError(f"{raw!r} is not an element of {self.name}")
        return int(k)

    def value_of(self, index: int) -> Fraction:
        if self.denominator is None:
            raise AlgebraError(f"{self.name} has no numeric elements")
        return Fraction(int(index), self.denominator)

    def format(self, index: int) -> str:
        return self.labels[int(index)]

    @property
    def elements(self) -> list["TruthValue"]:
        return [TruthValue(self, i) for i in range(self.size)]

    # -- scalar operations on indices ----------------------------------------
    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def imp(self, a: int, b: int) -> int:
        return int(self.residuum[a, b])

    def meet_reduce(self, arr: np.ndarray, axis: int) -> np.ndarray:
        """Fold the meet along ``axis``; empty axes give the top element."""
        arr = np.asarray(arr)
        if arr.shape[axis] == 0:
            shape = arr.shape[:axis] + arr.shape[axis + 1:]
            return np.full(shape, self.top, dtype=np.int64)
        if self._ascending:
            return arr.min(axis=axis)
        return self._fold(self.meet, arr, axis)

    def join_reduce(self, arr: np.ndarray, axis: int) -> np.ndarray:
        arr = np.asarray(arr)
        if arr.shape[axis] == 0:
            shape = arr.shape[:axis] + arr.shape[axis + 1:]
            return np.full(shape, self.bottom, dtype=np.int64)
        if self._ascending:
            return arr.max(axis=axis)
        return self._fold(self.join, arr, axis)

    @staticmethod
    def _fold(table: np.ndarray, arr: np.ndarray, axis: int) -> np.ndarray:
        moved = np.moveaxis(arr, axis, 0)
        acc = moved[0]
        for layer in moved[1:]:
            acc = table[acc, layer]
        return np.asarray(acc, dtype=np.int64)


@dataclass(frozen=True)
class TruthValue:
    """One element of a :class:`TruthAlgebra`, ordered by the lattice order."""

    algebra: TruthAlgebra = field(repr=False, compare=False)
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.algebra.size:
            raise AlgebraError(f"index {self.index} outside carrier")
        object.__setattr__(self, "index", int(self.index))

    def __eq__(self, other):
        if not isinstance(other, TruthValue):
            return NotImplemented
        return self.algebra is other.algebra and self.index == other.index

    def __hash__(self):
        return hash((id(self.algebra), self.index))

    def _same(self, other: "TruthValue") -> None:
        if not isinstance(other, TruthValue) or other.algebra is not self.algebra:
            raise AlgebraMismatchError("truth values from different algebras")

    def __le__(self, other: "TruthValue") -> bool:
        self._same(other)
        return self.algebra.le(self.index, other.index)

    def __ge__(self, other: "TruthValue") -> bool:
        self._same(other)
        return self.algebra.le(other.index, self.index)

    def __lt__(self, other: "TruthValue") -> bool:
        return self <= other and self != other

    def __gt__(self, other: "TruthValue") -> bool:
        return self >= other and self != other

    def __and__(self, other: "TruthValue") -> "TruthValue":
        self._same(other)
        return TruthValue(self.algebra, self.algebra.meet[self.index, other.index])

    def __or__(self, other: "TruthValue") -> "TruthValue":
        self._same(other)
        return TruthValue(self.algebra, self.algebra.join[self.index, other.index])

    def __mul__(self, other: "TruthValue") -> "TruthValue":
        self._same(other)
        return TruthValue(self.algebra, self.algebra.otimes[self.index, other.index])

    def __rshift__(self, other: "TruthValue") -> "TruthValue":
        """``a >> b`` is the residuum ``a → b``."""
        self._same(other)
        return TruthValue(self.algebra, self.algebra.residuum[self.index, other.index])

    @property
    def fraction(self) -> Fraction:
        return self.algebra.value_of(self.index)

    def __str__(self) -> str:
        return self.algebra.format(self.index)


def _fold_values(algebra: TruthAlgebra, values: Iterable[TruthValue], table, unit):
    acc = unit
    for v in values:
        if not isinstance(v, TruthValue) or v.algebra is not algebra:
            raise AlgebraMismatchError(f"value {v!r} does not belong to {algebra.name}")
        acc = int(table[acc, v.index])
    return TruthValue(algebra, acc)


def big_meet(algebra: TruthAlgebra, values: Iterable[TruthValue]) -> TruthValue:
    return _fold_values(algebra, values, algebra.meet, algebra.top)


def big_join(algebra: TruthAlgebra, values: Iterable[TruthValue]) -> TruthValue:
    return _fold_values(algebra, values, algebra.join, algebra.bottom)


# ---------------------------------------------------------------------------
# constructors

def _chain_labels(n: int) -> list[str]:
    d = n - 1
    if d == 10:
        return [f"{k // 10}.{k % 10}" for k in range(n)]
    return [str(Fraction(k, d)) for k in range(n)]


def _check_size(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise AlgebraError(f"chain size must be an integer >= 2, got {n!r}")
    return int(n)


def make_lukasiewicz_chain(n: int) -> TruthAlgebra:
    """The ``n``-element Łukasiewicz chain on ``{0, 1/(n-1), ..., 1}``.

    Chains are cached, so repeated calls return the same algebra object and
    sets built from separately loaded frames stay comparable.
    """
    return _lukasiewicz(_check_size(n))


@functools.lru_cache(maxsize=None)
def _lukasiewicz(n: int) -> TruthAlgebra:
    d = n - 1
    a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return TruthAlgebra(
        f"Lukasiewicz-{n}",
        _chain_labels(n),
        a <= b,
        np.minimum(a, b),
        np.maximum(a, b),
        np.maximum(0, a + b - d),
        np.minimum(d, d - a + b),
        kind="lukasiewicz",
        denominator=d,
    )


def make_goedel_chain(n: int) -> TruthAlgebra:
    """The ``n``-element Gödel chain: ``⊗ = min`` and ``a → b = 1`` if ``a ≤ b`` else ``b``."""
    return _goedel(_check_size(n))


@functools.lru_cache(maxsize=None)
def _goedel(n: int) -> TruthAlgebra:
    d = n - 1
    a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return TruthAlgebra(
        f"Goedel-{n}",
        _chain_labels(n),
        a <= b,
        np.minimum(a, b),
        np.maximum(a, b),
        np.minimum(a, b),
        np.where(a <= b, d, b),
        kind="goedel",
        denominator=d,
    )


def make_table_algebra(
    carrier: Sequence[str],
    order: Iterable[Sequence[str]],
    otimes: Sequence[Sequence[str]],
    residuum: Sequence[Sequence[str]],
    name: str = "table",
) -> TruthAlgebra:
    """Build an algebra from explicit tables and validate it.

    ``order`` lists pairs ``(a, b)`` meaning ``a ≤ b``; its reflexive and
    transitive closure is taken.  Meets and joins are derived from the order.
    Raises :class:`AlgebraValidationError` when any law fails.
    """
    carrier = [str(c) for c in carrier]
    n = len(carrier)
    if n == 0 or len(set(carrier)) != n:
        raise AlgebraError("carrier must be a nonempty list of distinct labels")
    pos = {c: i for i, c in enumerate(carrier)}

    def idx(label, where):
        try:
            return pos[str(label)]
        except KeyError:
            raise AlgebraError(f"{where}: {label!r} is not in the carrier") from None

    leq = np.eye(n, dtype=bool)
    for pair in order:
        a, b = pair
        leq[idx(a, "order"), idx(b, "order")] = True
    for k in range(n):  # Warshall closure
        leq |= leq[:, [k]] & leq[[k], :]
    if any(leq[i, j] and leq[j, i] for i in range(n) for j in range(n) if i != j):
        raise AlgebraError("order relation is not antisymmetric")

    def table(rows, what):
        if len(rows) != n or any(len(r) != n for r in rows):
            raise AlgebraError(f"{what} table must be {n}x{n}")
        return [[idx(v, f"{what}[{i}][{j}]") for j, v in enumerate(r)] for i, r in enumerate(rows)]

    otimes_t = table(otimes, "otimes")
    residuum_t = table(residuum, "residuum")

    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            lower = [k for k in range(n) if leq[k, i] and leq[k, j]]
            upper = [k for k in range(n) if leq[i, k] and leq[j, k]]
            glb = [k for k in lower if all(leq[m, k] for m in lower)]
            lub = [k for k in upper if all(leq[k, m] for m in upper)]
            if len(glb) != 1 or len(lub) != 1:
                raise AlgebraValidationError(
                    AlgebraReport(name, [LawResult(
                        "lattice", False, (carrier[i], carrier[j]),
                        f"{carrier[i]} and {carrier[j]} lack a unique meet or join")])
                )
            meet[i, j], join[i, j] = glb[0], lub[0]

    try:
        algebra = TruthAlgebra(name, carrier, leq, meet, join, otimes_t, residuum_t)
    except AlgebraError as exc:
        raise AlgebraValidationError(
            AlgebraReport(name, [LawResult("bounded", False, None, str(exc))])
        ) from None
    report = validate_algebra(algebra)
    if not report.ok:
        raise AlgebraValidationError(report)
    return algebra


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class LawResult:
    law: str
    ok: bool
    witness: tuple | None = None
    detail: str = ""


@dataclass
class AlgebraReport:
    algebra_name: str
    results: list[LawResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.ok]

    @property
    def first_failure(self) -> LawResult | None:
        fails = self.failures
        return fails[0] if fails else None

    def __getitem__(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def __str__(self) -> str:
        lines = [f"algebra {self.algebra_name}"]
        for r in self.results:
            mark = "pass" if r.ok else "FAIL"
            extra = f"  witness={r.witness} {r.detail}" if not r.ok else ""
            lines.append(f"  {mark}  {r.law}{extra}")
        return "\n".join(lines)


def validate_algebra(A: TruthAlgebra) -> AlgebraReport:
    """Check every law of a commutative residuated lattice exhaustively.

    Failures carry the first witness tuple found in carrier order.  The
    checks cover the lattice axioms, the monoid laws of ``⊗``, residuation,
    ``1 → a = a``, distribution of ``⊗`` over joins and the join-to-meet and
    meet-preserving behaviour of ``→``.
    """
    n = A.size
    lab = A.labels
    L, M, J, T, R = A.leq, A.meet, A.join, A.otimes, A.residuum
    rng = range(n)
    pairs = list(itertools.product(rng, rng))
    triples = list(itertools.product(rng, rng, rng))

    def law(name, items, pred, describe):
        for w in items:
            if not pred(*w):
                return LawResult(name, False, tuple(lab[x] for x in w), describe(*w))
        return LawResult(name, True)

    results = [
        law("lattice-order",
            pairs,
            lambda a, b: (M[a, b] == a) == L[a, b] and (J[a, b] == b) == L[a, b],
            lambda a, b: f"meet/join disagree with the order on ({lab[a]}, {lab[b]})"),
        law("lattice-commutative",
            pairs,
            lambda a, b: M[a, b] == M[b, a] and J[a, b] == J[b, a],
            lambda a, b: "meet or join not commutative"),
        law("lattice-associative",
            triples,
            lambda a, b, c: M[M[a, b], c] == M[a, M[b, c]] and J[J[a, b], c] == J[a, J[b, c]],
            lambda a, b, c: "meet or join not associative"),
        law("lattice-absorption",
            pairs,
            lambda a, b: M[a, J[a, b]] == a and J[a, M[a, b]] == a,
            lambda a, b: "absorption fails"),
        law("otimes-commutative",
            pairs,
            lambda a, b: T[a, b] == T[b, a],
            lambda a, b: f"{lab[a]}⊗{lab[b]}={lab[T[a, b]]} but {lab[b]}⊗{lab[a]}={lab[T[b, a]]}"),
        law("otimes-associative",
            triples,
            lambda a, b, c: T[T[a, b], c] == T[a, T[b, c]],
            lambda a, b, c: "(a⊗b)⊗c != a⊗(b⊗c)"),
        law("otimes-unit",
            [(a,) for a in rng],
            lambda a: T[a, A.top] == a and T[A.top, a] == a,
            lambda a: f"1⊗{lab[a]} != {lab[a]}"),
        law("residuation",
            triples,
            lambda a, b, c: bool(L[T[a, b], c]) == bool(L[a, R[b, c]]),
            lambda a, b, c: (
                f"{lab[a]}⊗{lab[b]}={lab[T[a, b]]} {'≤' if L[T[a, b], c] else '≰'} {lab[c]} "
                f"but {lab[a]} {'≤' if L[a, R[b, c]] else '≰'} {lab[b]}→{lab[c]}={lab[R[b, c]]}")),
        law("residuum-unit",
            [(a,) for a in rng],
            lambda a: R[A.top, a] == a,
            lambda a: f"1→{lab[a]}={lab[R[A.top, a]]}"),
        law("otimes-distributes-over-joins",
            triples,
            lambda a, b, c: T[a, J[b, c]] == J[T[a, b], T[a, c]] and T[a, A.bottom] == A.bottom,
            lambda a, b, c: "a⊗(b∨c) != (a⊗b)∨(a⊗c) or a⊗0 != 0"),
        law("residuum-joins-to-meets",
            triples,
            lambda a, b, c: R[J[a, b], c] == M[R[a, c], R[b, c]] and R[A.bottom, c] == A.top,
            lambda a, b, c: "(a∨b)→c != (a→c)∧(b→c) or 0→c != 1"),
        law("residuum-preserves-meets",
            triples,
            lambda a, b, c: R[a, M[b, c]] == M[R[a, b], R[a, c]] and R[a, A.top] == A.top,
            lambda a, b, c: "a→(b∧c) != (a→b)∧(a→c) or a→1 != 1"),
    ]
    return AlgebraReport(A.name, results)

"""Shared generators and brute-force oracles for the test suite.

The oracles here deliberately avoid numpy tables and the lifting helpers of
the package: they walk the carrier with :class:`TruthValue` arithmetic or
exact fractions so they stay independent of the code under test.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from mvgraph.algebra import (
    TruthAlgebra,
    big_meet,
    make_goedel_chain,
    make_lukasiewicz_chain,
    make_table_algebra,
)
from mvgraph.graph import AGraph
from mvgraph.mvsets import ARelation, AValuedSet, Index
from mvgraph.polarity import APolarity


def diamond() -> TruthAlgebra:
    """0 < a, b < 1 with a, b incomparable; ⊗ = ∧ and → the relative pseudocomplement."""
    carrier = ["0", "a", "b", "1"]
    order = [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]
    meet = {("a", "b"): "0"}

    def m(x, y):
        if x == y:
            return x
        if "0" in (x, y):
            return "0"
        if x == "1":
            return y
        if y == "1":
            return x
        return meet.get((x, y), meet.get((y, x)))

    def leq(x, y):
        return x == y or x == "0" or y == "1"

    def imp(x, y):
        return next(c for c in ["1", "a", "b", "0"] if leq(m(c, x), y)
                    and all(leq(d, c) for d in carrier if leq(m(d, x), y)))

    otimes = [[m(x, y) for y in carrier] for x in carrier]
    residuum = [[imp(x, y) for y in carrier] for x in carrier]
    return make_table_algebra(carrier, order, otimes, residuum, name="diamond")


SMALL_ALGEBRAS = [
    make_lukasiewicz_chain(2),
    make_lukasiewicz_chain(3),
    make_lukasiewicz_chain(4),
    make_lukasiewicz_chain(5),
    make_goedel_chain(3),
    make_goedel_chain(4),
    diamond(),
]

BOOL = make_lukasiewicz_chain(2)
L3 = make_lukasiewicz_chain(3)
L11 = make_lukasiewicz_chain(11)


def random_set(rng, A: TruthAlgebra, index) -> AValuedSet:
    index = index if isinstance(index, Index) else Index(index)
    return AValuedSet(A, index, rng.integers(0, A.size, len(index)))


def random_relation(rng, A: TruthAlgebra, dom, cod) -> ARelation:
    dom = dom if isinstance(dom, Index) else Index(dom)
    cod = cod if isinstance(cod, Index) else Index(cod)
    return ARelation(A, dom, cod, rng.integers(0, A.size, (len(dom), len(cod))))


def random_polarity(rng, A: TruthAlgebra, n_obj: int, n_att: int) -> APolarity:
    objs = Index(f"a{i}" for i in range(n_obj))
    atts = Index(f"x{i}" for i in range(n_att))
    return APolarity(random_relation(rng, A, objs, atts))


def random_graph(rng, A: TruthAlgebra, n: int) -> AGraph:
    Z = Index(f"z{i}" for i in range(n))
    vals = rng.integers(0, A.size, (n, n))
    np.fill_diagonal(vals, A.top)
    return AGraph(ARelation(A, Z, Z, vals))


def all_sets(A: TruthAlgebra, index: Index):
    for vals in itertools.product(range(A.size), repeat=len(index)):
        yield AValuedSet(A, index, np.array(vals, dtype=np.int64))


# -- oracles ---------------------------------------------------------------

def oracle_lift0(R: ARelation, u: AValuedSet) -> list:
    """``a ↦ ⋀_x (u(x) → R(a, x))`` by TruthValue folding."""
    return [big_meet(R.algebra, [u(x) >> R(a, x) for x in R.codomain]).index for a in R.domain]


def oracle_lift1(R: ARelation, f: AValuedSet) -> list:
    return [big_meet(R.algebra, [f(a) >> R(a, x) for a in R.domain]).index for x in R.codomain]


def oracle_concept_extents(P: APolarity) -> set[bytes]:
    """Distinct stable extents, found from the object side."""
    found = set()
    for f in all_sets(P.algebra, P.objects):
        up = AValuedSet(P.algebra, P.attributes, oracle_lift1(P.incidence, f))
        ext = AValuedSet(P.algebra, P.objects, oracle_lift0(P.incidence, up))
        found.add(ext.key())
    return found


def luk_residuum_oracle(a: Fraction, b: Fraction, n: int) -> Fraction:
    """``max {c : a ⊗ c ≤ b}`` over the ``n``-chain with exact fractions."""
    grid = [Fraction(k, n - 1) for k in range(n)]
    return max(c for c in grid if max(Fraction(0), a + c - 1) <= b)


# -- hypothesis strategies ---------------------------------------------------

algebras = st.sampled_from(SMALL_ALGEBRAS)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)

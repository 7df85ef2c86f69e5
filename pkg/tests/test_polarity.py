import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import (
    BOOL,
    L3,
    SMALL_ALGEBRAS,
    algebras,
    oracle_concept_extents,
    random_polarity,
    random_relation,
    random_set,
    seeds,
)
from mvgraph.mvsets import ARelation, AValuedSet, Index, subseteq, subsethood
from mvgraph.polarity import (
    APolarity,
    BudgetExceeded,
    CompatibilityError,
    Concept,
    ConceptError,
    EnrichedAPolarity,
    box_op,
    check_I_compatibility,
    concept_join,
    concept_meet,
    concept_of_extent,
    concept_of_intent,
    dia_op,
    enumerate_concepts,
)


def _small(seed):
    rng = np.random.default_rng(seed)
    A = [a for a in SMALL_ALGEBRAS if a.size <= 4][int(rng.integers(0, 5))]
    return rng, A


@settings(max_examples=80)
@given(algebras, seeds)
def test_galois_identity(A, seed):
    rng = np.random.default_rng(seed)
    P = random_polarity(rng, A, 3, 3)
    f = random_set(rng, A, P.objects)
    u = random_set(rng, A, P.attributes)
    assert subsethood(f, P.down(u)) == subsethood(u, P.up(f))


@settings(max_examples=80)
@given(algebras, seeds)
def test_closure_laws(A, seed):
    rng = np.random.default_rng(seed)
    P = random_polarity(rng, A, 3, 2)
    for side in (P.objects, P.attributes):
        s, t = random_set(rng, A, side), random_set(rng, A, side)
        assert subseteq(s, P.close(s))
        assert P.close(P.close(s)) == P.close(s)
        if subseteq(s, t):
            assert subseteq(P.close(s), P.close(t))
        assert subseteq(P.close(s & t), P.close(s) & P.close(t))
    f = random_set(rng, A, P.objects)
    assert P.up(P.down(P.up(f))) == P.up(f)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_enumeration_matches_object_side_oracle(seed):
    rng, A = _small(seed)
    P = random_polarity(rng, A, 2, int(rng.integers(1, 4)))
    concepts = enumerate_concepts(P)
    assert {c.extent.key() for c in concepts} == oracle_concept_extents(P)
    assert len(set(concepts)) == len(concepts)
    assert concepts[0] == P.bottom() and concepts[-1] == P.top()


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_meet_and_join_are_lattice_bounds(seed):
    rng, A = _small(seed)
    P = random_polarity(rng, A, 2, 2)
    concepts = enumerate_concepts(P)
    for c, d in itertools.product(concepts, repeat=2):
        lower = [e for e in concepts if e <= c and e <= d]
        upper = [e for e in concepts if c <= e and d <= e]
        m, j = concept_meet(P, c, d), concept_join(P, c, d)
        assert m in lower and all(e <= m for e in lower)
        assert j in upper and all(j <= e for e in upper)


def test_extremal_concepts():
    rng = np.random.default_rng(3)
    P = random_polarity(rng, BOOL, 3, 3)
    top = AValuedSet.constant(BOOL, P.attributes, BOOL.top)
    assert concept_of_intent(P, top) == P.bottom()
    assert P.bottom().extent == P.down(top)
    assert concept_of_extent(P, AValuedSet.constant(BOOL, P.objects, BOOL.top)) == P.top()


def test_unstable_pair_is_rejected():
    A = BOOL
    I = ARelation(A, "ab", "xy", [[1, 0], [0, 1]])
    P = APolarity(I)
    with pytest.raises(ConceptError):
        Concept(P, AValuedSet(A, "ab", [1, 1]), AValuedSet(A, "xy", [1, 1]))


def test_budget_is_enforced():
    P = random_polarity(np.random.default_rng(0), BOOL, 3, 12)
    with pytest.raises(BudgetExceeded):
        enumerate_concepts(P, limit=100)


# -- compatibility -----------------------------------------------------------

I_FIXTURE = [["1", "1", "0"], ["0", "1", "0"], ["0", "1", "1"]]
RBOX_FIXTURE = [["0", "1", "1"], ["1", "0", "0"], ["1", "1", "0"]]


def _fixture_polarity():
    objs, atts = Index(["a1", "a2", "a3"]), Index(["x1", "x2", "x3"])
    rel = lambda rows: ARelation(BOOL, objs, atts, [[BOOL.index_of(v) for v in r] for r in rows])
    return APolarity(rel(I_FIXTURE)), rel(RBOX_FIXTURE)


def test_I_compatibility_counterexample_fixture():
    P, rbox = _fixture_polarity()
    assert len(enumerate_concepts(P)) == 4
    report = check_I_compatibility(P, rbox, None)
    assert not report.ok
    first = report.failures[0]
    assert (first.family, first.alpha, first.element, first.point) == ("Rbox(0)", "1", "x1", "a1")
    assert len(report.failures) == 3
    with pytest.raises(CompatibilityError):
        EnrichedAPolarity(P, rbox, rbox.converse())


@settings(max_examples=60)
@given(algebras, seeds)
def test_incidence_itself_is_compatible(A, seed):
    rng = np.random.default_rng(seed)
    P = random_polarity(rng, A, 3, 3)
    assert check_I_compatibility(P, P.incidence, P.incidence.converse()).ok


def compatible_enrichments(rng, P, tries=200):
    """Random (R_□, R_◇) pairs that pass I-compatibility, by rejection."""
    A = P.algebra
    boxes, dias = [], []
    for _ in range(tries):
        R = random_relation(rng, A, P.objects, P.attributes)
        if check_I_compatibility(P, R, None).ok:
            boxes.append(R)
        S = random_relation(rng, A, P.attributes, P.objects)
        if check_I_compatibility(P, None, S).ok:
            dias.append(S)
    I, J = P.incidence, P.incidence.converse()
    return ([EnrichedAPolarity(P, I, J)] + [EnrichedAPolarity(P, b, J) for b in boxes]
            + [EnrichedAPolarity(P, I, d) for d in dias])


def assert_operators_preserve(EP, concepts):
    P = EP.base
    assert box_op(EP, P.top()) == P.top()
    assert dia_op(EP, P.bottom()) == P.bottom()
    for c, d in itertools.combinations_with_replacement(concepts, 2):
        assert box_op(EP, concept_meet(P, c, d)) == concept_meet(P, box_op(EP, c), box_op(EP, d))
        assert dia_op(EP, concept_join(P, c, d)) == concept_join(P, dia_op(EP, c), dia_op(EP, d))


@pytest.mark.parametrize("seed", range(12))
def test_operators_preserve_lattice_structure(seed):
    rng = np.random.default_rng(seed)
    P = random_polarity(rng, BOOL if seed % 2 else L3, 3, 3)
    concepts = enumerate_concepts(P)
    for EP in compatible_enrichments(rng, P, tries=60):
        assert_operators_preserve(EP, concepts)
        for c in concepts:
            assert box_op(EP, c).extent == P.close(box_op(EP, c).extent)

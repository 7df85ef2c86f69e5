import itertools

import numpy as np
import pytest

from conftest import BOOL, L3, diamond, random_graph, random_relation
from mvgraph.algebra import make_goedel_chain, make_lukasiewicz_chain
from mvgraph.casestudy import case_study
from mvgraph.correspondence import (
    AxiomId,
    NotAChainError,
    check_condition,
    check_condition_finite_chain,
    correspondence_equivalence_test,
    r_black,
)
from mvgraph.graph import AGraph, GraphFrame, RelationPair, check_E_compatibility
from mvgraph.mvsets import ARelation


def boolean_frames():
    """Every reflexive Boolean graph on two nodes with every compatible relation pair."""
    rels = [ARelation(BOOL, "xy", "xy", np.array(v).reshape(2, 2))
            for v in itertools.product(range(2), repeat=4)]
    for a, b in itertools.product(range(2), repeat=2):
        G = AGraph(ARelation(BOOL, "xy", "xy", np.array([[1, a], [b, 1]])))
        boxes = [R for R in rels if check_E_compatibility(G, R, None).ok]
        dias = [R for R in rels if check_E_compatibility(G, None, R).ok]
        for rb, rd in itertools.product(boxes, dias):
            yield GraphFrame(G, {"": RelationPair(rb, rd)}, unchecked=True)


@pytest.mark.slow
def test_boolean_sweep_all_axioms():
    seen = {ax: set() for ax in AxiomId}
    count = 0
    for F in boolean_frames():
        count += 1
        for ax in AxiomId:
            report = correspondence_equivalence_test(F, "", ax)
            assert report.status == "agree", (ax, F.graph.E.rows(), report)
            seen[ax].add(report.valid)
    assert count > 100
    # both outcomes occur for every axiom, so the sweep is not vacuous
    assert all(outcomes == {True, False} for outcomes in seen.values())


def random_compatible_frame(rng, A, n=2, tries=30):
    G = random_graph(rng, A, n)
    cands = [random_relation(rng, A, G.nodes, G.nodes) for _ in range(tries)]
    # bias towards E-reflexive candidates so that both outcomes appear
    cands += [ARelation(A, G.nodes, G.nodes, np.maximum(R.values, G.E.values)) for R in cands[:10]]
    boxes = [R for R in cands if check_E_compatibility(G, R, None).ok] or [G.E]
    dias = [R for R in cands if check_E_compatibility(G, None, R).ok] or [G.E.converse()]
    rb = boxes[int(rng.integers(0, len(boxes)))]
    rd = dias[int(rng.integers(0, len(dias)))]
    return GraphFrame(G, {"": RelationPair(rb, rd)})


def test_lukasiewicz3_frames_items_3_and_4():
    rng = np.random.default_rng(7)
    outcomes = set()
    for _ in range(120):
        F = random_compatible_frame(rng, L3)
        for ax in (AxiomId.BOX_T, AxiomId.DIA_T):
            report = correspondence_equivalence_test(F, "", ax)
            assert report.status == "agree", report
            outcomes.add((ax, report.valid))
    assert len(outcomes) == 4


CHAINS = [make_lukasiewicz_chain(3), make_lukasiewicz_chain(4), make_lukasiewicz_chain(6),
          make_goedel_chain(3), make_goedel_chain(5)]


def test_chain_criterion_matches_general_check():
    rng = np.random.default_rng(11)
    outcomes = set()
    for i in range(200):
        A = CHAINS[i % len(CHAINS)]
        G = random_graph(rng, A, int(rng.integers(1, 4)))
        # zero-heavy relations make failures common
        R = ARelation(A, G.nodes, G.nodes,
                      random_relation(rng, A, G.nodes, G.nodes).values * rng.integers(0, 2, (len(G.nodes),) * 2))
        F = GraphFrame(G, {"": RelationPair(R, R)}, unchecked=True)
        for ax in (AxiomId.BOX_BOT_BOT, AxiomId.TOP_DIA_TOP):
            general = check_condition(F, "", ax).holds
            assert check_condition_finite_chain(F, "", ax).holds == general
            outcomes.add((ax, general))
    assert len(outcomes) == 4


def test_chain_criterion_needs_a_chain():
    G = AGraph.discrete(diamond(), "ab")
    F = GraphFrame(G, {"": RelationPair(G.E, G.E)})
    with pytest.raises(NotAChainError):
        check_condition_finite_chain(F, "", AxiomId.BOX_BOT_BOT)


def test_reflexivity_implies_box_bot_bot():
    rng = np.random.default_rng(5)
    for i in range(100):
        A = [BOOL, L3, diamond()][i % 3]
        G = random_graph(rng, A, 3)
        R = ARelation(A, G.nodes, G.nodes, G.algebra.join[random_relation(rng, A, G.nodes, G.nodes).values, G.E.values])
        F = GraphFrame(G, {"": RelationPair(R, None)}, unchecked=True)
        assert check_condition(F, "", AxiomId.BOX_T).holds
        assert check_condition(F, "", AxiomId.BOX_BOT_BOT).holds


def test_case_study_correspondence():
    F = case_study().frame
    for label, ax in itertools.product("AMH", AxiomId):
        report = correspondence_equivalence_test(F, label, ax)
        assert report.status == "agree" and report.valid and report.condition


def test_budget_overrun_is_untested():
    F = case_study().frame
    report = correspondence_equivalence_test(F, "M", AxiomId.BOX_T, budget=10)
    assert report.status == "untested" and report.valid is None and not report.agree


def test_condition_witness_and_r_black():
    G = AGraph.discrete(BOOL, "xy")
    R = G.relation([[0, 1], [0, 1]])
    F = GraphFrame(G, {"": RelationPair(R, R.converse())})
    res = check_condition(F, "", AxiomId.BOX_T)
    assert not res and res.witness == ("x", "x", "1", "0")
    assert r_black(R.converse()) == R

"""
Axioms and the frame conditions behind them
===========================================

Each basic axiom is valid on a frame exactly when a first-order condition
on E and the modal relation holds.  We test both sides on a few frames.
"""

import itertools

import numpy as np

from mvgraph import AGraph, ARelation, AxiomId, GraphFrame, RelationPair
from mvgraph import check_condition, check_condition_finite_chain, correspondence_equivalence_test
from mvgraph import make_lukasiewicz_chain, sequent_valid_on_frame
from mvgraph.render import render_extent

B = make_lukasiewicz_chain(2)

# classical Kripke frame: E is the identity, R misses the loop at x
G = AGraph.discrete(B, "xy")
R = G.relation([["0", "1"], ["0", "1"]])
F = GraphFrame(G, {"": RelationPair(R, R.converse())})

for ax in AxiomId:
    rep = correspondence_equivalence_test(F, "", ax)
    print(f"{ax.value:<10} valid={rep.valid!s:<5} condition={rep.condition!s:<5} -> {rep.status}")

result = sequent_valid_on_frame(F, "[] p", "p")
print("\n[] p |- p fails; a falsifying valuation of p:")
print(render_extent(G, result.counterexample["p"].extent))
print("witness from the condition check:", check_condition(F, "", AxiomId.BOX_T).witness)

# on chains the first two conditions reduce to a search for a successor
L = make_lukasiewicz_chain(5)
rng = np.random.default_rng(1)
agree = 0
for _ in range(50):
    E = rng.integers(0, 5, (3, 3))
    np.fill_diagonal(E, 4)
    G = AGraph(ARelation(L, "abc", "abc", E))
    # zeroing about half the entries makes failures common
    S = G.relation(rng.integers(0, 5, (3, 3)) * rng.integers(0, 2, (3, 3)))
    Fr = GraphFrame(G, {"": RelationPair(S, S)}, unchecked=True)
    agree += all(check_condition(Fr, "", ax).holds == check_condition_finite_chain(Fr, "", ax).holds
                 for ax in itertools.islice(AxiomId, 2))
print(f"\nchain criterion agrees with the general check on {agree}/50 random frames")

"""
Three databases, three theories
===============================

Three nutrition databases are each built under a different theory of diet.
Their mutual indiscernibility E and one relation per theory make a
graph-based frame on the 11-element Łukasiewicz chain; two hypotheses
phi and psi are graded at every database and confidence level β.
"""

from mvgraph.casestudy import case_study, reproduce
from mvgraph.cli import analyze_rows
from mvgraph.model import evaluate, sequent_true
from mvgraph.render import render_extent, render_intent

loaded = case_study()
G, M = loaded.graph, loaded.model

print("E =")
for z, row in zip(G.nodes, G.E.rows()):
    print(f"  {z}: {' '.join(row)}")

for name in ("phi", "psi", "[]_M psi"):
    c = evaluate(M, name)
    print()
    print(render_extent(G, c.extent, f"[[ {name} ]]"))
    print(render_intent(G, c.intent))

# the hormonal-response box leaves both hypotheses untouched
print("\n[]_H phi == phi:", evaluate(M, "[]_H phi") == evaluate(M, "phi"))
print("[]_M psi |- phi:", sequent_true(M, "[]_M psi", "phi"))
print("phi |- psi:     ", sequent_true(M, "phi", "psi"))

print("\nframe checks:")
for label, check, ok, _ in analyze_rows(loaded):
    print(f"  {label:>2}  {check:<28} {'pass' if ok else 'FAIL'}")

print()
print(reproduce(loaded).summary())

"""
Graphs, induced polarities and compatible relations
===================================================

A reflexive graph (Z, E) induces a polarity whose objects are pairs
(β, z) and whose attributes are the nodes.  Modal relations must be
E-compatible before their operators act on concepts.
"""

from mvgraph import AGraph, ARelation, GraphFrame, RelationPair, enumerate_concepts
from mvgraph import check_E_compatibility, frame_box, make_lukasiewicz_chain
from mvgraph.render import render_extent

L = make_lukasiewicz_chain(3)
E = ARelation(L, "ab", "ab", [["1", "1/2"],
                              ["0", "1"]])
G = AGraph(E)
P = G.polarity
print(f"objects: {len(P.objects)} situations, attributes: {len(P.attributes)} nodes")

# I((β, z), z') = E(z, z') → β
beta = L.index_of("1/2")
print("I((1/2, a), b) =", P.incidence((beta, "a"), "b"))

concepts = enumerate_concepts(P)
print(f"{len(concepts)} concepts; the bottom one has extent")
print(render_extent(G, concepts[0].extent))

# E and its converse are always compatible, and act as identities
F = GraphFrame(G, {"E": RelationPair(E, E.converse())})
print("\n[E]c == c for every concept:", all(frame_box(F, "E", c) == c for c in concepts))

# a crisp graph with a relation that is not compatible
B = make_lukasiewicz_chain(2)
G2 = AGraph(ARelation(B, "abc", "abc", [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]]))
R = G2.relation([["0", "1", "1"], ["1", "0", "0"], ["1", "0", "1"]])
report = check_E_compatibility(G2, R, None)
print("\n" + str(report))

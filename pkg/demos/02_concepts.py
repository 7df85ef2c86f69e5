"""
Fuzzy concepts of a small polarity
==================================

A polarity pairs objects with attributes through a graded incidence.
The two derivation maps form a Galois connection, and their fixed points
are the formal concepts.
"""

from mvgraph import APolarity, ARelation, AValuedSet, enumerate_concepts, make_lukasiewicz_chain
from mvgraph.mvsets import subsethood
from mvgraph.polarity import concept_join, concept_meet

L = make_lukasiewicz_chain(3)

# three wines graded against two descriptors
I = ARelation(L, ["red", "rose", "white"], ["fruity", "dry"],
              [["1", "1/2"],
               ["1/2", "1/2"],
               ["0", "1"]])
P = APolarity(I)

f = AValuedSet(L, P.objects, ["1", "1/2", "0"])
print("f        =", f)
print("f↑       =", P.up(f))
print("f↑↓      =", P.close(f))

# the Galois identity: S(f, u↓) = S(u, f↑)
u = AValuedSet(L, P.attributes, ["1/2", "1"])
print("\nS(f, u↓) =", subsethood(f, P.down(u)), "  S(u, f↑) =", subsethood(u, P.up(f)))

def show(s):
    return " ".join(L.format(x) for x in s.values)


concepts = enumerate_concepts(P)
print(f"\n{len(concepts)} concepts, bottom first:")
for c in concepts:
    print("   extent", show(c.extent), "| intent", show(c.intent))

c, d = concepts[1], concepts[-2]
print("\nmeet intent:", show(concept_meet(P, c, d).intent))
print("join intent:", show(concept_join(P, c, d).intent))

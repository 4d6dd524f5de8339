"""Presentation graphs: construction, classification, and labelled symmetry.

A presentation graph records one generator per vertex and one relation
    s t s t ... = t s t s ...   (m factors on each side)
per edge with label m.  This script builds a few graphs, reads off their type
flags, and enumerates label-preserving symmetries.
"""

from artinkit import PresentationGraph, classify, labelled_isomorphisms, parse_graph

print("== a rigid triangle ==")
rigid = PresentationGraph("pqr", [("p", "q", 3), ("q", "r", 4), ("p", "r", 5)])
print(rigid.serialize())
print("flags:", classify(rigid))
print("automorphisms:", labelled_isomorphisms(rigid, rigid))

print("\n== a symmetric triangle ==")
sym = PresentationGraph("pqr", [("p", "q", 7), ("q", "r", 7), ("p", "r", 7)])
flags = classify(sym)
print(f"all labels >= 6, complete: xxxl={flags.xxxl}, free_of_infinity={flags.free_of_infinity}")
print("automorphism count:", len(labelled_isomorphisms(sym, sym)), "(the full S3)")

print("\n== the graph grammar round-trips ==")
text = "# two comment lines are allowed\nvertex a b c\nedge a b 3\nedge b c 12\n"
g = parse_graph(text)
print(g.serialize())
assert parse_graph(g.serialize()) == g
print("parse(serialize(g)) == g holds")

print("\n== the (3,3,3) triangle is the one non-hyperbolic-type shape ==")
eq = PresentationGraph("pqr", [("p", "q", 3), ("q", "r", 3), ("p", "r", 3)])
print("hyperbolic_type:", classify(eq).hyperbolic_type)

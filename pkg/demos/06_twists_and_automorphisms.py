"""Edge twists, the twist family, and automorphism generating sets.

Twisting reglues one side of a separating edge through conjugation by the
distinguished element of that edge; the family of twisted graphs is finite
and feeds the generating set of the automorphism group.  The same machinery
decides Out-finiteness and the co-Hopf property from the graph alone.
"""

from artinkit import (
    PresentationGraph,
    aut_generators,
    decide_cohopfian,
    decide_out_finite,
    edge_twist,
    proper_self_embedding,
    twist_family,
    verify_standard_form,
)

triforce = PresentationGraph(
    "a b c x y z".split(),
    [("a", "b", 7), ("a", "c", 7), ("b", "c", 7),
     ("x", "b", 8), ("x", "c", 9), ("y", "a", 10),
     ("y", "c", 11), ("z", "a", 12), ("z", "b", 13)],
)

print("== one edge twist ==")
twisted, mp = edge_twist(triforce, ("b", "c"), {"b", "c", "x"})
print("  x attaches to", twisted.neighbors("x"), "with labels",
      [twisted.label("x", n) for n in twisted.neighbors("x")])
print("  map on x:", mp.assignment["x"])

print("\n== the twist family ==")
fam = twist_family(triforce)
print(f"  {fam.size()} members (one binary choice per separating edge)")

print("\n== the generating set of Aut ==")
gens = aut_generators(triforce)
tags = {}
for m in gens:
    tags[m.tag] = tags.get(m.tag, 0) + 1
print(f"  {len(gens)} generators: {tags}")
print("  every map verifies:",
      all(verify_standard_form(m).status == "ACCEPT" for m in gens))

print("\n== decision procedures ==")
for g, name in [
    (triforce, "triangle of triangles"),
    (PresentationGraph("ab", [("a", "b", 7)]), "single odd edge"),
    (PresentationGraph("ab", [("a", "b", 6)]), "single even edge"),
]:
    out = decide_out_finite(g)
    coh = decide_cohopfian(g)
    print(f"  {name}: Out {'finite' if out.value else 'infinite'} ({out.reason}); "
          f"{'co-hopfian' if coh.value else 'not co-hopfian'}")

print("\n== a proper self-embedding at a cut-vertex ==")
bowtie = PresentationGraph(
    "abcde",
    [("a", "b", 6), ("b", "c", 6), ("a", "c", 6),
     ("c", "d", 6), ("d", "e", 6), ("c", "e", 6)],
)
mp = proper_self_embedding(bowtie, "c")
for v in bowtie.vertices:
    print(f"  {v} -> {mp.assignment[v]}")

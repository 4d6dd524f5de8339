"""Chunks, the chunk tree, and the graph of induced cycles.

The running example is a triangle of triangles: a central triangle whose
three edges each carry a glued corner triangle.  The three central edges
separate the graph, the four triangles are its chunks, and the chunk tree is
the star pairing them up.
"""

from artinkit import (
    PresentationGraph,
    chunk_tree,
    chunk_tree_text,
    chunks,
    cut_vertices,
    cycle_chain_witness,
    cycle_graph,
    induced_cycles,
    separating_edges,
)

triforce = PresentationGraph(
    "a b c x y z".split(),
    [("a", "b", 7), ("a", "c", 7), ("b", "c", 7),
     ("x", "b", 8), ("x", "c", 9), ("y", "a", 10),
     ("y", "c", 11), ("z", "a", 12), ("z", "b", 13)],
)

print("cut vertices:", cut_vertices(triforce) or "none")
print("separating edges:", separating_edges(triforce))
print("chunks:")
for c in chunks(triforce):
    print("   ", ",".join(c.vertices))
t = chunk_tree(triforce)
print(f"chunk tree: {t.node_count()} nodes, {len(t.incidence)} incidences, tree={t.is_tree()}")
print("\nchunk tree in the graph grammar:")
print(chunk_tree_text(t))

print("induced cycles:", induced_cycles(triforce))
cg = cycle_graph(triforce)
print("graph of induced cycles connected:", cg.is_connected())

print("\n== pivoted chains between induced cycles ==")
import itertools

k4 = PresentationGraph("abcd", [(u, v, 6) for u, v in itertools.combinations("abcd", 2)])
v, chain = cycle_chain_witness(k4, ("a", "b", "c"), ("a", "b", "d"))
print(f"in K4, the triangles abc and abd are joined through v={v}: {chain}")

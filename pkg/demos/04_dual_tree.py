"""The dual tree of a two-generator group and the trichotomy for pairs.

The group acts on a regular m-tree; standard generators translate along axes
that cross in exactly one edge.  Two conjugates of standard generators
generate the infinite cyclic group, a free group, or everything, and the
axes decide which.
"""

from artinkit import AxisDescription, Word, axis_segment, classify_pair, parse_word, tree_ball

P = parse_word

print("== balls of the dual tree ==")
for m, r in [(3, 1), (3, 2), (4, 1)]:
    b = tree_ball(m, r)
    print(f"  m={m}, radius {r}: {len(b.vertices)} simplices, center degree {b.degree(0)}")
print()
print(tree_ball(3, 1).adjacency_text())

print("== axes ==")
print("  Axis(s) around the base:", axis_segment(3, AxisDescription(Word(), "s"), 1))
print("  Axis(t) around the base:", axis_segment(3, AxisDescription(Word(), "t"), 1))

print("\n== the trichotomy ==")
cases = [
    ("x = s, y = s^-1", AxisDescription(Word(), "s"), AxisDescription(Word(), "s", -1)),
    ("x = g s g^-1, y = g t g^-1 with g = st",
     AxisDescription(P("s t"), "s"), AxisDescription(P("s t"), "t")),
    ("x = s, y = (t s^-1 t) t (t s^-1 t)^-1",
     AxisDescription(Word(), "s"), AxisDescription(P("t s^-1 t"), "t")),
]
for label, x, y in cases:
    res = classify_pair(3, x, y)
    extra = f", witness {res.witness}" if res.witness is not None else ""
    print(f"  {label}: {res.kind}{extra}")

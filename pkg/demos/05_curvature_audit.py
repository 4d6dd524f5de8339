"""Exact Gauss-Bonnet audits of disc diagrams.

Curvature lives in integer units of pi/6: every valid diagram totals exactly
12 units.  Marked boundary vertices are classified by how many polygons
contain them, and redistributed curvature kappa' drives an inequality audit
whose checks cannot all pass at once - reproducing, on every candidate, the
impossibility argument for diagrams that claim to satisfy all the large-label
side conditions.
"""

import random

from artinkit import curvatures, redistribute, star_diagram, with_markings
from artinkit.curvature import attach_star_two

print("== a single hexagon star ==")
hexstar = star_diagram(3)
rep = curvatures(hexstar)
print("  polygon curvature:", rep.polygon_kappa)
print("  vertex curvatures:", rep.vertex_kappa)
print("  total:", rep.total, "(= 2*pi)")

print("\n== a big star is negatively curved inside ==")
rep = curvatures(star_diagram(6))
print("  12-gon curvature:", rep.polygon_kappa["P0"], "units; total still", rep.total)

print("\n== corners and redistribution ==")
d = star_diagram(4)
u, w, v = d.boundary[0], d.boundary[1], d.boundary[2]
d = attach_star_two(d, u, w, v, 3)  # glue across two edges at a type-1 pivot
fresh_corner = sorted(x for x in d.types if x not in star_diagram(4).types and d.types[x] == 2)[0]
d = with_markings(d, {fresh_corner}, None)
red = redistribute(d)
print(f"  marked corner: {fresh_corner}")
for cell in red.corner_cells:
    print(f"  corner-cell {cell.center}: corners {cell.corners}, specials {cell.specials}")
print("  kappa' total:", red.total)
for c in red.checks:
    print(f"    CHECK {c.name} {'PASS' if c.passed else 'FAIL'} {c.detail}")

print("\n== every candidate that claims the side conditions gets flagged ==")
rng = random.Random(1)
flagged = 0
for _ in range(20):
    # a fan of polygons around one boundary pivot (n >= 5) plus a good corner
    d = star_diagram(rng.randint(3, 5))
    pivot = next(x for x in d.boundary if d.types[x] == 2)
    from artinkit import attach_star

    for _ in range(4):
        i = d.boundary.index(pivot)
        d = attach_star(d, d.boundary[i], d.boundary[(i + 1) % len(d.boundary)], rng.randint(3, 5))
    bnd = d.boundary
    n = len(bnd)
    i = next(
        j for j in range(n)
        if d.types[bnd[(j + 1) % n]] == 1
        and pivot not in (bnd[j], bnd[(j + 1) % n], bnd[(j + 2) % n])
    )
    before = set(d.types)
    d = attach_star_two(d, bnd[i], bnd[(i + 1) % n], bnd[(i + 2) % n], 3)
    corner = sorted(x for x in set(d.types) - before if d.types[x] == 2)[0]
    d = with_markings(d, {corner, pivot}, None)
    if redistribute(d).flagged:
        flagged += 1
print(f"  {flagged}/20 candidates flagged as inconsistent")

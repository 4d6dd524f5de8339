import json
import random

import pytest

from artinkit import (
    DiagramError,
    DiscDiagram,
    PreconditionError,
    attach_star,
    curvatures,
    dump_diagram,
    load_diagram,
    polygonalize,
    redistribute,
    star_diagram,
    validate,
    with_markings,
)
from artinkit.curvature import FULL_TURN, attach_star_two
from conftest import diagram_with_good_corner, pivot_fan_diagram, random_glued_diagram


def hexstar():
    return star_diagram(3)


# -- loading and validation -----------------------------------------------------

def test_load_hexstar_fixture(fixtures_dir):
    d = load_diagram((fixtures_dir / "hexstar.diagram").read_text())
    assert len(d.triangles) == 6
    assert len(d.boundary) == 6


def test_dump_load_roundtrip():
    d = with_markings(attach_star(hexstar(), "v0", "v1", 4), {"v3"}, "v5")
    d2 = load_diagram(dump_diagram(d))
    assert d2 == d


def test_reject_fan_with_type0_on_boundary():
    d = hexstar()
    removed = DiscDiagram(d.triangles[:-1], d.types, d.boundary)
    with pytest.raises(DiagramError, match="type-0|boundary"):
        # dropping one triangle leaves the type-0 vertex on the boundary
        validate(removed)


def test_reject_two_discs_sharing_a_vertex():
    a = hexstar()
    # second star sharing only the vertex v0
    types = dict(a.types)
    tris = list(a.triangles)
    rim = ["v0"] + [f"w{i}" for i in range(5)]
    types["Q0"] = 0
    for i, x in enumerate(rim):
        types.setdefault(x, 1 if i % 2 == 0 else 2)
    for i in range(6):
        tris.append(("Q0", rim[i], rim[(i + 1) % 6]))
    bad = DiscDiagram(tuple(tris), types, a.boundary)
    with pytest.raises(DiagramError, match="not a disc"):
        validate(bad)


def test_reject_bad_typing():
    d = hexstar()
    types = dict(d.types)
    types["v1"] = 1  # triangle now has two type-1 vertices
    with pytest.raises(DiagramError, match="one vertex of each type"):
        validate(DiscDiagram(d.triangles, types, d.boundary))


def test_reject_marking_off_boundary():
    d = hexstar()
    with pytest.raises(DiagramError, match="off the boundary|no type"):
        validate(DiscDiagram(d.triangles, d.types, d.boundary, frozenset({"P0"})))
    with pytest.raises(DiagramError, match="not a type-2"):
        validate(DiscDiagram(d.triangles, d.types, d.boundary, frozenset({"v0"})))


def test_reject_euler_violation():
    d = hexstar()
    e = attach_star(d, "v0", "v1", 3)
    # drop the declared boundary edge consistency by lying about the boundary
    with pytest.raises(DiagramError):
        validate(DiscDiagram(e.triangles, e.types, d.boundary))


def test_load_error_messages_are_json_first():
    with pytest.raises(DiagramError, match="bad JSON"):
        load_diagram("{not json")
    with pytest.raises(DiagramError, match="schema"):
        load_diagram(json.dumps({"triangles": []}))


# -- polygonalization --------------------------------------------------------------

def test_polygonalize_hexstar():
    p = polygonalize(hexstar())
    assert len(p.polygons) == 1
    cyc = p.polygons[0].cycle
    assert len(cyc) == 6
    types = [1 if i % 2 == 0 else 2 for i in range(6)]
    assert [p.types[v] for v in cyc] == types


def test_polygonalize_two_adjacent_stars():
    d = attach_star(hexstar(), "v0", "v1", 3)
    p = polygonalize(d)
    assert len(p.polygons) == 2
    shared = set(p.polygons[0].cycle) & set(p.polygons[1].cycle)
    assert shared == {"v0", "v1"}


def test_polygonalize_rejects_boundary_type0():
    tri = DiscDiagram(
        (("c", "p", "q"),), {"c": 0, "p": 1, "q": 2}, ("c", "p", "q")
    )
    with pytest.raises(DiagramError, match="polygonaliz"):
        polygonalize(tri)


# -- curvature ----------------------------------------------------------------------

def test_hexstar_curvatures():
    rep = curvatures(hexstar())
    assert rep.polygon_kappa == {"P0": 0}
    assert [rep.vertex_kappa[f"v{i}"] for i in range(6)] == [0, 4, 0, 4, 0, 4]
    assert rep.total == FULL_TURN


def test_twelve_gon_curvatures():
    rep = curvatures(star_diagram(6))
    assert rep.polygon_kappa["P0"] == -12
    assert sum(k for v, k in rep.vertex_kappa.items()) == 24
    assert rep.total == FULL_TURN


def test_marked_corner_classification():
    d = with_markings(hexstar(), {"v1"}, None)
    rep = curvatures(d)
    assert rep.transition_class["v1"] == "corner"
    assert rep.vertex_kappa["v1"] == 4
    assert rep.corners == ("v1",)


def test_dichotomy_violation_reported_not_raised():
    d = attach_star(hexstar(), "v0", "v1", 3)
    # v1 now lies in 2 polygons: marking it violates the n_v dichotomy
    rep = curvatures(with_markings(d, {"v1"}, None))
    assert rep.transition_class["v1"] == "violation(n=2)"
    assert any(c.name == "transition_dichotomy" and not c.passed for c in rep.checks)
    assert rep.flagged


def test_gauss_bonnet_on_random_diagrams():
    rng = random.Random(2024)
    for _ in range(60):
        d = random_glued_diagram(rng, max_polygons=12)
        rep = curvatures(d)
        assert rep.total == FULL_TURN
        assert all(k <= 0 for k in rep.polygon_kappa.values())


def test_interior_type1_vertices_nonpositive():
    rng = random.Random(77)
    for _ in range(20):
        d = diagram_with_good_corner(rng, max_polygons=8)
        rep = curvatures(d)
        for v, k in rep.vertex_kappa.items():
            if d.types[v] == 1 and v not in d.boundary:
                assert k <= 0


# -- redistribution --------------------------------------------------------------------

def test_redistribute_preconditions():
    with pytest.raises(PreconditionError, match="one polygon"):
        redistribute(with_markings(hexstar(), {"v1"}, None))
    d = attach_star(hexstar(), "v0", "v1", 3)
    with pytest.raises(PreconditionError, match="corner"):
        redistribute(with_markings(d, set(), None))


def test_two_polygon_corner_cell():
    d = attach_star(hexstar(), "v0", "v1", 3)
    rep = curvatures(d)
    corner = next(
        v for v in d.boundary if d.types[v] == 2 and rep.n_polygons[v] == 1
    )
    red = redistribute(with_markings(d, {corner}, None))
    assert len(red.corner_cells) == 1
    cell = red.corner_cells[0]
    assert corner in cell.corners
    base = curvatures(with_markings(d, {corner}, None))
    assert red.polygon_kappa2[cell.center] == base.polygon_kappa[cell.center] - 4


def test_good_corner_conserves_kappa2():
    rng = random.Random(303)
    for _ in range(25):
        d = diagram_with_good_corner(rng, max_polygons=10)
        red = redistribute(d)
        assert red.total == FULL_TURN
        assert all(
            c.passed for c in red.checks if c.name == "inner_path_two_type2"
        )
        for cell in red.corner_cells:
            assert len(set(cell.specials)) == 2


def test_degenerate_corner_cell_reported():
    d = attach_star(hexstar(), "v0", "v1", 3)
    rep = curvatures(d)
    corner = next(v for v in d.boundary if d.types[v] == 2 and rep.n_polygons[v] == 1)
    red = redistribute(with_markings(d, {corner}, None))
    assert any(c.name == "inner_path_two_type2" and not c.passed for c in red.checks)
    assert red.total == FULL_TURN - 2  # one degenerate cell loses two units
    assert red.flagged


def test_special_vertex_multiplicity_bounded():
    rng = random.Random(404)
    for _ in range(20):
        d = diagram_with_good_corner(rng, max_polygons=10)
        red = redistribute(d)
        assert all(n <= 2 for n in red.special_counts.values())


def test_corner_cell_group_inequality():
    rng = random.Random(505)
    for _ in range(20):
        d = diagram_with_good_corner(rng, max_polygons=10)
        red = redistribute(d)
        for cell in red.corner_cells:
            group = red.polygon_kappa2[cell.center] + sum(
                red.vertex_kappa2[v] for v in cell.corners
            )
            assert group <= 0


def test_pivot_fan_satisfies_side_conditions_and_is_flagged():
    rng = random.Random(606)
    d = pivot_fan_diagram(rng)
    rep = curvatures(d)
    # all marked non-corner transitions are almost-corners; one corner present
    assert rep.corners
    for v in d.transitions:
        if v not in rep.corners:
            assert rep.n_polygons[v] >= 5
    # no interior type-2 vertices in this family (vacuous Appel-Schupp bound)
    assert all(v in d.boundary for v in rep.vertex_kappa if d.types[v] == 2)
    red = redistribute(d)
    assert red.flagged


def test_attach_star_accepts_both_edge_orientations():
    d = hexstar()
    u, v = d.boundary[0], d.boundary[1]
    fwd = attach_star(d, u, v, 3)
    rev = attach_star(d, v, u, 3)
    for out in (fwd, rev):
        validate(out)
        assert curvatures(out).total == FULL_TURN
    assert set(fwd.types) == set(rev.types)


def test_no_diagram_passes_every_redistribution_check():
    # With a corner present and more than one polygon, the inequality suite
    # and exact conservation cannot all hold at once: their conjunction would
    # cap the total at 6 units against the forced 12.  Every generated
    # diagram must therefore be flagged.
    rng = random.Random(808)
    for i in range(40):
        d = (
            diagram_with_good_corner(rng, max_polygons=12)
            if i % 2
            else pivot_fan_diagram(rng)
        )
        red = redistribute(d)
        assert red.flagged
        assert any(not c.passed for c in red.checks)


def test_attach_star_two_makes_pivot_interior():
    d = hexstar()
    u, w, v = d.boundary[0], d.boundary[1], d.boundary[2]
    assert d.types[w] == 2 or d.types[w] == 1
    d2 = attach_star_two(d, u, w, v, 3)
    validate(d2)
    assert w not in d2.boundary
    assert curvatures(d2).total == FULL_TURN

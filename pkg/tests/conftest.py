"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest

from artinkit import (
    DiscDiagram,
    PresentationGraph,
    attach_star,
    curvatures,
    star_diagram,
    with_markings,
)
from artinkit.curvature import attach_star_two

FIXTURES = Path(__file__).parent / "fixtures"


def triforce_graph() -> PresentationGraph:
    return PresentationGraph(
        "a b c x y z".split(),
        [
            ("a", "b", 7), ("a", "c", 7), ("b", "c", 7),
            ("x", "b", 8), ("x", "c", 9),
            ("y", "a", 10), ("y", "c", 11),
            ("z", "a", 12), ("z", "b", 13),
        ],
    )


@pytest.fixture
def triforce() -> PresentationGraph:
    return triforce_graph()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def complete_graph(names: str, label: int = 7) -> PresentationGraph:
    return PresentationGraph(
        names, [(u, v, label) for u, v in itertools.combinations(names, 2)]
    )


def cycle_pg(names: str, label: int = 7) -> PresentationGraph:
    ns = list(names)
    edges = [(ns[i], ns[(i + 1) % len(ns)], label) for i in range(len(ns))]
    return PresentationGraph(ns, edges)


# ---------------------------------------------------------------------------
# Random graphs.

def _has_cut_vertex_nx(edges, n) -> bool:
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    if not nx.is_connected(G):
        return True
    return bool(list(nx.articulation_points(G)))


def random_biconnected(rng: random.Random, n: int, labels=(6, 13)) -> PresentationGraph:
    """A random connected graph without cut-vertex (independently checked via
    networkx articulation points)."""
    assert n >= 3
    while True:
        p = rng.uniform(0.35, 0.85)
        edges = [
            (u, v)
            for u, v in itertools.combinations(range(n), 2)
            if rng.random() < p
        ]
        import networkx as nx

        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        if not nx.is_connected(G) or list(nx.articulation_points(G)):
            continue
        return PresentationGraph(
            [f"v{i}" for i in range(n)],
            [(f"v{u}", f"v{v}", rng.randint(*labels)) for u, v in edges],
        )


def random_connected(rng: random.Random, n: int, labels=(2, 9)) -> PresentationGraph:
    import networkx as nx

    while True:
        p = rng.uniform(0.25, 0.9)
        edges = [
            (u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p
        ]
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        if nx.is_connected(G):
            return PresentationGraph(
                [f"v{i}" for i in range(n)],
                [(f"v{u}", f"v{v}", rng.randint(*labels)) for u, v in edges],
            )


def atlas_graphs(max_vertices: int = 7):
    """All connected unlabelled graphs up to 7 vertices, as vertex/edge data."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if n == 0 or n > max_vertices:
            continue
        if not nx.is_connected(G):
            continue
        out.append((n, tuple(sorted(tuple(sorted(e)) for e in G.edges()))))
    return out


def pg_from_atlas(n: int, edges, labeler) -> PresentationGraph:
    return PresentationGraph(
        [f"v{i}" for i in range(n)],
        [(f"v{u}", f"v{v}", labeler(u, v)) for u, v in edges],
    )


# ---------------------------------------------------------------------------
# Random disc diagrams.

def random_boundary_edge(rng: random.Random, d: DiscDiagram):
    n = len(d.boundary)
    i = rng.randrange(n)
    return d.boundary[i], d.boundary[(i + 1) % n]


def random_glued_diagram(rng: random.Random, max_polygons: int = 40) -> DiscDiagram:
    """Stars glued along single boundary edges; always a valid disc."""
    d = star_diagram(rng.randint(3, 6))
    for _ in range(rng.randint(0, max_polygons - 1)):
        u, v = random_boundary_edge(rng, d)
        d = attach_star(d, u, v, rng.randint(3, 6))
    return d


def diagram_with_good_corner(rng: random.Random, max_polygons: int = 40) -> DiscDiagram:
    """A glued diagram with one corner whose cell has a two-type-2 inner path.

    Attaching a polygon across two consecutive boundary edges pivoted at a
    type-1 vertex puts that polygon's glued arc inside the diagram, so its
    inner path runs type2-type1-type2; marking one of its fresh rim type-2
    vertices gives a corner with conservative redistribution.
    """
    d = random_glued_diagram(rng, max_polygons=max(1, max_polygons - 2))
    # find a boundary path u-w-v pivoted at a type-1 vertex
    bnd = d.boundary
    n = len(bnd)
    starts = [i for i in range(n) if d.types[bnd[(i + 1) % n]] == 1]
    i = rng.choice(starts)
    u, w, v = bnd[i], bnd[(i + 1) % n], bnd[(i + 2) % n]
    before = set(d.types)
    d = attach_star_two(d, u, w, v, rng.randint(3, 6))
    fresh_t2 = sorted(
        x for x in set(d.types) - before if d.types[x] == 2
    )
    corner = rng.choice(fresh_t2)
    return with_markings(d, {corner}, None)


def pivot_fan_diagram(
    rng: random.Random, fan_size: int = 5, extra: int = 2
) -> DiscDiagram:
    """A diagram with one corner (good inner path), one almost-corner marked
    transition in >= fan_size polygons, and no interior type-2 vertices."""
    d = star_diagram(rng.randint(3, 5))
    pivot = next(v for v in d.boundary if d.types[v] == 2)
    for _ in range(fan_size - 1):
        n = len(d.boundary)
        i = d.boundary.index(pivot)
        # glue on a boundary edge incident to the pivot
        u, v = d.boundary[i], d.boundary[(i + 1) % n]
        d = attach_star(d, u, v, rng.randint(3, 5))
    for _ in range(extra):
        u, v = random_boundary_edge(rng, d)
        d = attach_star(d, u, v, rng.randint(3, 5))
    # a good corner via a two-edge attachment at a type-1 pivot
    bnd = d.boundary
    n = len(bnd)
    starts = [
        i
        for i in range(n)
        if d.types[bnd[(i + 1) % n]] == 1 and pivot not in
        (bnd[i], bnd[(i + 1) % n], bnd[(i + 2) % n])
    ]
    i = rng.choice(starts)
    before = set(d.types)
    d = attach_star_two(d, bnd[i], bnd[(i + 1) % n], bnd[(i + 2) % n], rng.randint(3, 5))
    corner = sorted(x for x in set(d.types) - before if d.types[x] == 2)[0]
    rep = curvatures(with_markings(d, set(), None))
    assert rep.n_polygons[pivot] >= fan_size
    assert rep.n_polygons[corner] == 1
    return with_markings(d, {corner, pivot}, None)

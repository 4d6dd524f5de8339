"""The tree of simplices of a two-generator group and its dual tree.

The Cayley graph on the simple factors, taken modulo right multiplication by
the distinguished element D, is a tree of simplices: its vertices are cosets
g<D>, and the maximal simplices are the translates of the two base simplices
spanned by the prefixes of the two full alternating words.  Every coset lies
in exactly two maximal simplices, so the dual graph (a vertex per maximal
simplex, an edge whenever two simplices share a coset) is a regular m-tree on
which the generators translate by 1.

Cosets are keyed by the simple-factor sequence of the canonical form with the
D power dropped; tree navigation is then pure string computation.  The two
simplices through the coset with representative h are h*(base s-simplex) and
h*(base t-simplex), which makes neighbor expansion local.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dihedral import garside_nf, words_equal
from .errors import CapExceeded, PreconditionError
from .words import Word, generator

CosetKey = tuple[str, ...]
Simplex = frozenset[CosetKey]

DEFAULT_MAX_SIMPLICES = 20_000


def coset_key(m: int, w: Word) -> CosetKey:
    return garside_nf(m, w).simples


def _key_word(key: CosetKey) -> Word:
    return Word((c, 1) for u in key for c in u)


def coset_str(key: CosetKey) -> str:
    return ".".join(key) if key else "1"


def _base_prefixes(first: str, m: int) -> list[Word]:
    other = "t" if first == "s" else "s"
    out = []
    for length in range(m):
        out.append(Word((first if i % 2 == 0 else other, 1) for i in range(length)))
    return out


def _simplex_from(m: int, rep: Word, first: str) -> Simplex:
    return frozenset(coset_key(m, rep * p) for p in _base_prefixes(first, m))


def base_simplex(m: int) -> Simplex:
    return _simplex_from(m, Word(), "s")


def simplices_at(m: int, key: CosetKey) -> tuple[Simplex, Simplex]:
    """The two maximal simplices containing the given coset."""
    rep = _key_word(key)
    return _simplex_from(m, rep, "s"), _simplex_from(m, rep, "t")


def neighbor_across(m: int, simplex: Simplex, key: CosetKey) -> Simplex:
    """The unique other maximal simplex through one coset of a simplex."""
    a, b = simplices_at(m, key)
    if a == simplex:
        return b
    if b == simplex:
        return a
    raise AssertionError("coset does not lie on the given simplex")


def simplex_tag(s: Simplex) -> str:
    return ";".join(sorted(coset_str(k) for k in s))


@dataclass(frozen=True)
class SimplexNode:
    tag: str
    cosets: tuple[str, ...]
    representative: str
    depth: int


@dataclass(frozen=True)
class TreeBall:
    m: int
    radius: int
    vertices: tuple[SimplexNode, ...]
    edges: tuple[tuple[int, int], ...]

    def degree(self, i: int) -> int:
        return sum(1 for a, b in self.edges if i in (a, b))

    def adjacency_text(self) -> str:
        lines = [f"# dual tree ball, m={self.m}, radius={self.radius}"]
        for i, node in enumerate(self.vertices):
            nbrs = sorted(b if a == i else a for a, b in self.edges if i in (a, b))
            lines.append(f"{i} [{node.tag}] -> {' '.join(str(j) for j in nbrs)}")
        return "\n".join(lines) + "\n"


def tree_ball(m: int, r: int, max_simplices: int = DEFAULT_MAX_SIMPLICES) -> TreeBall:
    """Exact ball of radius r around the base simplex in the dual tree."""
    if m < 3:
        raise PreconditionError("tree_ball needs m >= 3")
    if r < 1:
        raise PreconditionError("tree_ball needs radius >= 1")
    start = base_simplex(m)
    index: dict[Simplex, int] = {start: 0}
    info: list[tuple[Simplex, int]] = [(start, 0)]
    edges: set[tuple[int, int]] = set()
    frontier = [start]
    for depth in range(1, r + 1):
        nxt: list[Simplex] = []
        for s in sorted(frontier, key=simplex_tag):
            i = index[s]
            for key in sorted(s):
                n = neighbor_across(m, s, key)
                if n not in index:
                    if len(index) >= max_simplices:
                        raise CapExceeded(
                            f"ball exceeds {max_simplices} simplices; lower r or raise the cap"
                        )
                    index[n] = len(info)
                    info.append((n, depth))
                    nxt.append(n)
                j = index[n]
                edges.add((min(i, j), max(i, j)))
        frontier = nxt
    nodes = tuple(
        SimplexNode(
            tag=simplex_tag(s),
            cosets=tuple(sorted(coset_str(k) for k in s)),
            representative=min(coset_str(k) for k in s),
            depth=d,
        )
        for s, d in info
    )
    return TreeBall(m, r, nodes, tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# Axes of conjugates of standard generators.

@dataclass(frozen=True)
class AxisDescription:
    """The element conjugator * base^sign * conjugator^-1; its axis is the
    conjugator-translate of the base generator's axis."""

    conjugator: Word
    base: str
    sign: int = 1

    def __post_init__(self):
        if self.base not in ("s", "t"):
            raise PreconditionError("axis base must be s or t")
        if self.sign not in (1, -1):
            raise PreconditionError("axis sign must be +1 or -1")

    def element(self) -> Word:
        return self.conjugator * generator(self.base, self.sign) * self.conjugator.inverse()


def axis_vertex(m: int, a: AxisDescription, k: int) -> Simplex:
    """The k-th simplex on the axis: conjugator * base^k * (base simplex)."""
    rep = a.conjugator * (generator(a.base) ** k)
    return _simplex_from(m, rep, "s")


def _levels_from(m: int, start: Simplex, max_radius: int, cap: int):
    """Iterator over (depth, set of simplices at that depth) from start."""
    seen = {start}
    frontier = {start}
    yield 0, frontier
    for depth in range(1, max_radius + 1):
        nxt = set()
        for s in frontier:
            for key in s:
                n = neighbor_across(m, s, key)
                if n not in seen:
                    seen.add(n)
                    nxt.add(n)
                    if len(seen) > cap:
                        raise CapExceeded("projection search exceeded the simplex cap")
        if not nxt:
            return
        frontier = nxt
        yield depth, frontier


def _project_to_axis(
    m: int, a: AxisDescription, span: int, cap: int
) -> tuple[int, int]:
    """(k*, distance) of the projection of the base simplex onto the axis."""
    targets = {}
    for k in range(-span, span + 1):
        targets.setdefault(axis_vertex(m, a, k), k)
    max_radius = len(a.conjugator) + 2
    for depth, level in _levels_from(m, base_simplex(m), max_radius, cap):
        hits = sorted(targets[s] for s in level if s in targets)
        if hits:
            return hits[0], depth
    raise CapExceeded("projection of the base simplex onto the axis not found in range")


def axis_segment(
    m: int,
    a: AxisDescription,
    window: int,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
) -> list[str]:
    """The 2*window+1 consecutive axis simplices centered at the projection of
    the base simplex, as canonical tags."""
    if window < 1:
        raise PreconditionError("axis_segment needs window >= 1")
    span = len(a.conjugator) + window + 2
    k0, _ = _project_to_axis(m, a, span, max_simplices)
    return [simplex_tag(axis_vertex(m, a, k)) for k in range(k0 - window, k0 + window + 1)]


# ---------------------------------------------------------------------------
# Classification of pairs of conjugates of standard generators.

@dataclass(frozen=True)
class PairClassification:
    kind: str  # "cyclic" | "free" | "full_dihedral"
    witness: Word | None = None
    common_axis_vertices: int = 0


_GENERATOR_WORDS = [generator(n, e) for n in ("s", "t") for e in (1, -1)]


def classify_pair(
    m: int,
    x: AxisDescription,
    y: AxisDescription,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
    _window_pad: int = 0,
) -> PairClassification:
    """Z / F2 / full-group trichotomy for two conjugates of standard generators.

    Cyclic iff the elements agree up to inversion.  Otherwise the axes decide:
    sharing an edge forces the pair to be simultaneously conjugate into the
    standard generators (witness returned and verified); meeting in at most
    one vertex certifies a free pair.
    """
    if m < 3:
        raise PreconditionError("classify_pair needs m >= 3")
    wx, wy = x.element(), y.element()
    if words_equal(m, wx, wy) or words_equal(m, wx, wy.inverse()):
        return PairClassification("cyclic")

    span = 2 * (len(x.conjugator) + len(y.conjugator)) + 4 + _window_pad
    for _attempt in range(4):
        ax: dict[Simplex, int] = {}
        ay: dict[Simplex, int] = {}
        for k in range(-span, span + 1):
            ax.setdefault(axis_vertex(m, x, k), k)
            ay.setdefault(axis_vertex(m, y, k), k)
        common = set(ax) & set(ay)
        boundary = any(abs(ax[s]) >= span or abs(ay[s]) >= span for s in common)
        if not boundary:
            break
        span *= 2
        if (2 * span + 1) * 2 > max_simplices:
            raise CapExceeded("classify_pair: axis window exceeded the resource cap")
    else:
        raise CapExceeded("classify_pair: axis intersection did not stabilise")

    if len(common) <= 1:
        return PairClassification("free", common_axis_vertices=len(common))

    # Find a shared edge: two common simplices sharing a coset.
    ordered = sorted(common, key=lambda s: (abs(ax[s]), simplex_tag(s)))
    for s1 in ordered:
        for s2 in ordered:
            if s1 is s2:
                continue
            shared = s1 & s2
            if shared:
                rep = _key_word(min(shared))
                w = rep.inverse()
                for v, name in ((wx, "x"), (wy, "y")):
                    conj = w * v * w.inverse()
                    if not any(words_equal(m, conj, gw) for gw in _GENERATOR_WORDS):
                        raise AssertionError(
                            f"witness verification failed for {name}; edge data inconsistent"
                        )
                return PairClassification(
                    "full_dihedral", witness=w, common_axis_vertices=len(common)
                )
    raise AssertionError("axes share >= 2 vertices but no edge; tree invariant violated")

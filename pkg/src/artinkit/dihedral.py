"""Exact computation in two-generator Artin groups.

The group with coefficient m >= 2 on generators s, t is presented by the
single relation  Pi(s,t;m) = Pi(t,s;m),  where Pi(x,y;k) is the alternating
product xyxy... with k factors.  Writing D for the image of the full
alternating word (the distinguished element of length m), every element has a
unique canonical form

    u_1 u_2 ... u_k * D^N        (k >= 0, N an integer)

where each u_i is a nonempty strictly alternating positive word of length at
most m-1 (a *simple* factor) and the last letter of u_i equals the first
letter of u_{i+1}.  Uniqueness pins the semantics: two input words represent
the same group element iff they produce identical (simples, N) data.

The algorithm is greedy factorisation on the left.  Simple factors form a
lattice between the identity and D in which positive words of length < m are
rigid, so a pair (x, y) of simple factors is reduced iff the junction letters
agree; otherwise x+y concatenates into a longer alternating word, spilling a
full D whenever the length reaches m.  D moved across a factor conjugates it,
which swaps the two letters when m is odd and fixes them when m is even.

An independent equality oracle is provided for cross-checking: an element is
determined by its exponent sum together with its image in the quotient by the
centre, which is the free product C2 * Cm (m odd, via x = image of the full
alternating word, y = image of st) or Z * C_{m/2} (m even, via x = s,
y = st).  Equality in those free products is decided by syllable reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, WordError
from .words import Word, alt_product, generator, parse_word

__all__ = [
    "GarsideNormalForm",
    "Distinguished",
    "alt_product",
    "garside_nf",
    "words_equal",
    "oracle_equal",
    "oracle_key",
    "distinguished",
    "delta_word",
    "alternating_equality",
    "alternating_equality_closed_form",
]

_OTHER = {"s": "t", "t": "s"}


def _check_alphabet(w: Word) -> None:
    bad = w.generator_names() - {"s", "t"}
    if bad:
        raise WordError(f"dihedral words use generators s, t only; got {sorted(bad)}")


def _alt_string(first: str, k: int) -> str:
    return "".join(first if i % 2 == 0 else _OTHER[first] for i in range(k))


def _alt_string_ending(last: str, k: int) -> str:
    return "".join(last if (k - 1 - i) % 2 == 0 else _OTHER[last] for i in range(k))


def _swap(word: str) -> str:
    return "".join(_OTHER[c] for c in word)


def _tau(word: str, m: int, power: int = 1) -> str:
    """Conjugation of a positive alternating word by D^power."""
    if m % 2 == 1 and power % 2 == 1:
        return _swap(word)
    return word


def delta_word(m: int) -> Word:
    """The full alternating word Pi(s,t;m) as a Word."""
    return Word((c, 1) for c in _alt_string("s", m))


@dataclass(frozen=True)
class GarsideNormalForm:
    """Canonical form: matching simple factors, then a power of D on the right."""

    m: int
    simples: tuple[str, ...]
    delta_power: int

    def __post_init__(self):
        for i, u in enumerate(self.simples):
            if not (1 <= len(u) <= self.m - 1):
                raise ValueError(f"simple factor {u!r} has bad length for m={self.m}")
            if any(u[j] == u[j + 1] for j in range(len(u) - 1)):
                raise ValueError(f"simple factor {u!r} is not alternating")
            if i > 0 and self.simples[i - 1][-1] != u[0]:
                raise ValueError("consecutive simple factors fail the matching condition")

    def word(self) -> Word:
        w = Word((c, 1) for u in self.simples for c in u)
        if self.delta_power:
            w = w * (delta_word(self.m) ** self.delta_power)
        return w

    def __str__(self) -> str:
        return f"[{'|'.join(self.simples)}] Δ^{self.delta_power}"


def _normalize(factors: list[str], m: int) -> tuple[int, list[str]]:
    """Left-greedy reduction of a sequence of alternating factors.

    Returns (p, fs) with the input product equal to D^p * fs and fs in
    normal form (matching junctions, all lengths in 1..m-1).
    """
    fs = [f for f in factors if f]
    power = 0
    i = 0
    while 0 <= i < len(fs) - 1:
        x, y = fs[i], fs[i + 1]
        if x[-1] == y[0]:
            i += 1
            continue
        merged = x + y
        if len(merged) < m:
            fs[i : i + 2] = [merged]
        else:
            rest = merged[m:]
            # x1..x_{i-1} * D * rest...  ==  D * tau(x1..x_{i-1}) * rest...
            fs[:i] = [_tau(f, m) for f in fs[:i]]
            fs[i : i + 2] = [rest] if rest else []
            power += 1
        i = max(i - 1, 0)
    return power, fs


def garside_nf(m: int, w: Word) -> GarsideNormalForm:
    """The unique canonical form of the element represented by w (m >= 3)."""
    if m < 3:
        raise PreconditionError("garside_nf needs m >= 3")
    _check_alphabet(w)

    # Sweep left to right, keeping the element as D^power * (positive word).
    # A letter g^-1 equals D^-1 * U with U the alternating word of length m-1
    # ending in the other letter, and pulling D^-1 leftwards conjugates the
    # positive prefix accumulated so far.
    power = 0
    letters: list[str] = []
    for name, sign in w:
        if sign == 1:
            letters.append(name)
        else:
            power -= 1
            if m % 2 == 1:
                letters = [_OTHER[c] for c in letters]
            letters.extend(_alt_string_ending(_OTHER[name], m - 1))

    extra, fs = _normalize(letters, m)
    power += extra
    # D^power * f1..fq == tau^power(f1)..tau^power(fq) * D^power.
    return GarsideNormalForm(m, tuple(_tau(f, m, power) for f in fs), power)


def words_equal(m: int, w1: Word, w2: Word) -> bool:
    """Exact word problem for the two-generator group with coefficient m >= 2."""
    _check_alphabet(w1)
    _check_alphabet(w2)
    if m < 2:
        raise PreconditionError("words_equal needs m >= 2")
    if m == 2:
        # Free abelian on s, t.
        def exps(w: Word) -> tuple[int, int]:
            es = sum(sign for name, sign in w if name == "s")
            et = sum(sign for name, sign in w if name == "t")
            return es, et

        return exps(w1) == exps(w2)
    nf1, nf2 = garside_nf(m, w1), garside_nf(m, w2)
    return (nf1.simples, nf1.delta_power) == (nf2.simples, nf2.delta_power)


# ---------------------------------------------------------------------------
# Independent oracle: exponent sum + image in the quotient by the centre.

def _quotient_images(m: int) -> tuple[dict[str, list[tuple[str, int]]], dict[str, int]]:
    if m % 2 == 1:
        # A_m is <x, y | x^2 = y^m> with x = Pi(s,t;m) and y = st; the centre
        # is <x^2> and the quotient is C2 * Cm.
        images = {
            "s": [("y", -(m - 1) // 2), ("x", 1)],
            "t": [("x", -1), ("y", (m + 1) // 2)],
        }
        orders = {"x": 2, "y": m}
    else:
        # A_m is <x, y | [x, y^{m/2}] = 1> with x = s and y = st; the centre
        # is <y^{m/2}> and the quotient is Z * C_{m/2}.
        images = {"s": [("x", 1)], "t": [("x", -1), ("y", 1)]}
        orders = {"x": 0, "y": m // 2}
    return images, orders


def _syllables(m: int, w: Word) -> tuple[tuple[str, int], ...]:
    images, orders = _quotient_images(m)
    stack: list[list] = []

    def push(sym: str, exp: int) -> None:
        if stack and stack[-1][0] == sym:
            exp += stack.pop()[1]
        order = orders[sym]
        if order:
            exp %= order
        if exp:
            stack.append([sym, exp])

    for name, sign in w:
        seq = images[name] if sign == 1 else [(s, -e) for s, e in reversed(images[name])]
        for sym, exp in seq:
            push(sym, exp)
    return tuple((s, e) for s, e in stack)


def oracle_key(m: int, w: Word) -> tuple[int, tuple[tuple[str, int], ...]]:
    """Complete invariant (exponent sum, central-quotient syllables) of pi(w)."""
    if m < 3:
        raise PreconditionError("oracle needs m >= 3")
    _check_alphabet(w)
    return (w.exponent_sum(), _syllables(m, w))


def oracle_equal(m: int, w1: Word, w2: Word) -> bool:
    """Decide equality by the two exact homomorphisms, independently of the normal form."""
    return oracle_key(m, w1) == oracle_key(m, w2)


# ---------------------------------------------------------------------------
# Distinguished elements.

@dataclass(frozen=True)
class Distinguished:
    delta: Word
    center: Word
    complement_s: Word
    complement_t: Word


def distinguished(m: int) -> Distinguished:
    """D, the generator of the centre, and the complements of s and t.

    The complements satisfy s * comp_s = D and t * comp_t = D; both identities
    are verified before returning.
    """
    if m < 2:
        raise PreconditionError("distinguished needs m >= 2")
    s, t = generator("s"), generator("t")
    delta = alt_product(s, t, m)
    center = delta if m % 2 == 0 else delta * delta
    comp_s = alt_product(t, s, m - 1)
    comp_t = alt_product(s, t, m - 1)
    if not words_equal(m, s * comp_s, delta) or not words_equal(m, t * comp_t, delta):
        raise AssertionError(f"complement identity failed for m={m}")
    return Distinguished(delta, center, comp_s, comp_t)


# ---------------------------------------------------------------------------
# Alternating-product equality.

def alternating_equality(m_st: int, m: int, ell: int, k: int) -> bool:
    """Whether Pi(s^m, t^ell; k) equals Pi(t^ell, s^m; k), decided at word level."""
    if m_st < 3:
        raise PreconditionError("alternating_equality needs m_st >= 3")
    if m == 0 or ell == 0:
        raise PreconditionError("m and ell must be nonzero")
    if k <= 1:
        raise PreconditionError("k must exceed 1")
    x = generator("s") ** m
    y = generator("t") ** ell
    return words_equal(m_st, alt_product(x, y, k), alt_product(y, x, k))


def alternating_equality_closed_form(m_st: int, m: int, ell: int, k: int) -> bool:
    """The closed-form criterion: m = ell = +-1 and m_st divides k."""
    return m == ell and abs(m) == 1 and k % m_st == 0


def parse_dihedral_word(text: str) -> Word:
    w = parse_word(text)
    _check_alphabet(w)
    return w

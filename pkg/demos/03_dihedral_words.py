"""The word problem in two-generator groups, exactly.

Every element has a unique canonical form: matching simple factors followed
by a power of the full alternating word.  A second, independent route decides
equality through the exponent sum and the image in the quotient by the
centre; the two never disagree.
"""

from artinkit import (
    alternating_equality,
    alternating_equality_closed_form,
    distinguished,
    garside_nf,
    oracle_equal,
    parse_word,
    words_equal,
)

P = parse_word

print("== canonical forms at m=3 ==")
for text in ["s t s", "s", "s^-1", "s t", "s t t s t t"]:
    print(f"  {text:12} ->  {garside_nf(3, P(text))}")

print("\n== the defining relation, both routes ==")
print("  words_equal(3, sts, tst):", words_equal(3, P("s t s"), P("t s t")))
print("  oracle_equal(3, sts, tst):", oracle_equal(3, P("s t s"), P("t s t")))
print("  words_equal(3, st, ts):  ", words_equal(3, P("s t"), P("t s")))

print("\n== distinguished elements ==")
for m in (3, 4):
    d = distinguished(m)
    print(f"  m={m}: delta = {d.delta}, centre = {d.center}, "
          f"complement of s = {d.complement_s}")

print("\n== alternating-product equality ==")
print("  Pi(s,t;6) = Pi(t,s;6) at m=3:", alternating_equality(3, 1, 1, 6))
print("  Pi(s,t;4) = Pi(t,s;4) at m=3:", alternating_equality(3, 1, 1, 4))
print("  Pi(s^2,t;3) = Pi(t,s^2;3) at m=3:", alternating_equality(3, 2, 1, 3))

print("\n== where the simple closed form breaks ==")
# s t^2 s t^2 equals (s t)^3, the square of the distinguished element, which
# is central at m=3; so the two alternating products coincide even though the
# exponents are not +-1.
got = alternating_equality(3, 1, 2, 4)
closed = alternating_equality_closed_form(3, 1, 2, 4)
print(f"  word level: {got}, closed form: {closed}")
print("  (s t^2 s t^2 equals the central (s t)^3 =",
      words_equal(3, P("s t t s t t"), P("s t s t s t")), ")")

"""Tour of the bit-packed GF(2)[x] value type.

Polynomials live in a single integer: bit i is the coefficient of x^i.
Addition is XOR, so every element is its own negative, and squaring just
spreads the bits apart.
"""

from gf2bup import Gf2Poly, NEG_INF, ONE, X, X1, ZERO, divrem, gcd, parse

p = parse("x^2+x+1")
q = parse("x^2+1")

print("p          =", p, " (hex", p.to_string("hex"), ")")
print("q          =", q)
print("p + q      =", p + q, "   # characteristic 2: the x^2 terms cancel")
print("p * q      =", p * q)
print("(x+1)^2    =", X1 ** 2, "   # Frobenius: squaring spreads bits")
print("p + p      =", p + p)

print()
print("Division with remainder:")
n = parse("x^5+x^3+x+1")
d = parse("x^2+x")
quot, rem = divrem(n, d)
print(f"  {n} = ({d})*({quot}) + {rem}")
assert d * quot + rem == n

print()
print("gcds and the degree sentinel:")
print("  gcd(x^2+x, x)  =", gcd(parse("x^2+x"), X))
print("  deg(0)         =", ZERO.degree, " (NEG_INF, never a real degree)")
print("  deg(1)         =", ONE.degree)
assert ZERO.degree == NEG_INF

print()
print("Conjugation (x -> x+1) and reciprocals (coefficient reversal):")
m2 = parse("x^3+x+1")
print("  conj(x^3+x+1)  =", m2.conjugate())
print("  recip(x^3+x+1) =", m2.reciprocal())
print("  conj is an involution:", m2.conjugate().conjugate() == m2)

print()
print("Parsing accepts factored input and hex, and round-trips:")
c1 = parse("x^3*(x+1)^4*(x^2+x+1)")
print("  C1  =", c1)
print("  hex =", c1.to_string("hex"))
assert parse(c1.to_string("hex")) == c1
assert Gf2Poly(c1.to_string()) == c1

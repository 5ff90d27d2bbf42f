"""The three divisor sums and their interplay.

sigma sums every divisor, sigma* only unitary divisors, sigma** only
bi-unitary divisors.  The bi-unitary sum has closed forms on prime powers;
a brute-force walk of the divisor lattice confirms them.
"""

from gf2bup import (
    ZERO, biunitary_divisors, factorize, gcd_unitary, parse,
    sigma, sigma_2star, sigma_star,
)

p = parse("x^4")
print("s = x^4")
print("  sigma   (all divisors)        =", factorize(sigma(p)))
print("  sigma*  (unitary divisors)    =", factorize(sigma_star(p)))
print("  sigma** (bi-unitary divisors) =", factorize(sigma_2star(p)))

print()
print("Unitary gcd on prime powers keeps only equal exponents:")
print("  gcd_u(x^3, x^3) =", gcd_unitary(parse("x^3"), parse("x^3")))
print("  gcd_u(x^3, x^5) =", gcd_unitary(parse("x^3"), parse("x^5")))

print()
print("Bi-unitary divisors of x^4 (x^2 is excluded: gcd_u(x^2, x^2) = x^2):")
divisors = biunitary_divisors(p)
print(" ", [str(d) for d in divisors])
total = ZERO
for d in divisors:
    total = total + d
assert total == sigma_2star(p)
print("  their sum reproduces sigma**(x^4):", total == sigma_2star(p))

print()
print("A fixpoint of sigma** is called bi-unitary perfect:")
for text in ["x*(x+1)", "x^2*(x+1)^2", "x*(x+1)^2", "x^3*(x+1)^4*(x^2+x+1)"]:
    s = parse(text)
    print(f"  sigma**({text}) = {factorize(sigma_2star(s))}"
          f"   fixpoint={sigma_2star(s) == s}")

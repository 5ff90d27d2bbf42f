"""Mersenne polynomials over GF(2): 1 + x^a (x+1)^b with gcd(a, b) = 1.

A Mersenne prime is an irreducible Mersenne polynomial.  Exactly five have
degree at most 4; they are the distinguished set M1..M5 that carries the
whole bi-unitary search.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as _int_gcd

from .factor import _split_even_part, is_irreducible
from .gf2poly import Gf2Poly, _int_of, _mul, _pow

__all__ = [
    "MersenneForm",
    "mersenne_poly", "is_mersenne_prime", "enumerate_mersenne_primes",
    "in_M5_set",
    "M1", "M2", "M3", "M4", "M5", "M_SET",
]


@dataclass(frozen=True)
class MersenneForm:
    """Exponent pair (a, b) denoting 1 + x^a (x+1)^b, gcd(a, b) = 1."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("exponents must be positive")
        if _int_gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd({self.a}, {self.b}) != 1")

    @property
    def degree(self):
        return self.a + self.b


def mersenne_poly(form):
    """Expand 1 + x^a (x+1)^b."""
    return Gf2Poly(_mul(1 << form.a, _pow(3, form.b)) ^ 1)


def is_mersenne_prime(p):
    """The MersenneForm of p when p is a Mersenne prime, else None."""
    n = _int_of(p)
    if n == 0:
        raise ValueError("the zero polynomial is not classifiable")
    if n.bit_length() < 3:  # minimum Mersenne degree is 2
        return None
    a, b, odd = _split_even_part(n ^ 1)
    if odd != 1 or a < 1 or b < 1 or _int_gcd(a, b) != 1:
        return None
    if not is_irreducible(n):
        return None
    return MersenneForm(a, b)


def enumerate_mersenne_primes(max_degree):
    """All Mersenne primes of degree <= max_degree, ordered by (degree, a)."""
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    out = []
    for degree in range(2, max_degree + 1):
        for a in range(1, degree):
            b = degree - a
            if _int_gcd(a, b) != 1:
                continue
            p = _mul(1 << a, _pow(3, b)) ^ 1
            if is_irreducible(p):
                out.append((MersenneForm(a, b), Gf2Poly(p)))
    return out


M1 = Gf2Poly("x^2+x+1")
M2 = Gf2Poly("x^3+x+1")
M3 = Gf2Poly("x^3+x^2+1")
M4 = Gf2Poly("x^4+x^3+x^2+x+1")
M5 = Gf2Poly("x^4+x^3+1")
M_SET = (M1, M2, M3, M4, M5)

_M_INDEX = {p.value: i + 1 for i, p in enumerate(M_SET)}


def in_M5_set(p):
    """Index 1..5 when p is one of M1..M5, else None."""
    return _M_INDEX.get(_int_of(p))

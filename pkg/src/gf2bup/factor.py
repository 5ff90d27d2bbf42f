"""Irreducibility testing and complete factorization over GF(2).

The pipeline is square-free decomposition (formal derivative plus repeated
square roots), distinct-degree splitting driven by the Frobenius map
x -> x^2, and Cantor-Zassenhaus equal-degree splitting with random trace
polynomials.  The randomness comes from a generator instantiated per call
and seeded deterministically, and factors are returned in canonical order
(ascending degree, then ascending value), so output never depends on the
seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache, reduce

from .gf2poly import (
    Gf2Poly, _deg, _derivative, _divmod, _gcd, _int_of, _mod, _mul, _pow,
    _sqmod, _sqrt,
)

__all__ = [
    "Factorization",
    "factorize", "is_irreducible", "omega", "is_odd", "is_squarefree",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 0x5EED
_SEED_MIX = 0x9E3779B97F4A7C15


def _split_even_part(n):
    """Write n = x^a (x+1)^b * odd and return (a, b, odd)."""
    a = (n & -n).bit_length() - 1
    n >>= a
    b = 0
    while n > 1 and n.bit_count() & 1 == 0:  # n(1) = 0 iff even bit count
        n, _ = _divmod(n, 3)
        b += 1
    return a, b, n


def _prime_divisors(m):
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _sff(f):
    """Square-free decomposition: pairwise coprime (g, m) with f = prod g^m."""
    out = []
    d = _derivative(f)
    if d == 0:
        for g, m in _sff(_sqrt(f)):
            out.append((g, 2 * m))
        return out
    c = _gcd(f, d)
    w, _ = _divmod(f, c)
    i = 1
    while w != 1:
        y = _gcd(w, c)
        z, _ = _divmod(w, y)
        if z != 1:
            out.append((z, i))
        w = y
        c, _ = _divmod(c, y)
        i += 1
    if c != 1:
        for g, m in _sff(_sqrt(c)):
            out.append((g, 2 * m))
    return out


def _ddf(f):
    """Distinct-degree split of a square-free f: (product, degree) pairs."""
    out = []
    w = _mod(2, f)
    d = 0
    while f != 1 and _deg(f) >= 2 * (d + 1):
        d += 1
        w = _sqmod(w, f)
        g = _gcd(f, w ^ 2)  # gcd(f, x^(2^d) - x)
        if g != 1:
            out.append((g, d))
            f, _ = _divmod(f, g)
            w = _mod(w, f)
    if f != 1:
        out.append((f, _deg(f)))
    return out


def _edf(f, d, rng):
    """Split f, a product of >= 2 distinct irreducibles of degree d."""
    n = _deg(f)
    if n == d:
        return [f]
    while True:
        t = rng.getrandbits(n)
        if t < 2:
            continue
        tr = t
        s = t
        for _ in range(d - 1):
            s = _sqmod(s, f)
            tr ^= s
        tr = _mod(tr, f)
        g = _gcd(f, tr)
        if g == 1 or g == f:
            g = _gcd(f, tr ^ 1)
        if g != 1 and g != f:
            q, _ = _divmod(f, g)
            return _edf(g, d, rng) + _edf(q, d, rng)


def _factorize_int(n, seed):
    counts = {}
    a, b, n = _split_even_part(n)
    if a:
        counts[2] = a
    if b:
        counts[3] = b
    if n > 1:
        rng = random.Random(seed * _SEED_MIX + n)
        for part, mult in _sff(n):
            for prod, d in _ddf(part):
                if _deg(prod) == d:
                    counts[prod] = counts.get(prod, 0) + mult
                else:
                    for p in _edf(prod, d, rng):
                        counts[p] = counts.get(p, 0) + mult
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=1 << 18)
def _factorize_cached(n):
    return _factorize_int(n, DEFAULT_SEED)


@dataclass(frozen=True)
class Factorization:
    """Canonically ordered multiset of (irreducible, exponent) pairs."""

    factors: tuple  # of (Gf2Poly, int)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def product(self):
        """Multiply the prime powers back together."""
        n = reduce(_mul, (_pow(p.value, e) for p, e in self.factors), 1)
        return Gf2Poly(n)

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for p, e in self.factors:
            base = str(p)
            if "+" in base:
                base = f"({base})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)


def factorize(p, seed=None):
    """Complete factorization of a nonzero polynomial.

    The optional seed only steers the internal equal-degree splitting;
    the result is the same for every seed.
    """
    n = _int_of(p)
    if n == 0:
        raise ValueError("cannot factor the zero polynomial")
    if seed is None:
        pairs = _factorize_cached(n)
    else:
        pairs = _factorize_int(n, seed)
    return Factorization(tuple((Gf2Poly(q), e) for q, e in pairs))


def is_irreducible(p):
    """True iff p has no nonconstant proper divisor; p must be nonconstant.

    Uses the Frobenius criterion: x^(2^n) = x mod p together with
    gcd(x^(2^(n/q)) - x, p) = 1 for every prime q dividing n = deg p.
    """
    n = _int_of(p)
    deg = _deg(n)
    if deg < 1:
        raise ValueError("irreducibility is undefined for constants")
    if deg == 1:
        return True
    w = 2
    for _ in range(deg):
        w = _sqmod(w, n)
    if w != 2:
        return False
    for q in _prime_divisors(deg):
        w = 2
        for _ in range(deg // q):
            w = _sqmod(w, n)
        if _gcd(w ^ 2, n) != 1:
            return False
    return True


def omega(p):
    """Number of distinct irreducible factors; omega(1) = 0."""
    n = _int_of(p)
    if n == 0:
        raise ValueError("omega is undefined for the zero polynomial")
    return len(_factorize_cached(n))


def is_odd(p):
    """True iff gcd(p, x(x+1)) = 1, i.e. neither x nor x+1 divides p."""
    n = _int_of(p)
    if n == 0:
        raise ValueError("parity is undefined for the zero polynomial")
    return bool(n & 1) and bool(n.bit_count() & 1)


def is_squarefree(p):
    """True iff no irreducible factor repeats (derivative criterion)."""
    n = _int_of(p)
    if n == 0:
        raise ValueError("square-freeness is undefined for the zero polynomial")
    d = _derivative(n)
    if d == 0:
        return n == 1  # nonconstant with zero derivative is a perfect square
    return _gcd(n, d) == 1

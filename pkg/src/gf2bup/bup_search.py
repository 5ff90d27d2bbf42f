"""Exhaustive certified search for bi-unitary perfect polynomials over GF(2)
whose odd prime divisors all lie in the Mersenne set M1..M5.

The search enumerates exponent tuples (a, b, h1..h5) for candidates
x^a (x+1)^b M1^h1 ... M5^h5 within lemma-derived bounds, case-split by the
parities of a and b with a <= b (the a > b side is recovered afterwards by
the substitution x <-> x+1).  The bounds are deliberately a superset of the
minimal ones: every emitted tuple is verified against the sigma** fixpoint
equation, so over-enumeration cannot create false positives.

Verification compares factored forms.  sigma** of each prime power is
factored once and memoized; a candidate is a fixpoint iff the summed factor
exponents reproduce its own exponent tuple.  Any prime power whose sigma**
contains an irreducible outside the seven supported primes can never occur
in a fixpoint (multiplication cannot cancel factors), so such components
fail fast.  A debug mode (force_expand) instead expands each candidate and
tests sigma** on the expanded polynomial.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Optional

from .divisor_sums import _sigma2star_pp_int, sigma_2star
from .factor import Factorization, _factorize_cached, _split_even_part
from .gf2poly import Gf2Poly, _conj, _int_of, _mul, _pow
from .mersenne import M1, M2, M3, M4, M5

__all__ = [
    "CASES", "K1", "K2",
    "CandidateTuple", "BupRecord", "CaseSearchResult",
    "catalog", "is_bup", "is_indecomposable_bup", "reduction_check",
    "candidate_tuples", "run_search", "search_case",
    "exhaustive_low_degree_scan", "verify_catalog",
    "EXPECTED_HITS_BY_CASE", "expected_hit_values",
]

CASES = ("even-even", "even-odd", "odd-even", "odd-odd")

# Exponent sets from the reduction lemmas bounding the search space.
K1 = (0, 1, 2, 3, 4, 5, 6, 7, 11, 23)
K2 = (0, 1, 2, 3, 4, 6, 7, 15)
_H145_EVEN_EVEN = (0, 1, 2, 3, 7)
_H145_MIXED = (0, 1, 2, 3, 7, 15)
_EVEN_EXPONENTS = tuple(range(0, 15, 2))
# odd exponents of the form 2^beta * v - 1 with beta <= 3 and v in {1,3,5,7}
_ODD_EXPONENTS = tuple(sorted(
    {(1 << beta) * v - 1 for beta in (1, 2, 3) for v in (1, 3, 5, 7)}))

# Support primes, in slot order (x, x+1, M1..M5).
_SUPPORT = (2, 3, M1.value, M2.value, M3.value, M4.value, M5.value)
_SUPPORT_INDEX = {base: i for i, base in enumerate(_SUPPORT)}


@dataclass(frozen=True)
class CandidateTuple:
    """Search-space point x^a (x+1)^b M1^h[0] ... M5^h[4]."""

    a: int
    b: int
    h: tuple

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("exponents must be nonnegative")
        if len(self.h) != 5 or any(e < 0 for e in self.h):
            raise ValueError("h must be five nonnegative exponents")
        if self.h[1] != self.h[2]:
            raise ValueError("the M2 and M3 exponents must be equal")

    def exponents(self):
        """The 7-tuple (a, b, h1..h5) over the support primes."""
        return (self.a, self.b) + tuple(self.h)

    def expand(self):
        n = 1
        for base, e in zip(_SUPPORT, self.exponents()):
            if e:
                n = _mul(n, _pow(base, e))
        return Gf2Poly(n)

    def conjugate(self):
        """Tuple of the conjugate polynomial (swap a/b, M2/M3, M4/M5)."""
        h = self.h
        return CandidateTuple(self.b, self.a, (h[0], h[2], h[1], h[4], h[3]))


@dataclass(frozen=True)
class BupRecord:
    """A certified bi-unitary perfect polynomial."""

    poly: Gf2Poly
    factorization: Factorization
    candidate: Optional[CandidateTuple]
    case_tag: str
    conjugate_class: str
    catalog_index: Optional[int]


@dataclass(frozen=True)
class CaseSearchResult:
    case_tag: str
    records: tuple
    candidate_count: int
    seconds: float


# The 23 catalog polynomials C1..C23 as (a, b, (h1..h5)).
_CATALOG_TUPLES = (
    (3, 4, (1, 0, 0, 0, 0)),
    (3, 5, (2, 0, 0, 0, 0)),
    (4, 4, (2, 0, 0, 0, 0)),
    (6, 6, (2, 0, 0, 0, 0)),
    (4, 5, (3, 0, 0, 0, 0)),
    (7, 8, (0, 0, 0, 0, 1)),
    (7, 9, (0, 0, 0, 0, 2)),
    (8, 8, (0, 0, 0, 1, 1)),
    (8, 9, (0, 0, 0, 1, 2)),
    (7, 10, (2, 0, 0, 0, 1)),
    (7, 13, (0, 2, 2, 0, 0)),
    (9, 9, (0, 0, 0, 2, 2)),
    (14, 14, (0, 2, 2, 0, 0)),
    (8, 10, (2, 0, 0, 1, 1)),
    (8, 12, (2, 1, 1, 1, 0)),
    (10, 13, (2, 2, 2, 1, 0)),
    (13, 13, (2, 4, 4, 1, 1)),
    (12, 13, (2, 3, 3, 0, 0)),
    (9, 13, (0, 2, 2, 2, 0)),
    (8, 13, (0, 2, 2, 1, 0)),
    (9, 10, (2, 0, 0, 2, 1)),
    (7, 12, (2, 1, 1, 0, 0)),
    (9, 12, (2, 1, 1, 2, 0)),
)

# Catalog members discovered by each search case (a <= b normalization).
EXPECTED_HITS_BY_CASE = {
    "even-even": (3, 4, 8, 13, 14, 15),
    "even-odd": (5, 9, 16, 18, 20),
    "odd-even": (1, 6, 10, 21, 22, 23),
    "odd-odd": (2, 7, 11, 12, 17, 19),
}


@lru_cache(maxsize=1)
def _catalog_value_index():
    return {
        CandidateTuple(a, b, h).expand().value: i + 1
        for i, (a, b, h) in enumerate(_CATALOG_TUPLES)
    }


def _class_id(n):
    index = _catalog_value_index()
    i = index.get(n)
    if i is None:
        i = index.get(_conj(n))
    return f"C{i}" if i is not None else hex(min(n, _conj(n)))


def _parity_tag(a, b):
    return f"{'even' if a % 2 == 0 else 'odd'}-{'even' if b % 2 == 0 else 'odd'}"


def _candidate_from_pairs(pairs):
    exps = [0] * 7
    for base, e in pairs:
        slot = _SUPPORT_INDEX.get(base)
        if slot is None:
            return None
        exps[slot] = e
    if exps[3] != exps[4]:
        return None
    return CandidateTuple(exps[0], exps[1], tuple(exps[2:]))


def _record_from_int(n, case_tag, candidate=None):
    pairs = _factorize_cached(n)
    fac = Factorization(tuple((Gf2Poly(q), e) for q, e in pairs))
    if candidate is None:
        candidate = _candidate_from_pairs(pairs)
    return BupRecord(
        poly=Gf2Poly(n),
        factorization=fac,
        candidate=candidate,
        case_tag=case_tag,
        conjugate_class=_class_id(n),
        catalog_index=_catalog_value_index().get(n),
    )


def catalog():
    """The 23 catalog polynomials as records, in catalog order."""
    out = []
    for i, (a, b, h) in enumerate(_CATALOG_TUPLES):
        ct = CandidateTuple(a, b, h)
        rec = _record_from_int(ct.expand().value, _parity_tag(a, b), ct)
        assert rec.catalog_index == i + 1
        out.append(rec)
    return out


# ---------------------------------------------------------------------------
# fixpoint predicates

def _sigma2star_int(n):
    a, b, odd = _split_even_part(n)
    r = _sigma2star_pp_int(2, a) if a else 1
    if b:
        r = _mul(r, _sigma2star_pp_int(3, b))
    if odd > 1:
        for base, exp in _factorize_cached(odd):
            r = _mul(r, _sigma2star_pp_int(base, exp))
    return r


def is_bup(s):
    """True iff sigma**(s) = s."""
    n = _int_of(s)
    if n == 0:
        raise ValueError("bi-unitary perfection is undefined for zero")
    return _sigma2star_int(n) == n


def is_indecomposable_bup(s):
    """True iff no coprime bipartition of s has both parts bi-unitary perfect.

    Checked by enumerating subsets of the distinct prime divisors; the
    argument must itself be bi-unitary perfect.
    """
    n = _int_of(s)
    if n == 0 or not is_bup(s):
        raise ValueError("argument must be bi-unitary perfect")
    pairs = _factorize_cached(n)
    k = len(pairs)
    if k < 2:
        return True
    powers = [_pow(base, e) for base, e in pairs]
    for mask in range(1, 1 << (k - 1)):  # last prime pinned to the second part
        s1 = 1
        s2 = 1
        for i in range(k):
            if (mask >> i) & 1:
                s1 = _mul(s1, powers[i])
            else:
                s2 = _mul(s2, powers[i])
        if _sigma2star_int(s1) == s1 and _sigma2star_int(s2) == s2:
            return False
    return True


def reduction_check(s):
    """True iff every odd prime factor of the given fixpoint lies in M1..M5."""
    n = _int_of(s)
    if n == 0 or not is_bup(s):
        raise ValueError("argument must be bi-unitary perfect")
    return all(base in _SUPPORT_INDEX for base, _ in _factorize_cached(n))


# ---------------------------------------------------------------------------
# candidate generation

def _even_even_tuples():
    # a, b even, 2 <= a <= b <= 14; h2 = h3 in K1; h1, h4, h5 in {0,1,2,3,7}.
    # This mirrors the published Maple sets exactly: 28 * 10 * 125 = 35000.
    for a in range(2, 15, 2):
        for b in range(a, 15, 2):
            for h1 in _H145_EVEN_EVEN:
                for h2 in K1:
                    for h4 in _H145_EVEN_EVEN:
                        for h5 in _H145_EVEN_EVEN:
                            yield CandidateTuple(a, b, (h1, h2, h2, h4, h5))


def _mixed_tuples(a_values, b_values):
    # h2 = h3 ranges over all of K1: the narrower printed set {0,2,4,6}
    # would miss the catalog hits with odd M2-exponents (1 and 3).
    for a in a_values:
        for b in b_values:
            if a > b:
                continue
            for h1 in _H145_MIXED:
                for h2 in K1:
                    for h4 in _H145_MIXED:
                        for h5 in _H145_MIXED:
                            yield CandidateTuple(a, b, (h1, h2, h2, h4, h5))


def _odd_odd_tuples():
    # a = 2^alpha*u - 1, b = 2^beta*v - 1 with u, v in {1,3,5,7} and
    # alpha, beta <= 3; h2 = h3 forced to 0 unless u = 7 or v = 7.
    for a in _ODD_EXPONENTS:
        u = (a + 1) >> (((a + 1) & -(a + 1)).bit_length() - 1)
        for b in _ODD_EXPONENTS:
            if b < a:
                continue
            v = (b + 1) >> (((b + 1) & -(b + 1)).bit_length() - 1)
            if u == 1 and v == 1 and a == b:
                continue
            h2_values = K2 if (u == 7 or v == 7) else (0,)
            for h1 in K2:
                for h2 in h2_values:
                    for h4 in K2:
                        for h5 in K2:
                            yield CandidateTuple(a, b, (h1, h2, h2, h4, h5))


def candidate_tuples(case_tag):
    """Lexicographically ordered candidate stream for one search case."""
    if case_tag == "even-even":
        return _even_even_tuples()
    if case_tag == "even-odd":
        return _mixed_tuples(_EVEN_EXPONENTS, _ODD_EXPONENTS)
    if case_tag == "odd-even":
        return _mixed_tuples(_ODD_EXPONENTS, _EVEN_EXPONENTS)
    if case_tag == "odd-odd":
        return _odd_odd_tuples()
    raise ValueError(f"unknown case {case_tag!r}")


# ---------------------------------------------------------------------------
# verification

@lru_cache(maxsize=None)
def _support_vector(base, exp):
    """Factor exponents of sigma**(base^exp) over the seven support primes.

    None when sigma** contains an irreducible outside the support: no
    candidate containing that prime power can be a fixpoint.
    """
    if exp == 0:
        return (0,) * 7
    vec = [0] * 7
    for q, e in _factorize_cached(_sigma2star_pp_int(base, exp)):
        slot = _SUPPORT_INDEX.get(q)
        if slot is None:
            return None
        vec[slot] = e
    return tuple(vec)


def _scan_chunk(case_tag, lo, hi, force_expand):
    """Verify a slice of a candidate stream; returns (count, hit tuples)."""
    stream = candidate_tuples(case_tag)
    if lo is not None or hi is not None:
        stream = islice(stream, lo, hi)
    memo = {}
    seen = 0
    hits = []
    for ct in stream:
        seen += 1
        h1, h2, h3, h4, h5 = ct.h
        if not (h1 or h2 or h4 or h5):
            continue  # pure x^a(x+1)^b: the omega <= 2 families, out of scope
        a = ct.a
        b = ct.b
        if force_expand:
            if is_bup(ct.expand()):
                hits.append((a, b, ct.h))
            continue
        t0 = t1 = t2 = t3 = t4 = t5 = t6 = 0
        ok = True
        for base, e in ((2, a), (3, b), (7, h1), (11, h2), (13, h3),
                        (31, h4), (25, h5)):
            if not e:
                continue
            try:
                v = memo[base, e]
            except KeyError:
                v = memo[base, e] = _support_vector(base, e)
            if v is None:
                ok = False
                break
            t0 += v[0]; t1 += v[1]; t2 += v[2]; t3 += v[3]
            t4 += v[4]; t5 += v[5]; t6 += v[6]
        if ok and (t0, t1, t2, t3, t4, t5, t6) == (a, b, h1, h2, h3, h4, h5):
            hits.append((a, b, ct.h))
    return seen, hits


def _scan_chunk_star(args):
    return _scan_chunk(*args)


def _finalize(case_tag, hit_tuples):
    by_value = {}
    for a, b, h in hit_tuples:
        ct = CandidateTuple(a, b, tuple(h))
        by_value.setdefault(ct.expand().value, ct)
        cj = ct.conjugate()
        by_value.setdefault(cj.expand().value, cj)
    records = []
    for n in sorted(by_value):
        rec = _record_from_int(n, case_tag, by_value[n])
        if len(rec.factorization) >= 3:
            records.append(rec)
    return tuple(records)


def search_case(case_tag, workers=1, force_expand=False):
    """Run one case; records are deduplicated, conjugate-closed and sorted."""
    if case_tag not in CASES:
        raise ValueError(f"unknown case {case_tag!r}")
    start = time.perf_counter()
    if workers <= 1:
        seen, hits = _scan_chunk(case_tag, None, None, force_expand)
    else:
        total = sum(1 for _ in candidate_tuples(case_tag))
        step = -(-total // workers)
        chunks = [(case_tag, lo, min(lo + step, total), force_expand)
                  for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk_star, chunks))
        seen = sum(count for count, _ in parts)
        hits = [t for _, part in parts for t in part]
    records = _finalize(case_tag, hits)
    return CaseSearchResult(case_tag, records, seen, time.perf_counter() - start)


def run_search(case_tag="all", workers=1, force_expand=False):
    """Search one case or all four; returns certified records with omega >= 3,
    conjugate-closed and canonically ordered."""
    cases = CASES if case_tag == "all" else (case_tag,)
    by_value = {}
    for case in cases:
        for rec in search_case(case, workers, force_expand).records:
            by_value.setdefault(rec.poly.value, rec)
    return [by_value[n] for n in sorted(by_value)]


def expected_hit_values(case_tag="all"):
    """Conjugate closure of the catalog subset each case is expected to hit."""
    cases = CASES if case_tag == "all" else (case_tag,)
    values = set()
    for case in cases:
        for i in EXPECTED_HITS_BY_CASE[case]:
            a, b, h = _CATALOG_TUPLES[i - 1]
            ct = CandidateTuple(a, b, h)
            values.add(ct.expand().value)
            values.add(ct.conjugate().expand().value)
    return frozenset(values)


# ---------------------------------------------------------------------------
# brute-force oracle and catalog verification

def exhaustive_low_degree_scan(max_degree):
    """Every sigma** fixpoint among all nonzero polynomials of degree
    <= max_degree, with no Mersenne-only restriction.  Capped at 20."""
    if not 1 <= max_degree <= 20:
        raise ValueError("max_degree must be between 1 and 20")
    hits = []
    for n in range(1, 1 << (max_degree + 1)):
        if _sigma2star_int(n) == n:
            hits.append(n)
    out = []
    for n in hits:
        a, b, _ = _split_even_part(n)
        out.append(_record_from_int(n, _parity_tag(a, b)))
    return out


def verify_catalog(records=None):
    """Check every catalog entry and its conjugate: sigma** fixpoint,
    divisibility by x(x+1), Mersenne-only odd part, indecomposability.

    Returns (name, passed, factored string) triples in catalog order.
    """
    if records is None:
        records = catalog()
    results = []
    for rec in records:
        ok = True
        for poly in (rec.poly, rec.poly.conjugate()):
            n = poly.value
            if sigma_2star(poly) != poly:
                ok = False
                break
            if (n & 1) or (n.bit_count() & 1):  # x and x+1 must both divide
                ok = False
                break
            if not reduction_check(poly):
                ok = False
                break
            if not is_indecomposable_bup(poly):
                ok = False
                break
        name = f"C{rec.catalog_index}" if rec.catalog_index else rec.conjugate_class
        results.append((name, ok, str(rec.factorization)))
    return results

"""Dense bit-packed polynomials over GF(2).

A polynomial c0 + c1*x + ... + cn*x^n is stored as the integer with bit i
equal to ci, so addition is XOR, the zero polynomial is the integer 0, and
comparing integers compares polynomials by degree first.  All values are
immutable and every operation returns a fresh value, so they can be shared
freely between threads or processes.
"""

from __future__ import annotations

__all__ = [
    "Gf2Poly", "ParseError", "NEG_INF",
    "add", "mul", "divrem", "gcd", "power", "conjugate", "reciprocal",
    "parse", "format_poly",
    "ZERO", "ONE", "X", "X1",
]

# Degree of the zero polynomial.  A distinguished sentinel, never -1, so
# that arithmetic on it cannot be confused with degree 0.
NEG_INF = float("-inf")

# Parsing refuses to expand anything beyond this degree.
_MAX_PARSE_DEGREE = 1 << 20


# ---------------------------------------------------------------------------
# integer-level kernels (bit i of n = coefficient of x^i)

def _deg(n):
    return n.bit_length() - 1


def _mul(a, b):
    """Carry-less product: schoolbook shift-and-xor over the set bits of b."""
    if a == 0 or b == 0:
        return 0
    if a.bit_count() < b.bit_count():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


# Byte tables for squaring (interleave zero bits) and its inverse.
_SQ8 = [0] * 256
for _v in range(256):
    _w = 0
    for _i in range(8):
        if (_v >> _i) & 1:
            _w |= 1 << (2 * _i)
    _SQ8[_v] = _w
_SQRT8 = [0] * 256
for _v in range(256):
    _w = 0
    for _i in range(4):
        if (_v >> (2 * _i)) & 1:
            _w |= 1 << _i
    _SQRT8[_v] = _w
del _v, _w, _i


def _sq(a):
    """Square: in characteristic 2 this just spreads the bits apart."""
    r = 0
    shift = 0
    while a:
        r |= _SQ8[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return r


def _sqrt(a):
    """Inverse of _sq; only valid when a is a perfect square (even bits only)."""
    r = 0
    shift = 0
    while a:
        r |= _SQRT8[a & 0xFF] << shift
        a >>= 8
        shift += 4
    return r


def _divmod(a, b):
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    da = a.bit_length()
    while da >= db:
        shift = da - db
        q |= 1 << shift
        a ^= b << shift
        da = a.bit_length()
    return q, a


def _mod(a, b):
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length()
    return a


def _gcd(a, b):
    while b:
        a, b = b, _mod(a, b)
    return a


def _pow(a, n):
    r = 1
    while n:
        if n & 1:
            r = _mul(r, a)
        a = _mul(a, a)
        n >>= 1
    return r


def _sqmod(a, m):
    return _mod(_sq(a), m)


def _derivative(n):
    # In characteristic 2 only the odd-position coefficients survive.
    n >>= 1
    k = n.bit_length()
    mask = ((1 << (k + (k & 1))) - 1) // 3  # 0b...0101
    return n & mask


def _conj(n):
    """Substitute x -> x+1 (Horner: r <- r*(x+1) + bit)."""
    r = 0
    for i in range(n.bit_length() - 1, -1, -1):
        r = (r << 1) ^ r ^ ((n >> i) & 1)
    return r


def _recip(n):
    """Reverse the coefficient window [0, deg n]; n must be nonzero."""
    return int(bin(n)[:1:-1], 2)


def _int_of(p):
    if isinstance(p, Gf2Poly):
        return p.value
    if isinstance(p, int):
        return p
    raise TypeError(f"expected Gf2Poly or int, got {type(p).__name__}")


# ---------------------------------------------------------------------------
# text formats

class ParseError(ValueError):
    """Syntax error in a polynomial string; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (position {position})")
        self.position = position


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "+*^()x":
            tokens.append((c, None, i))
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    """Recursive descent for the grammar

        input   := product | sum
        product := factor ('*' factor)*
        factor  := atom ('^' uint)?
        atom    := 'x' | '1' | '0' | '(' sum ')'
        sum     := term ('+' term)*
        term    := 'x' ('^' uint)? | '1' | '0'

    A top-level input is a sum when a '+' occurs at paren depth 0 before
    any '*', otherwise a product.
    """

    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        return tok

    def parse_input(self):
        depth = 0
        is_sum = False
        for kind, _, _ in self.tokens:
            if kind == "(":
                depth += 1
            elif kind == ")":
                depth -= 1
            elif depth == 0 and kind == "+":
                is_sum = True
                break
            elif depth == 0 and kind == "*":
                break
        value = self.parse_sum() if is_sum else self.parse_product()
        tok = self.take()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0]!r}", tok[2])
        return value

    def parse_product(self):
        value = self.parse_factor()
        while self.peek()[0] == "*":
            self.take()
            value = _mul(value, self.parse_factor())
        return value

    def parse_factor(self):
        atom = self.parse_atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("int")
            exp = tok[1]
            if _deg(atom) > 0 and _deg(atom) * exp > _MAX_PARSE_DEGREE:
                raise ParseError("exponent too large", tok[2])
            atom = _pow(atom, exp)
        return atom

    def parse_atom(self):
        kind, value, pos = self.take()
        if kind == "x":
            return 2
        if kind == "int" and value in (0, 1):
            return value
        if kind == "(":
            inner = self.parse_sum()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {kind!r}", pos)

    def parse_sum(self):
        value = self.parse_term()
        while self.peek()[0] == "+":
            self.take()
            value ^= self.parse_term()
        return value

    def parse_term(self):
        kind, value, pos = self.take()
        if kind == "x":
            if self.peek()[0] == "^":
                self.take()
                tok = self.expect("int")
                if tok[1] > _MAX_PARSE_DEGREE:
                    raise ParseError("exponent too large", tok[2])
                return 1 << tok[1]
            return 2
        if kind == "int" and value in (0, 1):
            return value
        raise ParseError(f"unexpected {kind!r}", pos)


def _parse_str(text):
    stripped = "".join(text.split())
    if stripped[:2].lower() == "0x":
        try:
            return int(stripped, 16)
        except ValueError:
            raise ParseError("malformed hex literal", 0) from None
    return _Parser(_tokenize(text)).parse_input()


def _to_expanded(n):
    if n == 0:
        return "0"
    parts = []
    for i in range(n.bit_length() - 1, -1, -1):
        if (n >> i) & 1:
            parts.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(parts)


def parse(text):
    """Parse a polynomial string (the grammar above, or a '0x...' literal)."""
    return Gf2Poly(_parse_str(text))


def format_poly(p, style="expanded"):
    """Render p as text; style 'expanded' or 'hex' (bit i = coeff of x^i)."""
    n = _int_of(p)
    if style == "expanded":
        return _to_expanded(n)
    if style == "hex":
        return hex(n)
    raise ValueError(f"unknown style {style!r}")


# ---------------------------------------------------------------------------
# the value type

class Gf2Poly:
    """Immutable polynomial over GF(2)."""

    __slots__ = ("value",)

    def __init__(self, value=0):
        if isinstance(value, Gf2Poly):
            value = value.value
        elif isinstance(value, str):
            value = _parse_str(value)
        elif not isinstance(value, int) or value < 0:
            raise TypeError("value must be a nonnegative int, str or Gf2Poly")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    @property
    def degree(self):
        """Degree, or NEG_INF for the zero polynomial."""
        return self.value.bit_length() - 1 if self.value else NEG_INF

    def is_zero(self):
        return self.value == 0

    def conjugate(self):
        """The polynomial with x substituted by x+1 (an involution)."""
        return Gf2Poly(_conj(self.value))

    def reciprocal(self):
        """x^deg * p(1/x); requires p nonzero."""
        if self.value == 0:
            raise ValueError("the zero polynomial has no reciprocal")
        return Gf2Poly(_recip(self.value))

    def to_string(self, style="expanded"):
        return format_poly(self.value, style)

    def __add__(self, other):
        return Gf2Poly(self.value ^ _int_of(other))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        return Gf2Poly(_mul(self.value, _int_of(other)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return Gf2Poly(_pow(self.value, n))

    def __divmod__(self, other):
        q, r = _divmod(self.value, _int_of(other))
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other):
        return Gf2Poly(_divmod(self.value, _int_of(other))[0])

    def __mod__(self, other):
        return Gf2Poly(_mod(self.value, _int_of(other)))

    def __eq__(self, other):
        if isinstance(other, (Gf2Poly, int)):
            return self.value == _int_of(other)
        return NotImplemented

    def __lt__(self, other):
        # Integer order is degree-then-coefficient order: canonical.
        return self.value < _int_of(other)

    def __le__(self, other):
        return self.value <= _int_of(other)

    def __gt__(self, other):
        return self.value > _int_of(other)

    def __ge__(self, other):
        return self.value >= _int_of(other)

    def __hash__(self):
        return hash((Gf2Poly, self.value))

    def __bool__(self):
        return bool(self.value)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __str__(self):
        return _to_expanded(self.value)

    def __repr__(self):
        return f"Gf2Poly({_to_expanded(self.value)!r})"


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)
X1 = Gf2Poly(3)  # x+1


# ---------------------------------------------------------------------------
# operation-style wrappers

def add(p, q):
    """Coefficientwise XOR; add(p, p) = 0."""
    return Gf2Poly(_int_of(p) ^ _int_of(q))


def mul(p, q):
    """Carry-less polynomial product."""
    return Gf2Poly(_mul(_int_of(p), _int_of(q)))


def divrem(p, d):
    """Return (q, r) with p = q*d + r and r = 0 or deg r < deg d."""
    n = _int_of(d)
    if n == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = _divmod(_int_of(p), n)
    return Gf2Poly(q), Gf2Poly(r)


def gcd(p, q):
    """Greatest common divisor; gcd(p, 0) = p, gcd(0, 0) is an error."""
    a, b = _int_of(p), _int_of(q)
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return Gf2Poly(_gcd(a, b))


def power(p, n):
    """p**n by square-and-multiply; p**0 = 1."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("exponent must be a nonnegative integer")
    return Gf2Poly(_pow(_int_of(p), n))


def conjugate(p):
    """Substitute x -> x+1."""
    return Gf2Poly(_conj(_int_of(p)))


def reciprocal(p):
    """Bit-reversal of the coefficient window; p must be nonzero."""
    n = _int_of(p)
    if n == 0:
        raise ValueError("the zero polynomial has no reciprocal")
    return Gf2Poly(_recip(n))

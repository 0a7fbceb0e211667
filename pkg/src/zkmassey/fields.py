"""Exact coefficient fields: GF(2), GF(p) for small odd primes, and the rationals.

Scalars are plain Python objects chosen per field: ints 0/1 for GF(2),
canonical residues in [0, p) for GF(p), and ``fractions.Fraction`` (always in
lowest terms with positive denominator) for the rationals.  A field object
supplies the arithmetic, parsing and formatting for its scalars.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "Field",
    "GF2Field",
    "PrimeField",
    "RationalField",
    "GF2",
    "QQ",
    "GF",
    "field_from_key",
]

_MAX_PRIME = 2**31


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface; concrete fields override every method."""

    kind: str
    characteristic: int

    @property
    def key(self):
        """Hashable identity used for caches and serialization."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


class GF2Field(Field):
    kind = "gf2"
    characteristic = 2
    zero = 0
    one = 1

    @property
    def key(self):
        return ("gf2",)

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def mul(self, a, b):
        return a & b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2)")
        return 1

    def from_int(self, n: int):
        return n & 1

    def parse(self, text: str):
        return int(text, 10) % 2

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self):
        return "GF(2)"


class PrimeField(Field):
    """GF(p) for an odd prime p with 3 <= p < 2**31."""

    kind = "gfp"
    characteristic = 0  # set per instance

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or p >= _MAX_PRIME or not _is_prime(p):
            raise ValueError(f"modulus must be a prime in [3, 2**31): got {p!r}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    @property
    def key(self):
        return ("gfp", self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n: int):
        return n % self.p

    def parse(self, text: str):
        return int(text, 10) % self.p

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self):
        return f"GF({self.p})"


class RationalField(Field):
    kind = "rational"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    @property
    def key(self):
        return ("rational",)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, text: str):
        return Fraction(text)

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self):
        return "Q"


GF2 = GF2Field()
QQ = RationalField()

_prime_cache: dict[int, PrimeField] = {}


def GF(p: int) -> Field:
    """Finite field by modulus; GF(2) or GF(p) for odd primes."""
    if p == 2:
        return GF2
    field = _prime_cache.get(p)
    if field is None:
        field = _prime_cache[p] = PrimeField(p)
    return field


def field_from_key(key) -> Field:
    if key == ("gf2",):
        return GF2
    if key == ("rational",):
        return QQ
    if isinstance(key, tuple) and len(key) == 2 and key[0] == "gfp":
        return GF(key[1])
    raise ValueError(f"unknown field key {key!r}")

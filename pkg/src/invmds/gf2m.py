"""Arithmetic in the binary extension fields GF(2^m), 1 <= m <= 16.

Elements are plain ints whose bit i is the coefficient of x^i.  A field is
described by a :class:`FieldSpec` holding the degree and the reduction
polynomial; every operation takes the FieldSpec explicitly or is a method on it.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_DEGREE = 16
# low-weight conventional choices; checked for irreducibility at import time
DEFAULT_POLYS = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0x11B,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}
AES_POLY = 0x11B
ANUBIS_POLY = 0x11D


class FieldError(ValueError):
    """Invalid field parameters (degree out of range, bad polynomial)."""


def degree(p):
    return p.bit_length() - 1


def clmul(a, b):
    """Carry-less product of two GF(2)[x] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a, p):
    dp = p.bit_length()
    while a.bit_length() >= dp:
        a ^= p << (a.bit_length() - dp)
    return a


def is_irreducible(poly, m):
    """True iff ``poly`` (of degree m) has no factor of degree 1..m//2.

    Plain trial division; fine up to m = 16 (at most 2^9 divisors).
    """
    if degree(poly) != m:
        raise FieldError(f"polynomial 0x{poly:x} does not have degree {m}")
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for divisor in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, divisor) == 0:
                return False
    return True


def parse_poly(text):
    """Parse a ``0x..`` or ``0b..`` polynomial literal."""
    s = text.strip().lower()
    if s.startswith("0x"):
        return int(s[2:], 16)
    if s.startswith("0b"):
        return int(s[2:], 2)
    raise ValueError(f"polynomial literal must start with 0x or 0b: {text!r}")


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^m) defined by an irreducible polynomial ``poly`` of degree m.

    Construction validates the degree range and irreducibility, so every
    instance in circulation is a genuine field.
    """

    m: int
    poly: int

    def __post_init__(self):
        if not 1 <= self.m <= MAX_DEGREE:
            raise FieldError(f"m={self.m} outside 1..{MAX_DEGREE}")
        if self.poly <= 0 or degree(self.poly) != self.m:
            raise FieldError(
                f"polynomial 0x{self.poly:x} does not have degree {self.m}")
        if not is_irreducible(self.poly, self.m):
            raise FieldError(f"reducible polynomial 0x{self.poly:x}")

    @property
    def order(self):
        return 1 << self.m

    def elements(self):
        return range(self.order)

    def nonzero(self):
        return range(1, self.order)

    def contains(self, a):
        return isinstance(a, int) and 0 <= a < self.order

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        r = 0
        top = 1 << self.m
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.poly
        return r

    def pow(self, a, e):
        if e < 0:
            raise ValueError("negative exponent")
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        """Inverse via the extended Euclidean algorithm over GF(2)[x]."""
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        r0, r1 = self.poly, a
        s0, s1 = 0, 1
        while r1 != 1:
            shift = degree(r0) - degree(r1)
            if shift < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            r0 ^= r1 << shift
            s0 ^= s1 << shift
            if degree(r0) < degree(r1):
                r0, r1, s0, s1 = r1, r0, s1, s0
        return poly_mod(s1, self.poly)

    def inv_pow(self, a):
        """Inverse via Fermat: a^(2^m - 2)."""
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def format(self, a):
        return format(a, f"0{(self.m + 3) // 4}x")

    @cached_property
    def mul_table(self):
        """Full multiplication table as a list of lists (m <= 8 only)."""
        if self.m > 8:
            raise FieldError("multiplication tables are limited to m <= 8")
        q = self.order
        return [[self.mul(a, b) for b in range(q)] for a in range(q)]

    @cached_property
    def mul_array(self):
        return np.array(self.mul_table, dtype=np.int64)

    @cached_property
    def log_tables(self):
        """(log, exp) tables built from the smallest primitive element."""
        if self.m > 8:
            raise FieldError("log tables are limited to m <= 8")
        q = self.order
        for g in range(2, q) if q > 2 else [1]:
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self.mul(x, g)
            if len(exp) == q - 1:
                break
        log = [None] * q
        for i, v in enumerate(exp):
            log[v] = i
        return log, exp

    def mul_log(self, a, b):
        if a == 0 or b == 0:
            return 0
        log, exp = self.log_tables
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def __str__(self):
        return f"GF(2^{self.m})/0x{self.poly:x}"

    def to_dict(self):
        return {"m": self.m, "poly": f"0x{self.poly:x}"}


def make_field(m, poly=None):
    if not isinstance(m, int) or not 1 <= m <= MAX_DEGREE:
        raise FieldError(f"m={m!r} outside 1..{MAX_DEGREE}")
    return FieldSpec(m, DEFAULT_POLYS[m] if poly is None else poly)


def add(a, b):
    return a ^ b


def mul(a, b, f):
    return f.mul(a, b)


def inv(a, f):
    return f.inv(a)


def power(a, e, f):
    return f.pow(a, e)


for _m, _p in DEFAULT_POLYS.items():
    if not is_irreducible(_p, _m):
        raise FieldError(f"default polynomial for m={_m} is reducible")
del _m, _p

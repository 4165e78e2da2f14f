"""Exact coefficient fields: the rationals and prime fields GF(p), p < 2^31.

Rational coefficients are `fractions.Fraction` values; prime-field
coefficients are plain ints reduced to [0, p).  All arithmetic is exact and
division by zero raises, it never wraps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin; the base set covers all n < 3.3e24
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CoeffField:
    """QQ when ``p`` is None, otherwise GF(p) with ``p`` prime."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not 2 <= self.p < 2**31:
                raise ValueError(f"prime field modulus out of range: {self.p}")
            if not _is_prime(self.p):
                raise ValueError(f"modulus {self.p} is not prime")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def of(self, value):
        """Coerce an int, Fraction, or (num, den) pair into this field."""
        if self.p is None:
            return Fraction(value) if not isinstance(value, tuple) else Fraction(*value)
        if isinstance(value, tuple):
            num, den = value
            return self.mul(num % self.p, self.inv(den % self.p))
        if isinstance(value, Fraction):
            return self.mul(value.numerator % self.p, self.inv(value.denominator % self.p))
        return value % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        return 1 / Fraction(a) if self.p is None else pow(a, self.p - 2, self.p)

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero field element")
        return Fraction(a) / Fraction(b) if self.p is None else (a * pow(b, self.p - 2, self.p)) % self.p

    def repr_coeff(self, a) -> str:
        """Readable form; GF(p) values are shown balanced around zero."""
        if self.p is None:
            return str(a)
        return str(a - self.p) if a > self.p // 2 else str(a)

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = CoeffField(None)


def GF(p: int) -> CoeffField:
    return CoeffField(p)


#: Default field: a large prime keeps random superficial candidates generic
#: with overwhelming probability while staying fast.
DEFAULT_FIELD = GF(32003)

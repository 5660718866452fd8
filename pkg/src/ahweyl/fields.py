"""Exact coefficient fields: the rationals and the prime fields GF(p).

A FieldSpec carries the characteristic (0 or a prime p) and provides exact
arithmetic on plain scalar values: `fractions.Fraction` in characteristic 0,
least nonnegative residues (Python ints in [0, p)) in characteristic p.
No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldMismatchError(ValueError):
    """Operands belong to different coefficient fields."""


class ExactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The base field F: characteristic 0 means Q, a prime p means GF(p)."""

    characteristic: int

    def __post_init__(self):
        ch = self.characteristic
        if ch != 0 and not _is_prime(ch):
            raise ValueError(f"characteristic must be 0 or prime, got {ch}")

    @property
    def is_char_zero(self) -> bool:
        return self.characteristic == 0

    @property
    def p(self) -> int:
        """The prime p; only meaningful in positive characteristic."""
        if self.characteristic == 0:
            raise ValueError("field has characteristic 0")
        return self.characteristic

    # -- element construction -------------------------------------------------

    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def from_int(self, n: int):
        if self.characteristic == 0:
            return Fraction(n)
        return n % self.characteristic

    def coerce(self, v):
        """Coerce an int / Fraction into this field; reject floats."""
        if isinstance(v, bool) or isinstance(v, float):
            raise TypeError(f"inexact scalar {v!r} not allowed")
        if isinstance(v, int):
            return self.from_int(v)
        if isinstance(v, Fraction):
            if self.characteristic == 0:
                return v
            num = v.numerator % self.characteristic
            den = v.denominator % self.characteristic
            return self.mul(num, self.inv(den))
        raise TypeError(f"cannot coerce {type(v).__name__} into {self}")

    # -- arithmetic ------------------------------------------------------------

    def add(self, a, b):
        if self.characteristic == 0:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.characteristic == 0:
            return a - b
        return (a - b) % self.characteristic

    def mul(self, a, b):
        if self.characteristic == 0:
            return a * b
        return (a * b) % self.characteristic

    def neg(self, a):
        if self.characteristic == 0:
            return -a
        return (-a) % self.characteristic

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return Fraction(1) / a
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return not a

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)


def check_same_field(a: FieldSpec, b: FieldSpec) -> None:
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a} vs {b}")

"""Two-variable polynomials over F in the center coordinates (t1, t2).

In characteristic p the center of A_h is F[t1, t2] with t1 = x^p and
t2 = zeta = h^p y^p; derivations of the center are A*d/dt1 + B*d/dt2 with
A, B in F[t1, t2]. CenterPoly is the exact coefficient container for these.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import ExactDivisionError, FieldSpec, check_same_field
from .poly import Poly


class CenterPoly:
    """Element of F[t1, t2], stored as {(i, j): scalar} for t1^i t2^j."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=None):
        clean = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                c = field.coerce(c)
                if not field.is_zero(c):
                    clean[(i, j)] = c
        self.field = field
        self.coeffs = clean

    @classmethod
    def zero(cls, field: FieldSpec) -> "CenterPoly":
        return cls(field)

    @classmethod
    def one(cls, field: FieldSpec) -> "CenterPoly":
        return cls(field, {(0, 0): 1})

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "CenterPoly":
        return cls(field, {(0, 0): c})

    @classmethod
    def t1(cls, field: FieldSpec, n: int = 1) -> "CenterPoly":
        return cls(field, {(n, 0): 1})

    @classmethod
    def t2(cls, field: FieldSpec, n: int = 1) -> "CenterPoly":
        return cls(field, {(0, n): 1})

    @classmethod
    def from_t1_poly(cls, w: Poly) -> "CenterPoly":
        """Lift a one-variable polynomial w(u) to w(t1)."""
        return cls(w.field, {(i, 0): c for i, c in enumerate(w.coeffs)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {(0, 0): self.field.one()}

    def __eq__(self, other):
        return (
            isinstance(other, CenterPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if not isinstance(other, CenterPoly):
            raise TypeError(f"expected CenterPoly, got {type(other).__name__}")
        check_same_field(self.field, other.field)

    def __add__(self, other: "CenterPoly") -> "CenterPoly":
        self._check(other)
        out = dict(self.coeffs)
        F = self.field
        for k, c in other.coeffs.items():
            out[k] = F.add(out.get(k, F.zero()), c)
        return CenterPoly(F, out)

    def __sub__(self, other: "CenterPoly") -> "CenterPoly":
        return self + (-other)

    def __neg__(self) -> "CenterPoly":
        F = self.field
        return CenterPoly(F, {k: F.neg(c) for k, c in self.coeffs.items()})

    def scale(self, c) -> "CenterPoly":
        F = self.field
        c = F.coerce(c)
        return CenterPoly(F, {k: F.mul(c, v) for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        F = self.field
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = F.add(out.get(k, F.zero()), F.mul(c1, c2))
        return CenterPoly(F, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "CenterPoly":
        if n < 0:
            raise ValueError("negative exponent")
        out = CenterPoly.one(self.field)
        for _ in range(n):
            out = out * self
        return out

    def d_dt1(self) -> "CenterPoly":
        F = self.field
        out = {}
        for (i, j), c in self.coeffs.items():
            if i:
                out[(i - 1, j)] = F.mul(c, F.from_int(i))
        return CenterPoly(F, out)

    def d_dt2(self) -> "CenterPoly":
        F = self.field
        out = {}
        for (i, j), c in self.coeffs.items():
            if j:
                out[(i, j - 1)] = F.mul(c, F.from_int(j))
        return CenterPoly(F, out)

    def t2_degree(self) -> int:
        return max((j for (_, j) in self.coeffs), default=-1)

    def t2_coefficient(self, j: int) -> Poly:
        """Coefficient of t2^j as a one-variable polynomial in t1."""
        return Poly.from_coeff_dict(
            self.field, {i: c for (i, jj), c in self.coeffs.items() if jj == j}
        )

    @classmethod
    def from_t2_coefficients(cls, field: FieldSpec, parts) -> "CenterPoly":
        out = {}
        for j, w in enumerate(parts):
            for i, c in enumerate(w.coeffs):
                if not field.is_zero(c):
                    out[(i, j)] = c
        return cls(field, out)

    def exact_div_t1(self, w: Poly) -> "CenterPoly":
        """Exact division by a polynomial in t1 alone."""
        if w.is_zero():
            raise ZeroDivisionError("division by zero")
        parts = []
        for j in range(self.t2_degree() + 1):
            parts.append(self.t2_coefficient(j).exact_div(w))
        return CenterPoly.from_t2_coefficients(self.field, parts)

    def exact_div(self, other: "CenterPoly") -> "CenterPoly":
        """Exact division by a general center polynomial (used for module
        coordinates; quotient must be polynomial)."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        # divide t2-adically: view both as polynomials in t2 over F[t1]
        F = self.field
        num = [self.t2_coefficient(j) for j in range(self.t2_degree() + 1)]
        den = [other.t2_coefficient(j) for j in range(other.t2_degree() + 1)]
        while den and den[-1].is_zero():
            den.pop()
        dd = len(den) - 1
        lead = den[-1]
        out = []
        while num and len(num) - 1 >= dd:
            while num and num[-1].is_zero():
                num.pop()
            if not num or len(num) - 1 < dd:
                break
            q = num[-1].exact_div(lead)
            k = len(num) - 1 - dd
            out.append((k, q))
            for j in range(dd + 1):
                num[k + j] = num[k + j] - q * den[j]
        if any(not v.is_zero() for v in num):
            raise ExactDivisionError("center-polynomial division not exact")
        parts = [Poly.zero(F) for _ in range(max((k for k, _ in out), default=-1) + 1)]
        for k, q in out:
            parts[k] = parts[k] + q
        return CenterPoly.from_t2_coefficients(F, parts)

    def evaluate(self, t1_value, t2_value):
        """Evaluate at commuting ring elements (e.g. WeylElements)."""
        total = None
        for (i, j), c in sorted(self.coeffs.items()):
            term = (t1_value**i) * (t2_value**j) * c
            total = term if total is None else total + term
        return total

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            neg = isinstance(c, (int, Fraction)) and c < 0
            mag = -c if neg else c
            parts = []
            if mag != 1 or (i == 0 and j == 0):
                parts.append(str(mag))
            if i:
                parts.append("t1" if i == 1 else f"t1^{i}")
            if j:
                parts.append("t2" if j == 1 else f"t2^{j}")
            pieces.append((neg, "*".join(parts)))
        out = ("-" + pieces[0][1]) if pieces[0][0] else pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"CenterPoly({self.field}, {self.to_text()!r})"

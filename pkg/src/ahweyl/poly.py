"""Exact univariate polynomial arithmetic over Q or GF(p).

Polynomials are dense coefficient tuples, index = degree, with no trailing
zeros; the zero polynomial has an empty tuple and degree -infinity. All
operations return canonical-form results and are side-effect free.

Besides the ring operations this module carries the characteristic-p
bookkeeping used throughout the package: the Frobenius decomposition
f = sum_j f_j(x^p) x^j (0 <= j < p), the map partial_p = d/d(x^p) applied
componentwise, exact p-th roots, antiderivatives with their integrability
obstruction, and squarefree decomposition via gcd/derivative chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import ExactDivisionError, FieldSpec, check_same_field

#: Degree of the zero polynomial; compares below every integer degree.
NEG_INF = float("-inf")


@dataclass(frozen=True)
class NotIntegrable:
    """Failure value of `Poly.antiderivative` in characteristic p.

    `obstruction` is the unique c in F[x^p] such that f - c*x^(p-1) has an
    antiderivative; it is nonzero exactly when f itself has none.
    """

    obstruction: "Poly"

    @property
    def obstruction_in_u(self) -> "Poly":
        return self.obstruction.frobenius_split()[0]


class Poly:
    """Element of F[x] in canonical dense form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs, *, _trusted: bool = False):
        if _trusted:
            self.field = field
            self.coeffs = coeffs
            return
        vals = [field.coerce(c) for c in coeffs]
        while vals and field.is_zero(vals[-1]):
            vals.pop()
        self.field = field
        self.coeffs = tuple(vals)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, (), _trusted=True)

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, [1])

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "Poly":
        return cls(field, [c])

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field: FieldSpec, c, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        return cls(field, [0] * n + [c])

    @classmethod
    def from_coeff_dict(cls, field: FieldSpec, d: dict) -> "Poly":
        if not d:
            return cls.zero(field)
        n = max(d)
        coeffs = [0] * (n + 1)
        for k, v in d.items():
            coeffs[k] = v
        return cls(field, coeffs)

    # -- basic queries ----------------------------------------------------------

    @property
    def degree(self):
        """Degree; NEG_INF (not -1) for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.field.zero()

    def coefficient(self, n: int):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.field.zero()

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations ---------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        check_same_field(self.field, other.field)

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def scale(self, c) -> "Poly":
        F = self.field
        c = F.coerce(c)
        return Poly(F, [F.mul(c, v) for v in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        F = self.field
        if not self.coeffs or not other.coeffs:
            return Poly.zero(F)
        out = [F.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        out = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Poly"):
        """(q, r) with self = q*other + r and deg r < deg other."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        lc_inv = F.inv(dv[-1])
        if len(rem) - 1 < dd:
            return Poly.zero(F), self
        q = [F.zero()] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if F.is_zero(c):
                continue
            f = F.mul(c, lc_inv)
            q[i - dd] = f
            for j in range(dd + 1):
                rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(f, dv[j]))
        return Poly(F, q), Poly(F, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of an exact division; ExactDivisionError on remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ExactDivisionError(f"{self} is not divisible by {other}")
        return q

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        return self.scale(self.field.inv(self.leading_coefficient()))

    # -- calculus ----------------------------------------------------------------

    def derivative(self, order: int = 1) -> "Poly":
        out = self
        F = self.field
        for _ in range(order):
            out = Poly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(out.coeffs)][1:])
        return out

    def evaluate(self, v):
        F = self.field
        v = F.coerce(v)
        acc = F.zero()
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, v), c)
        return acc

    def antiderivative(self):
        """Return g with g' = self (constant term 0), or NotIntegrable.

        In characteristic 0 this always succeeds. In characteristic p the
        image of d/dx misses exactly the F[x^p]*x^(p-1) component: when the
        Frobenius component f_{p-1} is nonzero the result is NotIntegrable
        carrying that obstruction.
        """
        F = self.field
        if F.is_char_zero:
            out = [F.zero()]
            for i, c in enumerate(self.coeffs):
                out.append(F.div(c, F.from_int(i + 1)))
            return Poly(F, out)
        p = F.p
        obstruction = {}
        out = {}
        for i, c in enumerate(self.coeffs):
            if F.is_zero(c):
                continue
            if i % p == p - 1:
                obstruction[i - (p - 1)] = c
            else:
                out[i + 1] = F.div(c, F.from_int(i % p + 1))
        if obstruction:
            return NotIntegrable(Poly.from_coeff_dict(F, obstruction))
        return Poly.from_coeff_dict(F, out)

    # -- gcd ----------------------------------------------------------------------

    def gcd_monic(self, other: "Poly") -> "Poly":
        """Monic gcd; gcd(f, 0) = monic(f); gcd(0, 0) is an error."""
        self._check(other)
        a, b = self, other
        if a.is_zero() and b.is_zero():
            raise ValueError("gcd(0, 0) is undefined")
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Poly"):
        """(g, s, t) with s*self + t*other = g, g the monic gcd."""
        self._check(other)
        F = self.field
        if self.is_zero() and other.is_zero():
            raise ValueError("gcd(0, 0) is undefined")
        r0, r1 = self, other
        s0, s1 = Poly.one(F), Poly.zero(F)
        t0, t1 = Poly.zero(F), Poly.one(F)
        while not r1.is_zero():
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        lc = r0.leading_coefficient()
        inv = F.inv(lc)
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    # -- characteristic-p structure -------------------------------------------------

    def _require_char_p(self) -> int:
        if self.field.is_char_zero:
            raise ValueError("operation requires positive characteristic")
        return self.field.p

    def frobenius_split(self):
        """Components (f_0, ..., f_{p-1}) with f = sum_j f_j(x^p) x^j.

        Each f_j is returned as a polynomial in u = x^p (same field, new
        variable); over the prime field the coefficients carry over directly.
        """
        p = self._require_char_p()
        parts = [dict() for _ in range(p)]
        for i, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                parts[i % p][i // p] = c
        return [Poly.from_coeff_dict(self.field, d) for d in parts]

    @classmethod
    def frobenius_assemble(cls, field: FieldSpec, parts) -> "Poly":
        """Inverse of frobenius_split: sum_j parts[j](x^p) x^j."""
        p = field.p
        if len(parts) != p:
            raise ValueError(f"expected {p} components, got {len(parts)}")
        out = {}
        for j, part in enumerate(parts):
            for k, c in enumerate(part.coeffs):
                if not field.is_zero(c):
                    out[k * p + j] = c
        return cls.from_coeff_dict(field, out)

    def substitute_xp(self) -> "Poly":
        """Treat self as a polynomial in u and substitute u = x^p."""
        p = self._require_char_p()
        return Poly.from_coeff_dict(
            self.field,
            {i * p: c for i, c in enumerate(self.coeffs) if not self.field.is_zero(c)},
        )

    def pth_root(self) -> "Poly":
        """Exact p-th root of an element of F[x^p] over the prime field."""
        p = self._require_char_p()
        out = {}
        for i, c in enumerate(self.coeffs):
            if self.field.is_zero(c):
                continue
            if i % p:
                raise ExactDivisionError(f"{self} is not a p-th power")
            out[i // p] = c
        return Poly.from_coeff_dict(self.field, out)

    def in_frobenius_base(self) -> bool:
        """True iff self lies in F[x^p]."""
        if self.field.is_char_zero:
            return self.is_constant()
        p = self.field.p
        return all(
            self.field.is_zero(c) for i, c in enumerate(self.coeffs) if i % p
        )

    def partial_p(self) -> "Poly":
        """d/d(x^p) applied to each Frobenius component and reassembled.

        On monomials: x^(jp+i) -> j * x^((j-1)p+i) for 0 <= i < p.
        """
        p = self._require_char_p()
        F = self.field
        out = {}
        for n, c in enumerate(self.coeffs):
            if F.is_zero(c):
                continue
            j, i = divmod(n, p)
            if j == 0:
                continue
            v = F.mul(c, F.from_int(j))
            if not F.is_zero(v):
                out[(j - 1) * p + i] = v
        return Poly.from_coeff_dict(F, out)

    # -- squarefree structure ----------------------------------------------------------

    def squarefree_decomposition(self):
        """[(f_1, e_1), ...] with self = lc * prod f_i^{e_i}, each f_i monic
        squarefree, pairwise coprime, and e_i strictly increasing."""
        if self.is_zero():
            raise ValueError("squarefree decomposition of 0")
        f = self.monic()
        if f.is_one():
            return []
        if self.field.is_char_zero:
            return _yun(f)
        return _squarefree_char_p(f)

    # -- printing -----------------------------------------------------------------------

    def to_text(self, var: str = "x") -> str:
        """Render with terms in increasing degree, e.g. '1 - 2*x + x^3'."""
        if self.is_zero():
            return "0"
        pieces = []
        for i, c in enumerate(self.coeffs):
            if self.field.is_zero(c):
                continue
            pieces.append((i, c))
        out = []
        for idx, (i, c) in enumerate(pieces):
            neg = _scalar_is_negative(c)
            mag = -c if neg else c
            body = _term_text(mag, i, var)
            if idx == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Poly({self.field}, {self.to_text()!r})"


def _scalar_is_negative(c) -> bool:
    return isinstance(c, (int, Fraction)) and c < 0


def _term_text(mag, i: int, var: str) -> str:
    if i == 0:
        return str(mag)
    xpart = var if i == 1 else f"{var}^{i}"
    if mag == 1:
        return xpart
    return f"{mag}*{xpart}"


def _yun(f: Poly):
    """Yun's squarefree decomposition, characteristic 0, f monic nonconstant."""
    d = f.derivative()
    g = f.gcd_monic(d)
    c = f.exact_div(g)
    w = d.exact_div(g) - c.derivative()
    out = []
    k = 1
    while not c.is_one():
        a = c.gcd_monic(w) if not w.is_zero() else c.monic()
        if not a.is_one():
            out.append((a, k))
        c = c.exact_div(a)
        w = w.exact_div(a) - c.derivative()
        k += 1
    return out


def _squarefree_char_p(f: Poly):
    """Squarefree decomposition over GF(p), recursing on the p-th power part."""
    p = f.field.p
    out = {}
    d = f.derivative()
    if d.is_zero():
        for g, m in _squarefree_char_p(f.pth_root()):
            out[m * p] = g
        return sorted(((g, m) for m, g in out.items()), key=lambda t: t[1])
    c = f.gcd_monic(d)
    w = f.exact_div(c)
    k = 1
    while not w.is_one():
        y = w.gcd_monic(c) if not c.is_one() else Poly.one(f.field)
        z = w.exact_div(y)
        if not z.is_one():
            out[k] = z
        w = y
        if not y.is_one():
            c = c.exact_div(y)
        k += 1
    if not c.is_one():
        for g, m in _squarefree_char_p(c.pth_root()):
            if m * p in out:
                out[m * p] = out[m * p] * g
            else:
                out[m * p] = g
    return sorted(((g, m) for m, g in out.items()), key=lambda t: t[1])

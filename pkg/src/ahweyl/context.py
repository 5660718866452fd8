"""Everything attached to a fixed nonzero h: the subalgebra A_h of A_1.

A_h is generated by x and yhat = y*h inside the Weyl algebra, with
[yhat, x] = h, and decomposes as the direct sum of D*h^i*y^i over i >= 0
(D = F[x]). An AhContext bundles h with the invariants every other module
consumes:

* pi_h: the monic generator of {r : h | h'r}, computed as h / gcd(h, h');
* varrho_h: in characteristic p, the maximal monic divisor of h lying in
  F[x^p], assembled factorization-free from the squarefree decomposition;
* delta(f) = f'h and the twisted map delta0(r) = (r pi_h)' - r pi_h h' / h,
  realized entirely inside F[x] (no localization is ever materialized);
* in characteristic p: the central element zeta = h^p y^p, the Frobenius
  components of h^(p-1), their gcd hbar with Bezout witness qbreve, the map
  vartheta(r) = (r h^(p-1))^(p-1) whose kernel Theta consists of the r with
  D_r vanishing on the center, and a finite complement S with
  Theta = S (+) im delta.

Membership, centralizer and normalizer tests, basis conversions, and the
embedding A_g -> A_f for f | g live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .centerpoly import CenterPoly
from .fields import ExactDivisionError, check_same_field
from .linalg import LinearSolver
from .poly import NotIntegrable, Poly
from .weyl import WeylElement


class MembershipError(ValueError):
    """An element failed an A_h (or centralizer/normalizer) membership check."""


class FactorListError(ValueError):
    """A user-supplied prime factor list failed verification."""


class MissingFactorizationError(ValueError):
    """The operation needs a verified prime factor list and none was given."""


class ThetaStabilizationError(RuntimeError):
    """The search for a complement of im delta in Theta did not stabilize
    within the degree window, or a later expression fell outside it."""


@dataclass(frozen=True)
class NotCentral:
    reason: str


@dataclass(frozen=True)
class NotCentralizing:
    reason: str


@dataclass(frozen=True)
class NormalizerResult:
    ok: bool
    failing_y_degree: Optional[int] = None
    reason: Optional[str] = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class CentralizerCoords:
    """f in C_{A_h}(x) = Z(A_h) D, as f = sum_k g_k zeta^k with g_k in F[x]."""

    zeta_coefficients: tuple

    def x_coordinates(self):
        """{j: z_j} with f = sum_j z_j(t1, t2) x^j, reading each g_k through
        its Frobenius components."""
        out = {}
        for k, g in enumerate(self.zeta_coefficients):
            if g.is_zero():
                continue
            for j, part in enumerate(g.frobenius_split()):
                if part.is_zero():
                    continue
                add = CenterPoly.from_t1_poly(part) * CenterPoly.t2(part.field, k)
                out[j] = out.get(j, CenterPoly.zero(part.field)) + add
        return {j: z for j, z in out.items() if not z.is_zero()}


def pi_of(h: Poly) -> Poly:
    """Monic generator of {r : h | h'r}; equals h / gcd(h, h')."""
    if h.is_zero():
        raise ValueError("pi is undefined for h = 0")
    d = h.derivative()
    if d.is_zero():
        return Poly.one(h.field)
    return h.exact_div(h.gcd_monic(d)).monic()


def varrho_of(h: Poly) -> Poly:
    """Maximal monic divisor of h lying in F[x^p]; 1 in characteristic 0.

    Over the prime field F[x^p] = {w^p}, so this is the largest p-th power
    dividing h, read off the squarefree decomposition.
    """
    if h.is_zero():
        raise ValueError("varrho is undefined for h = 0")
    if h.field.is_char_zero:
        return Poly.one(h.field)
    p = h.field.p
    out = Poly.one(h.field)
    if h.is_constant():
        return out
    for g, m in h.squarefree_decomposition():
        if m >= p:
            out = out * g ** (p * (m // p))
    return out


def _verify_factor_list(h: Poly, factors) -> tuple:
    """Validate [(u_i, alpha_i)]: monic nonconstant, pairwise coprime by
    trial gcd, squarefree, product reassembling h up to its leading
    coefficient. Returns the tuple as given."""
    factors = tuple((u, int(a)) for u, a in factors)
    prod = Poly.constant(h.field, h.leading_coefficient())
    for idx, (u, a) in enumerate(factors):
        check_same_field(h.field, u.field)
        if u.is_constant() or not u.is_monic():
            raise FactorListError(f"factor {u} must be monic and nonconstant")
        if a < 1:
            raise FactorListError(f"multiplicity {a} of {u} must be >= 1")
        du = u.derivative()
        if du.is_zero() or not u.gcd_monic(du).is_one():
            raise FactorListError(f"factor {u} is not squarefree")
        for v, _ in factors[idx + 1 :]:
            if not u.gcd_monic(v).is_one():
                raise FactorListError(f"factors {u} and {v} share a root")
        prod = prod * u**a
    if prod != h:
        raise FactorListError("factor product does not reassemble h")
    return factors


class AhContext:
    """Immutable bundle of h and its derived invariants."""

    def __init__(self, h: Poly, factors=None, degree_bound: Optional[int] = None):
        if h.is_zero():
            raise ValueError("h must be nonzero")
        self.field = h.field
        self.h = h
        self.pi_h = pi_of(h)
        self.h_over_pi = h.exact_div(self.pi_h)
        # pi_h * h' / h is exact by the defining property of pi_h
        self.pi_hprime_over_h = (self.pi_h * h.derivative()).exact_div(h)
        self.varrho_h = varrho_of(h)
        self.h_over_pi_rho = h.exact_div(self.pi_h * self.varrho_h)
        if factors is None and h.is_constant():
            factors = ()  # a unit has the (verified) empty factorization
        self.factors = _verify_factor_list(h, factors) if factors is not None else None
        if self.factors is not None:
            self._cross_check_factors()
        if degree_bound is None:
            degree_bound = 24 if self.field.is_char_zero else 3 * self.field.p
        self.degree_bound = max(degree_bound, int(h.degree))
        self._yhat_powers = [WeylElement.one(self.field)]
        self._theta_S = None
        if not self.field.is_char_zero:
            self._init_char_p()

    # -- construction helpers ---------------------------------------------------

    def _init_char_p(self):
        p = self.field.p
        hp1 = self.h ** (p - 1)
        self.hbar_components = hp1.frobenius_split()  # polynomials in u = x^p
        nonzero = [(i, c) for i, c in enumerate(self.hbar_components) if not c.is_zero()]
        g, coeffs = nonzero[0][1].monic(), {}
        # iterated extended gcd in F[u], tracking Bezout multipliers
        scale = self.field.inv(nonzero[0][1].leading_coefficient())
        coeffs[nonzero[0][0]] = Poly.constant(self.field, scale)
        for i, c in nonzero[1:]:
            if g.is_one():
                break
            g2, s, t = g.xgcd(c)
            coeffs = {k: s * v for k, v in coeffs.items()}
            coeffs[i] = coeffs.get(i, Poly.zero(self.field)) + t
            g = g2
        self.hbar = g  # monic gcd of the hbar components, in u
        self.qbreve_multipliers = [
            coeffs.get(i, Poly.zero(self.field)) for i in range(p)
        ]
        qb = Poly.zero(self.field)
        for i, qi in enumerate(self.qbreve_multipliers):
            qb = qb - qi.substitute_xp() * Poly.monomial(self.field, 1, p - 1 - i)
        self.qbreve = qb
        # Bezout witness: sum q_i hbar_i = hbar exactly
        acc = Poly.zero(self.field)
        for qi, hi in zip(self.qbreve_multipliers, self.hbar_components):
            acc = acc + qi * hi
        if acc != self.hbar:
            raise AssertionError("Bezout witness for hbar failed")
        self.zeta_hat_coeff = self.hbar_components[p - 1].substitute_xp()
        if self.theta_p_map(self.qbreve) != self.hbar:
            raise AssertionError("vartheta(qbreve) != hbar")

    def _cross_check_factors(self):
        """The verified factor list must reproduce the gcd-computed invariants."""
        F = self.field
        pi = Poly.one(F)
        rho = Poly.one(F)
        for u, a in self.factors:
            if F.is_char_zero:
                pi = pi * u
            else:
                p = F.p
                if a % p:
                    pi = pi * u
                rho = rho * u ** (p * (a // p))
        if pi != self.pi_h or rho != self.varrho_h:
            raise FactorListError(
                "factor list disagrees with the gcd-computed pi/varrho"
            )

    # -- characteristic helpers -----------------------------------------------------

    @property
    def p(self) -> int:
        return self.field.p

    def _require_char_p(self):
        if self.field.is_char_zero:
            raise ValueError("operation requires positive characteristic")

    # -- basic elements ----------------------------------------------------------------

    @property
    def x_elt(self) -> WeylElement:
        return WeylElement.x_power(self.field, 1)

    @property
    def yhat(self) -> WeylElement:
        """Normal form of y*h: h y + h'."""
        return WeylElement(
            self.field, {1: self.h, 0: self.h.derivative()}
        )

    def yhat_power(self, n: int) -> WeylElement:
        while len(self._yhat_powers) <= n:
            self._yhat_powers.append(self._yhat_powers[-1] * self.yhat)
        return self._yhat_powers[n]

    def zeta_element(self) -> WeylElement:
        """The central element h^p y^p."""
        self._require_char_p()
        p = self.p
        return WeylElement.from_term(self.h**p, p)

    def zeta_yhat_form(self) -> WeylElement:
        """zeta rewritten as yhat^p - (delta^p(x)/h) yhat."""
        self._require_char_p()
        p = self.p
        return self.yhat_power(p) - self.yhat.poly_mul(self.zeta_hat_coeff)

    def zeta_power_element(self, k: int) -> WeylElement:
        self._require_char_p()
        return WeylElement.from_term(self.h ** (self.p * k), self.p * k)

    def a_n_element(self, n: int) -> WeylElement:
        """pi_h h^(n-1) y^n for n >= 1; n = 0 is deliberately not an element
        (only delta0 realizes its adjoint action)."""
        if n < 1:
            raise ValueError(
                "a_0 is not materialized; its action is delta0, inside F[x]"
            )
        return WeylElement.from_term(self.pi_h * self.h ** (n - 1), n)

    # -- membership and coordinates -------------------------------------------------------

    def ah_membership(self, a: WeylElement) -> bool:
        """a in A_h iff h^i divides the y^i coefficient for every i."""
        check_same_field(self.field, a.field)
        return all((self.h**i).divides(r) for i, r in a.terms.items())

    def element(self, a: WeylElement) -> "AhElement":
        return AhElement(a, self)

    def yhat_expand(self, coefficients) -> WeylElement:
        """sum_j f_j yhat^j in normal form."""
        out = WeylElement.zero(self.field)
        for j, f in enumerate(coefficients):
            if not f.is_zero():
                out = out + self.yhat_power(j).poly_mul(f)
        return out

    def yhat_collect(self, a: WeylElement) -> list:
        """Coefficients [f_0, f_1, ...] with a = sum f_j yhat^j, by
        descending-degree division (f_n = r_n / h^n exactly)."""
        check_same_field(self.field, a.field)
        out = {}
        work = a
        while not work.is_zero():
            n = work.y_degree
            try:
                f = work.coefficient(n).exact_div(self.h**n)
            except ExactDivisionError as e:
                raise MembershipError(
                    f"y-degree {n} coefficient not divisible by h^{n}: not in A_h"
                ) from e
            out[n] = f
            work = work - self.yhat_power(n).poly_mul(f)
        if not out:
            return []
        return [out.get(j, Poly.zero(self.field)) for j in range(max(out) + 1)]

    def zbasis_collect(self, a: WeylElement) -> dict:
        """Coordinates over the center basis {x^i yhat^j : 0 <= i, j < p}:
        {(i, j): z_ij in F[t1, t2]} with a = sum z_ij x^i yhat^j."""
        self._require_char_p()
        p = self.p
        out = {}
        work = a
        while not work.is_zero():
            m = work.y_degree
            q, j = divmod(m, p)
            try:
                w = work.coefficient(m).exact_div(self.h**m)
            except ExactDivisionError as e:
                raise MembershipError(
                    f"y-degree {m} coefficient not divisible by h^{m}: not in A_h"
                ) from e
            piece = WeylElement.zero(self.field)
            for i, part in enumerate(w.frobenius_split()):
                if part.is_zero():
                    continue
                key = (i, j)
                add = CenterPoly.from_t1_poly(part) * CenterPoly.t2(self.field, q)
                out[key] = out.get(key, CenterPoly.zero(self.field)) + add
            piece = (
                self.zeta_power_element(q).poly_mul(w) * self.yhat_power(j)
            )
            work = work - piece
        return {k: v for k, v in out.items() if not v.is_zero()}

    def center_value(self, z: CenterPoly) -> WeylElement:
        """Evaluate z(t1, t2) at t1 = x^p, t2 = zeta, in normal form."""
        self._require_char_p()
        p = self.p
        out = WeylElement.zero(self.field)
        for j in range(z.t2_degree() + 1):
            w = z.t2_coefficient(j)
            if w.is_zero():
                continue
            out = out + self.zeta_power_element(j).poly_mul(w.substitute_xp())
        return out

    def center_coords(self, a: WeylElement):
        """Express a in Z(A_h) = F[t1, t2], or NotCentral."""
        self._require_char_p()
        p = self.p
        parts = []
        top = a.y_degree
        for i, r in a.terms.items():
            if i % p:
                return NotCentral(f"y-degree {i} is not a multiple of {p}")
        for k in range((top // p if top >= 0 else -1) + 1):
            r = a.coefficient(k * p)
            if r.is_zero():
                parts.append(Poly.zero(self.field))
                continue
            try:
                q = r.exact_div(self.h ** (k * p))
            except ExactDivisionError:
                return NotCentral(
                    f"y^{k * p} coefficient not divisible by h^{k * p}"
                )
            split = q.frobenius_split()
            if any(not c.is_zero() for c in split[1:]):
                return NotCentral(f"y^{k * p} coordinate {q} is not in F[x^p]")
            parts.append(split[0])
        return CenterPoly.from_t2_coefficients(self.field, parts)

    def centralizer_x_coords(self, f: WeylElement):
        """Coordinates in C_{A_h}(x) = Z(A_h) D, or NotCentralizing."""
        check_same_field(self.field, f.field)
        if self.field.is_char_zero:
            if any(i > 0 for i in f.terms):
                return NotCentralizing("positive y-degree term does not commute with x")
            return CentralizerCoords((f.coefficient(0),))
        p = self.p
        for i in f.terms:
            if i % p:
                return NotCentralizing(f"y-degree {i} is not a multiple of {p}")
        top = f.y_degree
        gs = []
        for k in range((top // p if top >= 0 else -1) + 1):
            r = f.coefficient(k * p)
            if r.is_zero():
                gs.append(Poly.zero(self.field))
                continue
            try:
                gs.append(r.exact_div(self.h ** (k * p)))
            except ExactDivisionError:
                return NotCentralizing(
                    f"y^{k * p} coefficient not divisible by h^{k * p}"
                )
        return CentralizerCoords(tuple(gs))

    def normalizer_test(self, a: WeylElement) -> NormalizerResult:
        """Membership in the normalizer N of A_h inside A_1, with the first
        failing term diagnosed."""
        check_same_field(self.field, a.field)
        p = 0 if self.field.is_char_zero else self.p
        for i, r in sorted(a.terms.items()):
            if i == 0:
                continue
            if p == 0 or i % p:
                need = self.pi_h * self.h ** (i - 1)
                if not need.divides(r):
                    return NormalizerResult(
                        False, i, f"pi_h * h^{i - 1} does not divide the y^{i} coefficient"
                    )
            else:
                if not (self.h ** (i - 1)).divides(r.derivative()):
                    return NormalizerResult(
                        False,
                        i,
                        f"h^{i - 1} does not divide the derivative of the y^{i} coefficient",
                    )
        return NormalizerResult(True)

    # -- the derivations delta and delta0 ---------------------------------------------------

    def delta(self, f: Poly) -> Poly:
        """delta(f) = f' h."""
        return f.derivative() * self.h

    def delta0(self, r: Poly) -> Poly:
        """(r pi_h)' - r (pi_h h' / h); all divisions exact in F[x]."""
        return (r * self.pi_h).derivative() - r * self.pi_hprime_over_h

    def delta0_of_one(self) -> Poly:
        return self.delta0(Poly.one(self.field))

    def delta_p_of_x(self) -> Poly:
        """delta^p(x), by the closed form hbar_{p-1}(x^p) * h."""
        self._require_char_p()
        return self.zeta_hat_coeff * self.h

    # -- characteristic-p invariants ---------------------------------------------------------

    def theta_of(self, r: Poly) -> Poly:
        """vartheta(r) = (r h^(p-1))^(p-1), an element of F[x^p] (in x)."""
        self._require_char_p()
        p = self.p
        return (r * self.h ** (p - 1)).derivative(p - 1)

    def theta_p_map(self, r: Poly) -> Poly:
        """vartheta(r) reported as a polynomial in u = x^p."""
        v = self.theta_of(r)
        split = v.frobenius_split()
        if any(not c.is_zero() for c in split[1:]):
            raise AssertionError("vartheta image fell outside F[x^p]")
        return split[0]

    def in_theta(self, r: Poly) -> bool:
        """Theta = ker vartheta: exactly the r with D_r vanishing on the center."""
        return self.theta_of(r).is_zero()

    def hbar_and_qbreve(self):
        self._require_char_p()
        return self.hbar, self.qbreve

    def im_delta_preimage(self, r: Poly):
        """g with delta(g) = r, or None (r must be h * (element of im d/dx))."""
        if r.is_zero():
            return Poly.zero(self.field)
        q, rem = divmod(r, self.h)
        if not rem.is_zero():
            return None
        g = q.antiderivative()
        if isinstance(g, NotIntegrable):
            return None
        return g

    def theta_complement_S(self) -> list:
        """Basis of a complement S of im delta inside Theta, by degreewise
        linear algebra over the window deg h + 2p, with a two-block
        stabilization check."""
        self._require_char_p()
        if self._theta_S is None:
            self._compute_theta_S()
        return list(self._theta_S)

    def _im_delta_generators(self, max_deg: int):
        """Spanning pairs (vector poly, preimage) of im delta up to degree
        max_deg: delta(x^(m)/m) = x^(m-1) h for p not dividing m."""
        p = self.p
        F = self.field
        gens = []
        deg_h = int(self.h.degree)
        for n in range(0, max_deg - deg_h + 1):
            if n % p == p - 1:
                continue  # x^n with n = -1 mod p is not a derivative
            vec = Poly.monomial(F, 1, n) * self.h
            pre = Poly.monomial(F, F.inv(F.from_int(n + 1)), n + 1)
            gens.append((vec, pre))
        return gens

    def _compute_theta_S(self):
        from .linalg import nullspace

        p = self.p
        F = self.field
        n_max = int(self.h.degree) + 2 * p
        # rows of the vartheta matrix: one row per u-coefficient, columns x^0..x^N
        images = [self.theta_p_map(Poly.monomial(F, 1, i)) for i in range(n_max + 1)]
        n_rows = max((len(v.coeffs) for v in images), default=0)
        rows = [
            [images[i].coefficient(r) for i in range(n_max + 1)] for r in range(n_rows)
        ]
        kernel = nullspace(F, rows, n_max + 1)
        kernel_polys = sorted((Poly(F, v) for v in kernel), key=lambda q: q.degree)
        solver = LinearSolver(F)
        width = n_max + 1
        for vec, _ in self._im_delta_generators(n_max):
            solver.add(list(vec.coeffs) + [F.zero()] * (width - len(vec.coeffs)))
        S = []
        for q in kernel_polys:
            if solver.add(list(q.coeffs) + [F.zero()] * (width - len(q.coeffs))):
                S.append(q.monic())
        in_window = [s for s in S if s.degree <= n_max - 2 * p]
        mid_window = [s for s in S if s.degree <= n_max - p]
        if not (len(in_window) == len(mid_window) == len(S)):
            raise ThetaStabilizationError(
                "complement of im delta in Theta did not stabilize over two "
                f"p-blocks below degree {n_max}"
            )
        self._theta_S = tuple(S)

    def split_theta(self, g: Poly):
        """Write g in Theta as s + delta(c) with s in span S; raises the
        stabilization diagnostic if g falls outside the searched window."""
        self._require_char_p()
        if not self.in_theta(g):
            raise ValueError(f"{g} is not in Theta")
        S = self.theta_complement_S()
        F = self.field
        max_deg = max(int(g.degree) if not g.is_zero() else 0, int(self.h.degree) + 2 * self.p)
        gens = self._im_delta_generators(max_deg)
        solver = LinearSolver(F)
        width = max_deg + 1
        def as_vec(q):
            return list(q.coeffs) + [F.zero()] * (width - len(q.coeffs))
        for s in S:
            solver.add(as_vec(s))
        for vec, _ in gens:
            solver.add(as_vec(vec))
        coeffs = solver.express(as_vec(g))
        if coeffs is None:
            raise ThetaStabilizationError(
                f"{g} lies in Theta but outside span(S) + im delta within the window"
            )
        s_part = Poly.zero(F)
        c_part = Poly.zero(F)
        for c, s in zip(coeffs[: len(S)], S):
            s_part = s_part + s.scale(c)
        for c, (_, pre) in zip(coeffs[len(S) :], gens):
            c_part = c_part + pre.scale(c)
        return s_part, c_part

    # -- char-0 center/commutator split of the D_g slot ------------------------------------------

    def split_center_commutator(self, g: Poly):
        """For deg g < deg h (char 0): the unique (z, q) with
        g = z * (h/pi_h) + delta0(q), deg z < deg pi_h, deg q < deg(h/pi_h)."""
        if not self.field.is_char_zero:
            raise ValueError("center/commutator split is a characteristic-0 device")
        if not g.is_zero() and g.degree >= self.h.degree:
            raise ValueError("expected deg g < deg h")
        F = self.field
        width = max(int(self.h.degree), 1)
        gens = []
        for i in range(int(self.pi_h.degree)):
            gens.append(("z", i, Poly.monomial(F, 1, i) * self.h_over_pi))
        for j in range(int(self.h_over_pi.degree)):
            gens.append(("q", j, self.delta0(Poly.monomial(F, 1, j))))
        solver = LinearSolver(F)
        def as_vec(q):
            return list(q.coeffs) + [F.zero()] * (width - len(q.coeffs))
        for _, _, vec in gens:
            solver.add(as_vec(vec))
        coeffs = solver.express(as_vec(g))
        if coeffs is None:
            raise AssertionError("center/commutator split must always solve")
        z = Poly.zero(F)
        q = Poly.zero(F)
        for c, (kind, i, _) in zip(coeffs, gens):
            if kind == "z":
                z = z + Poly.monomial(F, c, i)
            else:
                q = q + Poly.monomial(F, c, i)
        return z, q

    # -- A_h + Z(A_1) membership helper (char p) ----------------------------------------------------

    def split_Dhi_plus_Fxp(self, w: Poly, i: int):
        """(d, z) with w = d*h^i + z, z in F[x^p], or None if impossible.

        Works in D/(h^i): the span of the x^(pj) residues stabilizes as soon
        as one generator becomes dependent."""
        self._require_char_p()
        F = self.field
        hi = self.h**i
        if hi.is_constant():
            return w.exact_div(hi), Poly.zero(F)
        width = int(hi.degree)
        def as_vec(q):
            return list(q.coeffs) + [F.zero()] * (width - len(q.coeffs))
        solver = LinearSolver(F)
        reps = []
        j = 0
        while True:
            rep = Poly.monomial(F, 1, self.p * j) % hi
            if not solver.add(as_vec(rep)):
                break
            reps.append(j)
            j += 1
        target = w % hi
        coeffs = solver.express(as_vec(target))
        if coeffs is None:
            return None
        z = Poly.zero(F)
        for c, jj in zip(coeffs, reps):
            z = z + Poly.monomial(F, c, self.p * jj)
        d = (w - z).exact_div(hi)
        return d, z

    def __repr__(self):
        return f"AhContext(h={self.h.to_text()!r}, field={self.field})"


@dataclass(frozen=True)
class AhElement:
    """A WeylElement certified to lie in A_h."""

    value: WeylElement
    context: AhContext

    def __post_init__(self):
        if not self.context.ah_membership(self.value):
            raise MembershipError(f"{self.value} is not in A_h for h = {self.context.h}")


def embed_element(a: WeylElement, src: AhContext, dst: AhContext) -> AhElement:
    """The embedding of A_g into A_f for f | g, realized concretely: both
    algebras sit inside A_1 (with yhat_g = y*g = (y*f)*(g/f)), so the image
    is the same normal form viewed in the destination context."""
    check_same_field(src.field, dst.field)
    if not dst.h.divides(src.h):
        raise ValueError(f"{dst.h} does not divide {src.h}: no embedding")
    if not src.ah_membership(a):
        raise MembershipError(f"{a} is not in the source algebra")
    return dst.element(a)

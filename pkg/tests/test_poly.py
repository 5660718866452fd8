"""Coefficient field and polynomial layer: ring ops, gcd, Frobenius tools."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ahweyl.fields import ExactDivisionError, FieldMismatchError, FieldSpec, QQ
from ahweyl.poly import NEG_INF, NotIntegrable, Poly

GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
GF5 = FieldSpec(5)


def P(field, *coeffs):
    return Poly(field, coeffs)


def random_poly(rng, field, max_deg=6):
    deg = rng.randrange(-1, max_deg + 1)
    if deg < 0:
        return Poly.zero(field)
    if field.is_char_zero:
        coeffs = [rng.randrange(-9, 10) for _ in range(deg + 1)]
    else:
        coeffs = [rng.randrange(field.p) for _ in range(deg + 1)]
    return Poly(field, coeffs)


class TestFieldSpec:
    def test_characteristic_must_be_zero_or_prime(self):
        FieldSpec(0)
        FieldSpec(7)
        with pytest.raises(ValueError):
            FieldSpec(4)
        with pytest.raises(ValueError):
            FieldSpec(1)

    def test_char_p_residues_reduced(self):
        assert GF3.from_int(7) == 1
        assert GF3.neg(1) == 2
        assert GF3.inv(2) == 2

    def test_no_floats(self):
        with pytest.raises(TypeError):
            QQ.coerce(0.5)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            P(QQ, 1) + P(GF3, 1)


class TestRingOps:
    def test_factorization_identity(self):
        # (x^2 - 1) / (x - 1) = x + 1 rem 0
        f = P(QQ, -1, 0, 1)
        g = P(QQ, -1, 1)
        q, r = divmod(f, g)
        assert q == P(QQ, 1, 1)
        assert r.is_zero()

    def test_mul_by_zero(self):
        f = P(QQ, 1, 2, 3)
        assert (f * Poly.zero(QQ)).is_zero()

    def test_freshman_dream_gf2(self):
        # term-by-term oracle: (x+1)^2 = x^2 + 2x + 1 = x^2 + 1 over GF(2)
        f = P(GF2, 1, 1)
        assert f * f == P(GF2, 1, 0, 1)

    def test_zero_degree_marker(self):
        assert Poly.zero(QQ).degree == NEG_INF
        assert Poly.zero(QQ).degree < 0
        assert P(QQ, 5).degree == 0

    def test_canonical_trailing_zeros(self):
        assert P(QQ, 1, 2, 0, 0) == P(QQ, 1, 2)

    def test_exact_div_flagged_distinctly(self):
        f = P(QQ, 1, 0, 1)
        g = P(QQ, 1, 1)
        with pytest.raises(ExactDivisionError):
            f.exact_div(g)
        with pytest.raises(ZeroDivisionError):
            divmod(f, Poly.zero(QQ))

    @pytest.mark.parametrize("field", [QQ, GF2, GF3, GF5])
    def test_ring_axioms_random(self, field):
        rng = random.Random(101)
        for _ in range(25):
            a, b, c = (random_poly(rng, field) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a

    @pytest.mark.parametrize("field", [QQ, GF3, GF5])
    def test_divmod_contract_random(self, field):
        rng = random.Random(202)
        for _ in range(40):
            f = random_poly(rng, field, 8)
            g = random_poly(rng, field, 5)
            if g.is_zero():
                continue
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree


class TestDerivative:
    def test_power_rule(self):
        assert P(QQ, 0, 0, 0, 1).derivative() == P(QQ, 0, 0, 3)

    def test_xp_in_char_p(self):
        assert Poly.monomial(GF3, 1, 3).derivative().is_zero()

    def test_constant(self):
        assert P(QQ, 7).derivative().is_zero()


class TestGcd:
    def test_monomials(self):
        assert Poly.monomial(QQ, 1, 2).gcd_monic(Poly.monomial(QQ, 1, 3)) == Poly.monomial(QQ, 1, 2)

    def test_common_factor(self):
        assert P(QQ, -1, 0, 1).gcd_monic(P(QQ, -1, 1)) == P(QQ, -1, 1)

    def test_euclid_oracle_gf3(self):
        # Euclid by hand: x^3 - x = x*(x^2 - 1), so gcd(x^3 - x, x^2 - 1) = x^2 - 1
        f = P(GF3, 0, -1, 0, 1)
        g = P(GF3, -1, 0, 1)
        assert f.gcd_monic(g) == g.monic()

    def test_gcd_with_zero(self):
        assert P(QQ, 2, 2).gcd_monic(Poly.zero(QQ)) == P(QQ, 1, 1)
        with pytest.raises(ValueError):
            Poly.zero(QQ).gcd_monic(Poly.zero(QQ))

    @pytest.mark.parametrize("field", [QQ, GF3])
    def test_gcd_divides_both(self, field):
        rng = random.Random(303)
        for _ in range(30):
            f = random_poly(rng, field, 6)
            g = random_poly(rng, field, 6)
            if f.is_zero() and g.is_zero():
                continue
            d = f.gcd_monic(g)
            assert d.is_monic()
            assert d.divides(f) and d.divides(g)

    def test_xgcd_bezout(self):
        rng = random.Random(404)
        for field in (QQ, GF5):
            for _ in range(20):
                f = random_poly(rng, field, 5)
                g = random_poly(rng, field, 5)
                if f.is_zero() and g.is_zero():
                    continue
                d, s, t = f.xgcd(g)
                assert s * f + t * g == d


class TestFrobenius:
    def test_split_p3_x4(self):
        # x^4 = (x^3) * x: component f_1(u) = u, others 0
        parts = Poly.monomial(GF3, 1, 4).frobenius_split()
        assert parts[1] == Poly.x(GF3)
        assert parts[0].is_zero() and parts[2].is_zero()

    def test_split_in_base(self):
        f = Poly.monomial(GF3, 2, 6) + P(GF3, 1)  # 2x^6 + 1 in F[x^3]
        parts = f.frobenius_split()
        assert parts[0] == P(GF3, 1, 0, 2)
        assert parts[1].is_zero() and parts[2].is_zero()

    def test_split_p2_bucketing_oracle(self):
        # exponent buckets: x^3 + x^2 + 1 -> f_0 = u + 1, f_1 = u
        f = P(GF2, 1, 0, 1, 1)
        parts = f.frobenius_split()
        assert parts[0] == P(GF2, 1, 1)
        assert parts[1] == P(GF2, 0, 1)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_reassembly_random(self, p):
        field = FieldSpec(p)
        rng = random.Random(p * 1000)
        for _ in range(25):
            f = random_poly(rng, field, 3 * p)
            assert Poly.frobenius_assemble(field, f.frobenius_split()) == f

    def test_pth_root(self):
        f = (P(GF3, 1, 1) ** 3)
        assert f.pth_root() == P(GF3, 1, 1)
        with pytest.raises(ExactDivisionError):
            Poly.x(GF3).pth_root()

    def test_char_zero_rejected(self):
        with pytest.raises(ValueError):
            P(QQ, 1).frobenius_split()


class TestPartialP:
    def test_x_cubed_p3(self):
        assert Poly.monomial(GF3, 1, 3).partial_p() == Poly.one(GF3)

    def test_x_squared_p3(self):
        assert Poly.monomial(GF3, 1, 2).partial_p().is_zero()

    def test_bucket_rule_p2(self):
        # x^6: j=3 bucket, 3*x^4 = x^4 over GF(2)
        assert Poly.monomial(GF2, 1, 6).partial_p() == Poly.monomial(GF2, 1, 4)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_monomial_bucket_formula(self, p):
        field = FieldSpec(p)
        for n in range(4 * p + 1):
            j, i = divmod(n, p)
            got = Poly.monomial(field, 1, n).partial_p()
            if j == 0 or j % p == 0:
                assert got.is_zero()
            else:
                assert got == Poly.monomial(field, j, (j - 1) * p + i)


class TestAntiderivative:
    def test_char_zero(self):
        assert P(QQ, 0, 0, 3).antiderivative() == Poly.monomial(QQ, 1, 3)

    def test_char_zero_constant_term_zero(self):
        g = P(QQ, 5, 1).antiderivative()
        assert g.constant_term() == 0
        assert g.derivative() == P(QQ, 5, 1)

    def test_obstruction_p3(self):
        res = Poly.monomial(GF3, 1, 2).antiderivative()
        assert isinstance(res, NotIntegrable)
        assert res.obstruction == Poly.one(GF3)

    def test_integrable_p3(self):
        assert P(GF3, 0, 2).antiderivative() == Poly.monomial(GF3, 1, 2)

    @pytest.mark.parametrize("field", [QQ, GF2, GF3, GF5])
    def test_roundtrips(self, field):
        rng = random.Random(505)
        for _ in range(30):
            f = random_poly(rng, field, 12)
            g = f.antiderivative()
            if isinstance(g, NotIntegrable):
                fixed = f - g.obstruction * Poly.monomial(field, 1, field.p - 1)
                g2 = fixed.antiderivative()
                assert not isinstance(g2, NotIntegrable)
                assert g2.derivative() == fixed
                continue
            assert g.derivative() == f
            # derivative then antiderivative recovers f minus constant term (char 0)
            if field.is_char_zero:
                back = f.derivative().antiderivative()
                assert back == f - Poly.constant(field, f.constant_term())


class TestSquarefree:
    @pytest.mark.parametrize(
        "field,factors",
        [
            (QQ, [((-1, 1), 1), ((1, 1), 3)]),
            (GF3, [((0, 1), 3), ((1, 1), 1)]),
            (GF3, [((0, 1), 4)]),
            (GF2, [((1, 1), 2), ((0, 1), 6)]),
            (GF5, [((1, 0, 1), 5)]),
        ],
    )
    def test_known_products(self, field, factors):
        f = Poly.one(field)
        for coeffs, mult in factors:
            f = f * (Poly(field, coeffs) ** mult)
        dec = f.squarefree_decomposition()
        prod = Poly.one(field)
        for g, m in dec:
            prod = prod * g**m
            assert g.is_monic()
            assert not g.derivative().is_zero()
            assert g.gcd_monic(g.derivative()).is_one()
        assert prod == f.monic()
        got = sorted((tuple(g.coeffs), m) for g, m in dec)
        want = sorted((tuple(Poly(field, c).coeffs), m) for c, m in factors)
        assert got == want

    @pytest.mark.parametrize("field", [QQ, GF2, GF3, GF5])
    def test_random_reassembly(self, field):
        rng = random.Random(606)
        for _ in range(20):
            f = Poly.one(field)
            for _ in range(rng.randrange(1, 4)):
                g = random_poly(rng, field, 2)
                if g.is_zero() or g.is_constant():
                    continue
                f = f * g ** rng.randrange(1, 5)
            if f.is_constant():
                continue
            dec = f.squarefree_decomposition()
            prod = Poly.one(field)
            for g, m in dec:
                prod = prod * g**m
            assert prod == f.monic()
            # components pairwise coprime and squarefree (over a prime field
            # a squarefree nonconstant polynomial has nonzero derivative)
            for i, (g, _) in enumerate(dec):
                assert not g.derivative().is_zero()
                assert g.gcd_monic(g.derivative()).is_one()
                for g2, _ in dec[i + 1 :]:
                    assert g.gcd_monic(g2).is_one()


@given(
    st.lists(st.integers(-20, 20), max_size=7),
    st.lists(st.integers(-20, 20), max_size=7),
)
@settings(max_examples=60, deadline=None)
def test_mul_commutes_hypothesis(a, b):
    f, g = Poly(QQ, a), Poly(QQ, b)
    assert f * g == g * f


@given(st.lists(st.integers(0, 4), min_size=1, max_size=12))
@settings(max_examples=60, deadline=None)
def test_frobenius_roundtrip_hypothesis(coeffs):
    f = Poly(GF5, coeffs)
    assert Poly.frobenius_assemble(GF5, f.frobenius_split()) == f


def test_fraction_coefficients_stay_reduced():
    f = P(QQ, Fraction(2, 4))
    assert f.coeffs == (Fraction(1, 2),)

"""Text grammar: parsing, printing, and round trips."""

import random

import pytest

from ahweyl.centerpoly import CenterPoly
from ahweyl.context import AhContext
from ahweyl.fields import FieldSpec, QQ
from ahweyl.parse import ParseError, parse_center, parse_factors, parse_poly, parse_weyl
from ahweyl.poly import Poly
from ahweyl.weyl import WeylElement

GF3 = FieldSpec(3)


class TestParsePoly:
    def test_spec_grammar_example(self):
        got = parse_poly("x^3 - 2*x + 1", QQ)
        assert got == Poly(QQ, [1, -2, 0, 1])

    def test_char_p_reduction_on_parse(self):
        assert parse_poly("5*x + 7", GF3) == Poly(GF3, [1, 2])

    def test_rationals(self):
        assert parse_poly("1/2*x - 3/4", QQ) == Poly(
            QQ, [__import__("fractions").Fraction(-3, 4), __import__("fractions").Fraction(1, 2)]
        )

    def test_parentheses_and_products(self):
        assert parse_poly("(x+1)*(x-1)", QQ) == Poly(QQ, [-1, 0, 1])

    def test_u_variable(self):
        assert parse_poly("u^2 + 1", GF3, var="u") == Poly(GF3, [1, 0, 1])
        with pytest.raises(ParseError):
            parse_poly("x + 1", GF3, var="u")

    def test_error_position(self):
        with pytest.raises(ParseError) as e:
            parse_poly("x + @", QQ)
        assert e.value.position == 4

    def test_y_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("x*y", QQ)


class TestParseWeyl:
    def test_spec_shape(self):
        got = parse_weyl("(x^2+1)*y^3 + 2*x*y + 5", QQ)
        want = WeylElement(
            QQ,
            {
                3: Poly(QQ, [1, 0, 1]),
                1: Poly(QQ, [0, 2]),
                0: Poly(QQ, [5]),
            },
        )
        assert got == want

    def test_reorders_yx(self):
        got = parse_weyl("y*x", QQ)
        assert got == WeylElement(QQ, {1: Poly.x(QQ), 0: Poly.one(QQ)})

    def test_negative_leading(self):
        got = parse_weyl("-x^2*y + 1", QQ)
        assert got.coefficient(1) == Poly(QQ, [0, 0, -1])


class TestRoundTrip:
    @pytest.mark.parametrize("field", [QQ, GF3, FieldSpec(5)])
    def test_poly_roundtrip(self, field):
        rng = random.Random(70)
        for _ in range(40):
            deg = rng.randrange(0, 8)
            if field.is_char_zero:
                coeffs = [rng.randrange(-9, 10) for _ in range(deg + 1)]
            else:
                coeffs = [rng.randrange(field.p) for _ in range(deg + 1)]
            f = Poly(field, coeffs)
            assert parse_poly(str(f), field) == f

    def test_poly_with_fractions_roundtrip(self):
        from fractions import Fraction

        f = Poly(QQ, [Fraction(1, 2), Fraction(-3, 7), 0, 2])
        assert parse_poly(str(f), QQ) == f

    @pytest.mark.parametrize("field", [QQ, GF3])
    def test_weyl_roundtrip(self, field):
        rng = random.Random(71)
        for _ in range(40):
            terms = {}
            for i in range(rng.randrange(1, 5)):
                deg = rng.randrange(-1, 5)
                if deg < 0:
                    continue
                if field.is_char_zero:
                    coeffs = [rng.randrange(-9, 10) for _ in range(deg + 1)]
                else:
                    coeffs = [rng.randrange(field.p) for _ in range(deg + 1)]
                terms[i] = Poly(field, coeffs)
            a = WeylElement(field, terms)
            assert parse_weyl(str(a), field) == a

    def test_center_roundtrip(self):
        ctx = AhContext(Poly(GF3, [0, 1, 1]))
        rng = random.Random(72)
        for _ in range(15):
            z = CenterPoly(
                GF3,
                {(rng.randrange(3), rng.randrange(3)): rng.randrange(3) for _ in range(4)},
            )
            assert parse_center(str(z), ctx) == z


class TestParseFactors:
    def test_powers(self):
        got = parse_factors("x^2,x-1", QQ)
        assert got == [(Poly.x(QQ), 2), (Poly(QQ, [-1, 1]), 1)]

    def test_compound_base(self):
        got = parse_factors("(x^2+1)^3", QQ)
        assert got == [(Poly(QQ, [1, 0, 1]), 3)]

    def test_power_inside_poly(self):
        got = parse_factors("x^2+1", QQ)
        assert got == [(Poly(QQ, [1, 0, 1]), 1)]

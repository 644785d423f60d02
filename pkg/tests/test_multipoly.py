"""Sparse polynomial arithmetic, the text grammar, canonical printing."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratgrowth.algebra.domains import CoeffDomain
from ratgrowth.algebra.fqpoly import FqPoly
from ratgrowth.algebra.multipoly import (
    MultiPoly,
    ParseError,
    monomials_of_degree,
    monomials_up_to_degree,
    poly_parse,
)

ZZ = CoeffDomain.integers()
QQ = CoeffDomain.rationals()
GF5 = CoeffDomain.prime_field(5)
F2T = CoeffDomain.poly_ring(2)


class TestParser:
    def test_conic(self):
        f = poly_parse("x0*x2 - x1^2", 3, ZZ)
        assert len(f.terms) == 2
        assert f.degree == 2
        assert f.is_homogeneous

    def test_zero(self):
        f = poly_parse("0", 3, ZZ)
        assert f.is_zero
        assert f.terms == {}

    def test_alias_cuspidal(self):
        f = poly_parse("y^2*z - x^3", 3, ZZ)
        g = poly_parse("x1^2*x2 - x0^3", 3, ZZ)
        assert f == g
        assert len(f.terms) == 2

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            poly_parse("x0 + ^2", 3, ZZ)
        assert err.value.pos == 5

    def test_out_of_range_variable(self):
        with pytest.raises(ParseError):
            poly_parse("x5", 3, ZZ)
        with pytest.raises(ParseError):
            poly_parse("z", 2, ZZ)

    def test_t_reserved(self):
        f = poly_parse("t*x0 + x1", 2, F2T)
        assert f.degree == 1
        with pytest.raises(ParseError):
            poly_parse("t*x0", 2, ZZ)

    def test_ff_coefficients(self):
        f = poly_parse("(t^2+1)*x0*x1 + t*x2^2", 3, F2T)
        t = FqPoly.t(2)
        assert f.coefficient((1, 1, 0)) == t**2 + 1
        assert f.coefficient((0, 0, 2)) == t

    def test_rational_division(self):
        f = poly_parse("1/2*x0 + 3/4", 2, QQ)
        assert f.coefficient((1, 0)) == Fraction(1, 2)
        assert f.coefficient((0, 0)) == Fraction(3, 4)
        with pytest.raises(ParseError):
            poly_parse("x0/x1", 2, QQ)

    def test_parens_and_pow(self):
        f = poly_parse("(x0 + x1)^2", 2, ZZ)
        g = poly_parse("x0^2 + 2*x0*x1 + x1^2", 2, ZZ)
        assert f == g

    def test_unexpected_trailing(self):
        with pytest.raises(ParseError):
            poly_parse("x0 x1", 3, ZZ)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ParseError):
            poly_parse("x0^-2", 3, ZZ)


def random_poly(dom, nvars, rng, max_deg=3, nterms=4):
    terms = {}
    for _ in range(rng.randint(0, nterms)):
        exps = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        terms[exps] = dom.sample(rng)
    return MultiPoly(dom, nvars, terms)


ALL_DOMAINS = [ZZ, QQ, GF5, F2T, CoeffDomain.rational_functions(3)]


class TestArithmetic:
    @pytest.mark.parametrize("dom", ALL_DOMAINS)
    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10**6))
    def test_ring_axioms(self, dom, seed):
        rng = random.Random(seed)
        f, g, h = (random_poly(dom, 2, rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)

    def test_pow(self):
        f = poly_parse("x0 + x1", 2, ZZ)
        assert f**3 == f * f * f
        assert (f**0).is_constant

    def test_exact_div(self):
        f = poly_parse("x0^2 - x1^2", 2, ZZ)
        g = poly_parse("x0 - x1", 2, ZZ)
        assert f.exact_div(g) == poly_parse("x0 + x1", 2, ZZ)
        with pytest.raises(ArithmeticError):
            poly_parse("x0^2 + x1", 2, ZZ).exact_div(g)

    def test_evaluate(self):
        f = poly_parse("x0*x2 - x1^2", 3, ZZ)
        assert f.evaluate((1, 2, 4)) == 0
        assert f.evaluate((1, 1, 2)) == 1

    def test_translate_matches_evaluation(self):
        rng = random.Random(5)
        for _ in range(20):
            f = random_poly(ZZ, 2, rng)
            a = (rng.randint(-3, 3), rng.randint(-3, 3))
            shifted = f.translate(a)
            x = (rng.randint(-3, 3), rng.randint(-3, 3))
            assert shifted.evaluate(x) == f.evaluate((x[0] + a[0], x[1] + a[1]))

    def test_partial_derivative(self):
        f = poly_parse("x0^3*x1 + x1^2", 2, ZZ)
        assert f.partial(0) == poly_parse("3*x0^2*x1", 2, ZZ)
        assert f.partial(1) == poly_parse("x0^3 + 2*x1", 2, ZZ)

    def test_homogenize_dehomogenize(self):
        f = poly_parse("x0^2 + x1 - 3", 2, ZZ)
        h = f.homogenize(position=2)
        assert h.is_homogeneous and h.nvars == 3
        assert h.dehomogenize(2) == f

    def test_permute_variables(self):
        f = poly_parse("x0^2*x1", 2, ZZ)
        assert f.permute_variables([1, 0]) == poly_parse("x1^2*x0", 2, ZZ)

    def test_content_primitive(self):
        f = poly_parse("6*x0 - 9*x1", 2, ZZ)
        assert f.content() == 3
        p = f.primitive_part()
        assert p == poly_parse("2*x0 - 3*x1", 2, ZZ)
        assert (-f).primitive_part() == p  # sign normalization

    def test_homogeneous_parts(self):
        f = poly_parse("x0^2 + x0 + 1", 2, ZZ)
        assert f.homogeneous_part(2) == poly_parse("x0^2", 2, ZZ)
        assert f.lowest_degree() == 0


class TestCanonicalText:
    @pytest.mark.parametrize("dom", ALL_DOMAINS)
    def test_roundtrip_random(self, dom):
        rng = random.Random(11)
        for _ in range(30):
            f = random_poly(dom, 3, rng)
            assert poly_parse(f.to_string(), 3, dom) == f

    def test_roundtrip_is_identity_on_canonical(self):
        texts = ["x0*x2 - x1^2", "0", "x0^3 + 3*x0*x1*x2 - 7"]
        for text in texts:
            f = poly_parse(text, 3, ZZ)
            assert poly_parse(f.to_string(), 3, ZZ) == f

    def test_grevlex_order(self):
        monos = monomials_of_degree(3, 2)
        assert monos[0] == (2, 0, 0)
        assert monos == ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2))

    def test_monomial_counts(self):
        assert len(monomials_of_degree(3, 3)) == 10
        assert len(monomials_up_to_degree(3, 2)) == 10


class TestInvariants:
    def test_no_zero_coefficients_stored(self):
        f = poly_parse("x0 - x0", 2, ZZ)
        assert f.is_zero and not f.terms

    def test_homogeneous_flag_consistency(self):
        f = poly_parse("x0^2 + x1", 2, ZZ)
        assert not f.is_homogeneous
        degs = {sum(e) for e in f.terms}
        assert len(degs) > 1

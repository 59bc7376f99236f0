"""Exact polynomial arithmetic against a reference convolution.

The oracle is a test-local dict convolution and Fraction evaluation at
random points; the packed big-integer paths in the library must agree with
both on every randomized input, including mixed signs and the homogeneous
fast path.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotfield.errors import NonLaurentResult
from knotfield.laurent import InexactDivision, LaurentFraction, Polynomial


def naive_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    out = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return Polynomial(a.nvars, out)


@st.composite
def polynomials(draw, nvars=None, max_terms=6, max_exp=4, max_coeff=20, signed=True):
    n = nvars if nvars is not None else draw(st.integers(1, 4))
    nterms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(nterms):
        exps = tuple(draw(st.integers(0, max_exp)) for _ in range(n))
        low = -max_coeff if signed else 1
        terms[exps] = draw(st.integers(low, max_coeff))
    return Polynomial(n, terms)


@st.composite
def polynomial_pairs(draw, **kwargs):
    n = draw(st.integers(1, 4))
    return draw(polynomials(nvars=n, **kwargs)), draw(polynomials(nvars=n, **kwargs))


class TestPolynomialRing:
    @settings(max_examples=300, deadline=None)
    @given(polynomial_pairs())
    def test_mul_matches_naive(self, pair):
        a, b = pair
        assert a * b == naive_mul(a, b)

    @settings(max_examples=200, deadline=None)
    @given(polynomial_pairs())
    def test_mul_commutes(self, pair):
        a, b = pair
        assert a * b == b * a

    @settings(max_examples=200, deadline=None)
    @given(polynomial_pairs(signed=False))
    def test_exact_div_recovers_factor(self, pair):
        a, b = pair
        if a.is_zero():
            return
        assert (a * b).exact_div(a) == b

    @settings(max_examples=200, deadline=None)
    @given(polynomial_pairs())
    def test_exact_div_signed(self, pair):
        a, b = pair
        if a.is_zero():
            return
        assert (a * b).exact_div(a) == b

    @settings(max_examples=200, deadline=None)
    @given(polynomials(), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
    def test_evaluation_is_ring_hom(self, poly, point):
        values = point[: poly.nvars]
        square = poly * poly
        assert square.evaluate(values) == poly.evaluate(values) ** 2

    def test_homogeneous_path(self):
        # both operands homogeneous triggers the dropped-variable packing
        a = Polynomial(3, {(2, 0, 0): 3, (0, 2, 0): 1, (0, 0, 2): 2})
        b = Polynomial(3, {(1, 1, 0): 1, (0, 1, 1): 5})
        assert a.is_homogeneous() and b.is_homogeneous()
        assert a * b == naive_mul(a, b)
        assert (a * b).exact_div(a) == b

    def test_pow(self):
        x = Polynomial.variable(1, 2)
        y = Polynomial.variable(2, 2)
        p = (x + y) ** 5
        assert p.terms[(2, 3)] == 10
        assert p.terms[(5, 0)] == 1
        assert (x + y) ** 0 == Polynomial.constant(2, 1)

    def test_division_failure(self):
        x = Polynomial.variable(1, 2)
        y = Polynomial.variable(2, 2)
        one = Polynomial.constant(2, 1)
        with pytest.raises(InexactDivision):
            (x + one).exact_div(y + one)
        with pytest.raises(InexactDivision):
            (x * x + one).exact_div(x + one)
        with pytest.raises(ZeroDivisionError):
            x.exact_div(Polynomial.zero(2))

    def test_coefficient_divisibility_failure(self):
        x = Polynomial.variable(1, 1)
        three_x = Polynomial(1, {(1,): 3})
        with pytest.raises(InexactDivision):
            x.exact_div(Polynomial.constant(1, 2))
        assert three_x.exact_div(Polynomial.constant(1, 3)) == x

    def test_render(self):
        p = Polynomial(2, {(0, 1): 1, (0, 0): 1})
        assert p.render() == "x2+1"
        q = Polynomial(3, {(0, 2, 0): 1, (0, 0, 2): 1})
        assert q.render() == "x2^2+x3^2"
        r = Polynomial(2, {(1, 0): -2, (0, 0): 1})
        assert r.render() == "-2*x1+1"
        assert Polynomial.zero(2).render() == "0"

    def test_validation(self):
        with pytest.raises(ValueError):
            Polynomial(2, {(1,): 1})
        with pytest.raises(ValueError):
            Polynomial(2, {(-1, 0): 1})


class TestLaurentFraction:
    def test_reduction_at_construction(self):
        num = Polynomial(2, {(2, 1): 1, (1, 1): 1})  # x1^2 x2 + x1 x2
        frac = LaurentFraction(num, (1, 3))
        assert frac.denominator == (0, 2)
        assert frac.numerator == Polynomial(2, {(1, 0): 1, (0, 0): 1})
        assert frac.is_reduced()

    def test_zero_canonical(self):
        frac = LaurentFraction(Polynomial.zero(2), (3, 1))
        assert frac.denominator == (0, 0)
        assert frac.is_zero()

    def test_mul_cancels(self):
        x1 = LaurentFraction.unit_variable(1, 2)
        inv = LaurentFraction(Polynomial.constant(2, 1), (1, 0))
        product = x1 * inv
        assert product.numerator == Polynomial.constant(2, 1)
        assert product.denominator == (0, 0)

    def test_arithmetic_matches_fraction_evaluation(self):
        rng = random.Random(40)
        for _ in range(150):
            n = rng.randint(1, 3)
            fracs = []
            for _ in range(2):
                terms = {
                    tuple(rng.randint(0, 3) for _ in range(n)): rng.randint(-8, 8)
                    for _ in range(rng.randint(1, 4))
                }
                fracs.append(
                    LaurentFraction(Polynomial(n, terms), tuple(rng.randint(0, 2) for _ in range(n)))
                )
            a, b = fracs
            point = [Fraction(rng.randint(1, 7)) for _ in range(n)]
            assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
            assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)

    def test_divide_exact(self):
        x2 = Polynomial.variable(2, 2)
        one = Polynomial.constant(2, 1)
        # (x2 + 1) / x1 divided by x2 + 1 gives 1/x1
        frac = LaurentFraction(x2 + one, (1, 0))
        divisor = LaurentFraction.from_polynomial(x2 + one)
        quotient = frac.divide_exact(divisor)
        assert quotient.numerator == one
        assert quotient.denominator == (1, 0)

    def test_divide_exact_failure_is_domain_error(self):
        x1 = LaurentFraction.unit_variable(1, 2)
        x2 = Polynomial.variable(2, 2)
        one = Polynomial.constant(2, 1)
        with pytest.raises(NonLaurentResult):
            LaurentFraction.from_polynomial(x2 + one).divide_exact(x1 + LaurentFraction.from_polynomial(one))

    def test_render(self):
        num = Polynomial(3, {(0, 2, 0): 1, (0, 0, 2): 1})
        frac = LaurentFraction(num, (1, 0, 0))
        assert frac.render() == "(x2^2+x3^2)/x1"
        assert LaurentFraction.unit_variable(2, 3).render() == "x2"
        multi = LaurentFraction(Polynomial.constant(2, 2), (2, 1))
        assert multi.render() == "2/(x1^2*x2)"

    def test_power(self):
        x1 = LaurentFraction.unit_variable(1, 2)
        cube = x1**3
        assert cube.numerator == Polynomial(2, {(3, 0): 1})
        with pytest.raises(ValueError):
            x1**-1

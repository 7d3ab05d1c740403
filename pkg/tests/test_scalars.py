"""Unit and property tests for the exact scalar tower."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcfam.scalars import (
    INFINITY,
    ORDER_OF_ZERO,
    GaussianRational,
    LaurentPoly,
    PoleAtPoint,
    QI_I,
    QI_ONE,
    QI_ZERO,
    RationalFunction,
    RF_ONE,
    RF_Z,
    RF_ZERO,
    UnsplitQuadratic,
    gaussian_sqrt,
    poly_roots,
)

fractions_ = st.fractions(min_value=-20, max_value=20, max_denominator=9)
gaussians = st.builds(GaussianRational, fractions_, fractions_)
nonzero_gaussians = gaussians.filter(lambda g: not g.is_zero())


def lp(d):
    return LaurentPoly({e: GaussianRational(c) for e, c in d.items()})


laurents = st.dictionaries(st.integers(-4, 4), st.integers(-9, 9), max_size=4).map(lp)
nonzero_laurents = laurents.filter(lambda p: not p.is_zero())


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------


class TestGaussianRational:
    def test_basic_arithmetic(self):
        a = GaussianRational(Fraction(1, 2), 3)
        b = GaussianRational(2, Fraction(-1, 3))
        assert a + b == GaussianRational(Fraction(5, 2), Fraction(8, 3))
        assert a * b == GaussianRational(2, Fraction(35, 6))
        assert (a / b) * b == a
        assert -a + a == QI_ZERO

    def test_i_squares_to_minus_one(self):
        assert QI_I * QI_I == -QI_ONE

    def test_conjugate_multiplication_is_norm(self):
        g = GaussianRational(3, 4)
        assert g * g.conjugate() == GaussianRational(25)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QI_ONE / QI_ZERO

    @given(gaussians)
    def test_parse_str_round_trip(self, g):
        assert GaussianRational.parse(str(g)) == g

    def test_parse_forms(self):
        assert GaussianRational.parse("3/4") == GaussianRational(Fraction(3, 4))
        assert GaussianRational.parse("-2+1/3*i") == GaussianRational(-2, Fraction(1, 3))
        assert GaussianRational.parse("i") == QI_I

    @given(gaussians, gaussians, gaussians)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @given(nonzero_gaussians)
    def test_inverse(self, g):
        assert g * g.inverse() == QI_ONE

    @given(gaussians)
    def test_sqrt_of_square(self, g):
        r = gaussian_sqrt(g * g)
        assert r is not None and r * r == g * g

    def test_sqrt_failures(self):
        assert gaussian_sqrt(GaussianRational(2)) is None
        assert gaussian_sqrt(GaussianRational(-3)) is None
        assert gaussian_sqrt(GaussianRational(-1)) == QI_I or gaussian_sqrt(
            GaussianRational(-1)
        ) == -QI_I


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class TestLaurentPoly:
    def test_orders(self):
        p = lp({-2: 3, 1: 1})
        assert p.ord_zero() == -2
        assert p.ord_infinity() == -1
        assert lp({}).ord_zero() == ORDER_OF_ZERO
        assert lp({}).ord_infinity() == ORDER_OF_ZERO

    @given(laurents, laurents)
    def test_ord_zero_additive(self, a, b):
        prod = a * b
        if a.is_zero() or b.is_zero():
            assert prod.is_zero()
        else:
            assert prod.ord_zero() == a.ord_zero() + b.ord_zero()
            assert prod.ord_infinity() == a.ord_infinity() + b.ord_infinity()

    @given(laurents, laurents, laurents)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)

    def test_divmod(self):
        a = lp({3: 1, 0: -1})  # z^3 - 1
        b = lp({1: 1, 0: -1})  # z - 1
        q, r = a.divmod_ordinary(b)
        assert r.is_zero()
        assert q * b == a

    @given(nonzero_laurents, nonzero_laurents)
    def test_gcd_divides(self, a, b):
        a, b = a.shift(-a.min_exp()), b.shift(-b.min_exp())
        g = LaurentPoly.gcd_ordinary(a, b)
        assert a.divmod_ordinary(g)[1].is_zero()
        assert b.divmod_ordinary(g)[1].is_zero()

    @given(laurents)
    def test_json_round_trip(self, p):
        assert LaurentPoly.from_json(p.to_json()) == p

    def test_evaluate(self):
        p = lp({2: 1, 0: -4})
        assert p.evaluate(GaussianRational(3)) == GaussianRational(5)
        with pytest.raises(PoleAtPoint):
            lp({-1: 1}).evaluate(QI_ZERO)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class TestRationalFunction:
    def test_canonical_form(self):
        f = RationalFunction(lp({2: 2, 1: 2}), lp({1: 4}))
        # (2z^2+2z)/(4z) = (z+1)/2: monic denominator, coprime.
        assert f.num == lp({1: Fraction(1, 2), 0: Fraction(1, 2)})
        assert f.den == lp({0: 1})

    def test_field_ops(self):
        f = RF_Z / (RF_Z + RF_ONE)
        g = RF_ONE / (RF_Z + RF_ONE)
        assert f + g == RF_ONE
        assert f / f == RF_ONE

    def test_ord_at(self):
        f = RF_Z * RF_Z / (RF_Z - RF_ONE)
        assert f.ord_at(QI_ZERO) == 2
        assert f.ord_at(QI_ONE) == -1
        assert f.ord_at(INFINITY) == -1
        assert RF_ZERO.ord_at(QI_ZERO) == ORDER_OF_ZERO

    @given(laurents, nonzero_laurents, laurents, nonzero_laurents)
    @settings(max_examples=40)
    def test_ord_additive_at_zero_and_infinity(self, a, b, c, d):
        f = RationalFunction(a, b)
        g = RationalFunction(c, d)
        if f.is_zero() or g.is_zero():
            return
        for p in (QI_ZERO, INFINITY):
            assert (f * g).ord_at(p) == f.ord_at(p) + g.ord_at(p)

    @given(laurents, nonzero_laurents)
    @settings(max_examples=40)
    def test_principal_divisor_sums_to_zero(self, a, b):
        f = RationalFunction(a, b)
        if f.is_zero():
            return
        finite = f.num.degree() - f.den.degree()  # sum over all finite points
        assert finite + f.ord_at(INFINITY) == 0

    def test_evaluate_point(self):
        f = (RF_Z - RF_ONE) / (RF_Z + RF_ONE)
        assert f.evaluate_point(GaussianRational(3)) == GaussianRational(Fraction(1, 2))
        assert f.evaluate_point(INFINITY) == QI_ONE
        with pytest.raises(PoleAtPoint):
            f.evaluate_point(GaussianRational(-1))

    def test_compose(self):
        f = RF_ONE / RF_Z
        sq = LaurentPoly.monomial(2)
        assert f.compose(RationalFunction(sq)) == RF_ONE / (RF_Z * RF_Z)

    @given(laurents, nonzero_laurents)
    def test_json_round_trip(self, a, b):
        f = RationalFunction(a, b)
        assert RationalFunction.from_json(f.to_json()) == f


class TestRoots:
    def test_linear_and_quadratic(self):
        assert poly_roots(lp({1: 2, 0: -6})) == [GaussianRational(3)]
        roots = set(poly_roots(lp({2: 1, 0: 1})))  # z^2 + 1
        assert roots == {QI_I, -QI_I}

    def test_unsplit(self):
        with pytest.raises(UnsplitQuadratic):
            poly_roots(lp({2: 1, 0: -2}))  # z^2 - 2 has irrational roots

    def test_cubic_rejected(self):
        with pytest.raises(ValueError):
            poly_roots(lp({3: 1, 0: 1}))

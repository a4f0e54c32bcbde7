"""
Tests for sparse polynomials and the h-family.
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.algebra.poly import (
    Poly2,
    check_h_identity,
    d_dv1,
    divided_difference,
    format_poly,
    h_m,
    poly_arith,
    shift_v2,
    substitute,
    transport_h,
)
from src.algebra.scalar import SQRT2, Scalar

t = Poly2.var1()
s = Poly2.var2()

coefficients = st.sampled_from([Scalar(0), Scalar(1), Scalar(-2), Scalar(Fraction(1, 3)), SQRT2])
polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), coefficients, max_size=5
).map(Poly2)
univariate = st.dictionaries(
    st.tuples(st.integers(0, 4), st.just(0)), coefficients, max_size=4
).map(Poly2)
shifts = st.sampled_from([Scalar(0), Scalar(1), Scalar(-3), Scalar(Fraction(1, 2)), SQRT2])


class TestPolyArithmetic:
    """Ring operations and canonical form."""

    def test_zero_coefficients_are_dropped(self):
        p = Poly2({(1, 0): 0, (0, 1): 2})
        assert p == Poly2.monomial(0, 1, 2)
        assert len(p) == 1

    def test_binomial_square(self):
        assert (t + s) ** 2 == t * t + (t * s).scale(2) + s * s

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Poly2({(-1, 0): 1})

    def test_poly_arith(self):
        assert poly_arith(t, 1, "+") == t + Poly2.constant(1)
        assert poly_arith(t, t, "-").is_zero
        with pytest.raises(ValueError):
            poly_arith(t, t, "/")

    def test_equality_with_scalars(self):
        assert Poly2.constant(3) == 3
        assert Poly2.zero() == 0

    @given(polys, polys, polys)
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r


class TestShiftAndDerivative:
    """v2 -> v2 - m is a ring homomorphism; d/dv1 is a derivation."""

    def test_shift_of_s_squared(self):
        """(s - 1)^2 = s^2 - 2s + 1."""
        assert shift_v2(s * s, 1) == s * s - s.scale(2) + Poly2.constant(1)

    @given(polys, polys, shifts)
    def test_shift_is_multiplicative(self, p, q, m):
        assert shift_v2(p * q, m) == shift_v2(p, m) * shift_v2(q, m)

    @given(polys, shifts, shifts)
    def test_shifts_compose(self, p, m, n):
        assert shift_v2(shift_v2(p, m), n) == shift_v2(p, m + n)

    @given(polys, polys)
    def test_leibniz(self, p, q):
        assert d_dv1(p * q) == d_dv1(p) * q + p * d_dv1(q)

    def test_substitute_square(self):
        """p(u, s) -> p(t^2, s)."""
        p = t + s
        assert substitute(p, 1, 2, 1) == Poly2.monomial(2, 0) + s

    def test_substitute_rejects_cubes(self):
        with pytest.raises(ValueError):
            substitute(t, 1, 3, 1)


class TestHFamily:
    """h_m and the divided difference."""

    @given(univariate, shifts)
    def test_divided_difference_identity(self, h, alpha):
        """(t - alpha) q(t) = h(t) - h(alpha)."""
        q = divided_difference(h, alpha)
        h_at_alpha = h.evaluate_v1(alpha)
        assert (t - Poly2.constant(alpha)) * q == h - h_at_alpha

    def test_h_m_of_linear_h(self):
        """h = t: h_m = m t - m(m-1) alpha."""
        assert h_m(t, 1, 3) == t.scale(3) - Poly2.constant(6)
        assert h_m(t, 1, 0).is_zero
        assert h_m(t, 1, 1) == t

    def test_h_m_rejects_bivariate(self):
        with pytest.raises(ValueError):
            h_m(t * s, 0, 2)

    @given(univariate, shifts)
    def test_commutator_identity(self, h, alpha):
        for m in (-2, 0, 1, 3):
            for n in (-1, 2):
                result = check_h_identity(h, alpha, m, n)
                assert result.passed, f"residual {result.residual}"

    def test_transport_of_linear_h(self):
        """g(v) = h_2(2v)/2 = 2v - alpha for h = t."""
        assert transport_h(t, 3) == t.scale(2) - Poly2.constant(3)


class TestFormatting:
    """Text form used by the CLI."""

    @pytest.mark.parametrize(
        ("poly", "text"),
        [
            (Poly2.zero(), "0"),
            (t * t * s + Poly2.constant(-1), "v1^2*v2 - 1"),
            (s.scale(Scalar(1, 1)), "(1 + sqrt2)*v2"),
            (t.scale(Fraction(3, 2)) - s, "3/2*v1 - v2"),
        ],
    )
    def test_format_poly(self, poly, text):
        assert format_poly(poly) == text

    def test_custom_names(self):
        assert format_poly(t * s, ("u", "s")) == "u*s"

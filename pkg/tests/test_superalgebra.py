"""
Tests for the Ramond and NS super-BMS3 superalgebras and the embedding sigma.
"""

from fractions import Fraction

import pytest

from src.algebra.scalar import HALF_SQRT2, SQRT2, Scalar
from src.algebra.superalgebra import (
    C1_GEN,
    C2_GEN,
    AlgebraElement,
    CentralConvention,
    Generator,
    GeneratorKind,
    Parity,
    Sector,
    generators,
    sigma,
    superbracket,
)
from src.core.exceptions import SectorMismatchError

R, NS = Sector.RAMOND, Sector.NEVEU_SCHWARZ
L, W, G = GeneratorKind.L, GeneratorKind.W, GeneratorKind.G


def el(sector, kind, idx2=0, c=1):
    return AlgebraElement.of(sector, kind, idx2, c)


class TestGenerators:
    """Doubled indices, sector rules and enumeration."""

    def test_str(self):
        assert str(Generator(L, 6)) == "L[3]"
        assert str(Generator(G, 1)) == "G[1/2]"
        assert str(Generator(G, -3)) == "G[-3/2]"
        assert str(C1_GEN) == "C1"

    def test_half_integer_g_rejected_in_ramond(self):
        with pytest.raises(SectorMismatchError):
            el(R, G, 1)

    def test_integer_g_rejected_in_ns(self):
        with pytest.raises(SectorMismatchError):
            el(NS, G, 2)

    def test_half_integer_l_rejected(self):
        with pytest.raises(ValueError):
            el(R, L, 1)

    def test_enumeration_counts(self):
        """|idx2| <= 2: three L, three W, three Ramond G (two NS G) plus the centre."""
        assert len(generators(R, 1)) == 3 + 3 + 3 + 2
        assert len(generators(NS, 1)) == 3 + 3 + 2 + 2
        assert C1_GEN not in generators(R, 1, central=False)


class TestBrackets:
    """Structure constants."""

    def test_virasoro_central_term(self):
        """[L_2, L_-2] = -4 L_0 + 1/2 C1."""
        result = superbracket(el(R, L, 4), el(R, L, -4))
        assert str(result) == "-4*L[0] + 1/2*C1"

    def test_lw_central_term(self):
        result = superbracket(el(R, L, 6), el(R, W, -6))
        assert result.coefficient(Generator(W, 0)) == -6
        assert result.coefficient(C2_GEN) == 2

    def test_lg(self):
        """[L_1, G_{1/2}] = (1/2 - 1/2) G_{3/2} = 0, [L_1, G_{-1/2}] = -G_{1/2}."""
        assert superbracket(el(NS, L, 2), el(NS, G, 1)).is_zero
        assert superbracket(el(NS, L, 2), el(NS, G, -1)) == el(NS, G, 1, -1)

    def test_gg_printed_convention(self):
        """[G_{1/2}, G_{-1/2}] = 2 W_0 + 1/24 C2 as printed."""
        result = superbracket(el(NS, G, 1), el(NS, G, -1), CentralConvention.PRINTED)
        assert result == el(NS, W, 0, 2) + AlgebraElement(NS, {C2_GEN: Fraction(1, 24)})

    def test_gg_consistent_convention(self):
        """(1 - 4r^2)/12 vanishes at r = 1/2."""
        result = superbracket(el(NS, G, 1), el(NS, G, -1))
        assert result == el(NS, W, 0, 2)

    def test_ramond_g0_square(self):
        """[G_0, G_0] = 2 W_0 + C2/12."""
        result = superbracket(el(R, G, 0), el(R, G, 0))
        assert result.coefficient(Generator(W, 0)) == 2
        assert result.coefficient(C2_GEN) == Fraction(1, 12)

    def test_ww_and_central_brackets_vanish(self):
        assert superbracket(el(R, W, 2), el(R, W, -2)).is_zero
        assert superbracket(el(R, L, 2), el(R, GeneratorKind.C1)).is_zero

    def test_mixed_parity_is_bilinear(self):
        x = el(R, L, 2) + el(R, G, 0)
        y = el(R, G, 2)
        expected = superbracket(el(R, L, 2), y) + superbracket(el(R, G, 0), y)
        assert superbracket(x, y) == expected

    def test_sector_mismatch(self):
        with pytest.raises(SectorMismatchError):
            superbracket(el(R, L, 0), el(NS, L, 0))


class TestAlgebraElement:
    """Linear structure and parity."""

    def test_parity(self):
        assert el(R, L, 0).parity() is Parity.EVEN
        assert el(R, G, 0).parity() is Parity.ODD
        assert (el(R, L, 0) + el(R, G, 0)).parity() is Parity.MIXED
        assert AlgebraElement.zero(R).parity() is Parity.EVEN

    def test_homogeneous_parts(self):
        x = el(R, L, 0, 3) + el(R, G, 2, SQRT2)
        even, odd = x.homogeneous_parts()
        assert even == el(R, L, 0, 3)
        assert odd == el(R, G, 2, SQRT2)

    def test_cancellation(self):
        assert (el(R, W, 2) - el(R, W, 2)).is_zero

    def test_str_sorted_by_kind_then_index(self):
        x = el(NS, G, 1, -SQRT2) + el(NS, L, 6, 2) + AlgebraElement(NS, {C2_GEN: 1})
        assert str(x) == "2*L[3] - sqrt2*G[1/2] + C2"

    def test_str_mixed_coefficient(self):
        assert str(el(R, L, 0, Scalar(1, 1))) == "(1 + sqrt2)*L[0]"


class TestSigma:
    """The embedding NS -> Ramond."""

    def test_sigma_of_g(self):
        assert sigma(el(NS, G, 1)) == el(R, G, 2, HALF_SQRT2)

    def test_sigma_zero_mode_shift_consistent(self):
        """L_0 -> L_0/2 - C1/16, C1 -> 2 C1."""
        image = sigma(el(NS, L, 0))
        assert image.coefficient(Generator(L, 0)) == Fraction(1, 2)
        assert image.coefficient(C1_GEN) == Fraction(-1, 16)
        assert sigma(AlgebraElement(NS, {C1_GEN: 1})).coefficient(C1_GEN) == 2

    def test_sigma_printed_has_no_shift(self):
        image = sigma(el(NS, L, 0), CentralConvention.PRINTED)
        assert image == el(R, L, 0, Fraction(1, 2))

    def test_sigma_is_homomorphism_on_virasoro_pair(self):
        x, y = el(NS, L, 4), el(NS, L, -4)
        assert sigma(superbracket(x, y)) == superbracket(sigma(x), sigma(y))

    def test_sigma_is_homomorphism_on_g_pair(self):
        x, y = el(NS, G, 3), el(NS, G, -3)
        assert sigma(superbracket(x, y)) == superbracket(sigma(x), sigma(y))

    def test_sigma_rejects_ramond(self):
        with pytest.raises(SectorMismatchError):
            sigma(el(R, L, 0))

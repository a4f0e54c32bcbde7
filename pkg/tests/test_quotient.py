"""
Tests for the quotient layers F_2i / F_2i+1 at alpha = 0.

Parameters (conftest ``ramond_params_alpha_zero``): lambda = 3, alpha = 0, h = t + 1.
"""

import pytest

from src.algebra.poly import Poly2
from src.algebra.superalgebra import AlgebraElement, GeneratorKind, Sector
from src.core.exceptions import AlphaNonzeroError, PreconditionError, SectorMismatchError
from src.modules.quotient import QuotientVector, lift, project, quotient_act, quotient_shift
from src.modules.ramond import act_ramond
from src.modules.vectors import SuperVector

R = Sector.RAMOND
s = Poly2.var2()
u = Poly2.var1()


def l(m):
    return AlgebraElement.of(R, GeneratorKind.L, 2 * m)


class TestQuotientAction:
    """L acts through the shift h(0) - i; W and G act by zero."""

    def test_shift(self, ramond_params_alpha_zero):
        assert quotient_shift(ramond_params_alpha_zero, 0) == 1
        assert quotient_shift(ramond_params_alpha_zero, 1) == 0

    def test_l1_on_class_of_one(self, ramond_params_alpha_zero):
        """L_1 class(1) = 3 (s + 1)."""
        image = quotient_act(ramond_params_alpha_zero, l(1), QuotientVector(0, Poly2.constant(1)))
        assert image == QuotientVector(0, s.scale(3) + Poly2.constant(3))

    def test_l1_on_class_of_s_at_degenerate_layer(self, ramond_params_alpha_zero):
        """h(0) = 1 = i: L_1 class(u s) = 3 s (s - 1), no constant term."""
        image = quotient_act(ramond_params_alpha_zero, l(1), QuotientVector(1, s))
        assert image.g == (s * (s - Poly2.constant(1))).scale(3)

    def test_w_and_g_act_by_zero(self, ramond_params_alpha_zero):
        v = QuotientVector(2, s)
        for kind in (GeneratorKind.W, GeneratorKind.G):
            assert quotient_act(ramond_params_alpha_zero, AlgebraElement.of(R, kind, 2), v).is_zero

    def test_matches_projection_of_full_action(self, ramond_params_alpha_zero):
        q = QuotientVector(1, s * s)
        for m in (-2, -1, 0, 1, 2):
            full = act_ramond(ramond_params_alpha_zero, l(m), lift(q))
            assert project(full, 1) == quotient_act(ramond_params_alpha_zero, l(m), q)


class TestQuotientErrors:
    """Preconditions of the quotient construction."""

    def test_alpha_nonzero(self, ramond_params):
        with pytest.raises(AlphaNonzeroError):
            quotient_act(ramond_params, l(1), QuotientVector(0, Poly2.constant(1)))

    def test_ns_element(self, ramond_params_alpha_zero):
        x = AlgebraElement.of(Sector.NEVEU_SCHWARZ, GeneratorKind.L, 2)
        with pytest.raises(SectorMismatchError):
            quotient_act(ramond_params_alpha_zero, x, QuotientVector(0))

    def test_class_must_be_in_s(self):
        with pytest.raises(PreconditionError):
            QuotientVector(0, u)

    def test_negative_layer(self):
        with pytest.raises(PreconditionError):
            QuotientVector(-1)

    def test_project_outside_filtration_piece(self):
        with pytest.raises(PreconditionError):
            project(SuperVector(R, s), 1)


class TestLiftAndProject:
    """Representatives and classes."""

    def test_lift(self):
        assert lift(QuotientVector(2, s)) == SuperVector(R, u * u * s)

    def test_project_drops_higher_layers(self):
        v = SuperVector(R, u * s + u * u, s)
        assert project(v, 0).g.is_zero
        assert project(SuperVector(R, u * s + u * u), 1) == QuotientVector(1, s)

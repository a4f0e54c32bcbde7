"""
Tests for the restriction through sigma and the isomorphism Ψ.
"""

from fractions import Fraction
from unittest.mock import patch

import pytest

from src.algebra.poly import Poly2
from src.algebra.scalar import SQRT2, Scalar
from src.algebra.superalgebra import AlgebraElement, GeneratorKind, Sector
from src.core.exceptions import (
    KindMismatchError,
    MissingSqrtLambdaError,
    SectorMismatchError,
    SqrtMismatchError,
)
from src.modules.intertwiner import (
    act_restricted,
    check_transport,
    intertwined_params,
    psi,
    psi_inverse,
)
from src.modules.neveu_schwarz import act_ns
from src.modules.vectors import SuperVector, format_vector
from src.schemas.params import ModuleParams

R, NS = Sector.RAMOND, Sector.NEVEU_SCHWARZ
t = Poly2.var1()


@pytest.fixture
def pair():
    """lambda = 4, sqrt_lambda = 2, alpha = 1, h = t."""
    return intertwined_params(t, 1, 4, 2)


class TestPsi:
    """The vector map and its inverse."""

    def test_odd_one(self, pair):
        """Ψ(1_odd) = sqrt(lambda/2) t = sqrt2 t."""
        p_ns, _ = pair
        image = psi(p_ns, SuperVector.odd_one(NS))
        assert image == SuperVector(R, Poly2.zero(), Poly2.constant(SQRT2))
        assert format_vector(image) == "even: 0 ; odd: sqrt2"

    def test_even_part_halves_variables(self, pair):
        p_ns, _ = pair
        v = SuperVector(NS, t * Poly2.var2())
        assert psi(p_ns, v) == SuperVector(R, (t * Poly2.var2()).scale(Fraction(1, 4)))

    def test_inverse(self, pair):
        p_ns, _ = pair
        v = SuperVector(NS, t + Poly2.constant(3), Poly2.var2() * Poly2.var2())
        assert psi_inverse(p_ns, psi(p_ns, v)) == v

    def test_requires_ns_vector(self, pair):
        p_ns, _ = pair
        with pytest.raises(KindMismatchError):
            psi(p_ns, SuperVector.one(R))

    def test_requires_ns_params(self, pair):
        _, p_ramond = pair
        with pytest.raises(SectorMismatchError):
            psi(p_ramond, SuperVector.one(NS))

    def test_requires_sqrt_lambda(self):
        params = ModuleParams(lambda_=Scalar(4), alpha=Scalar(0), h=t, sector=NS)
        with pytest.raises(MissingSqrtLambdaError):
            psi(params, SuperVector.one(NS))


class TestIntertwining:
    """Ψ(x v) = sigma(x) Ψ(v) on sample inputs."""

    @pytest.mark.parametrize(
        ("kind", "idx2"),
        [(GeneratorKind.G, 1), (GeneratorKind.G, -3), (GeneratorKind.L, 2), (GeneratorKind.W, -2)],
    )
    def test_on_cyclic_vectors(self, pair, kind, idx2):
        p_ns, p_ramond = pair
        x = AlgebraElement.of(NS, kind, idx2)
        for v in (SuperVector.one(NS), SuperVector.odd_one(NS)):
            assert psi(p_ns, act_ns(p_ns, x, v)) == act_restricted(p_ramond, x, psi(p_ns, v))

    def test_transported_params(self, pair):
        p_ns, p_ramond = pair
        assert p_ns.h == t.scale(2) - Poly2.constant(1)
        assert p_ramond.lambda_ == 2
        assert p_ns.sqrt_lambda == 2


class TestTransportCondition:
    """g_m(t/2) = h_2m(t)/2."""

    def test_holds_for_transported_g(self):
        assert check_transport(t * t + t, 2, 4) is None

    def test_reports_first_failing_m(self):
        with patch("src.modules.intertwiner.transport_h", side_effect=lambda h, a: h):
            assert check_transport(t, 1, 3) == 1

    def test_sqrt_lambda_consistency(self):
        with pytest.raises(SqrtMismatchError):
            intertwined_params(t, 0, 4, SQRT2)

"""
Tests for reading (lambda, alpha, h) back from an action oracle.
"""

from functools import partial

import pytest

from src.algebra.poly import Poly2
from src.algebra.scalar import Scalar
from src.algebra.superalgebra import AlgebraElement, GeneratorKind, Parity, Sector
from src.core.exceptions import ErrorCode, InconsistentOracleError
from src.modules.action import act
from src.modules.extraction import extract_params
from src.modules.vectors import SuperVector
from src.schemas.params import ModuleParams


class TestExtractParams:
    """Round trip through the module action."""

    def test_ramond(self, ramond_params):
        found = extract_params(partial(act, ramond_params), Sector.RAMOND)
        assert found.lambda_ == 2
        assert found.alpha == 1
        assert found.h == Poly2.var1()

    def test_ns(self, ns_params):
        found = extract_params(partial(act, ns_params), Sector.NEVEU_SCHWARZ)
        assert found.lambda_ == ns_params.lambda_
        assert found.alpha == ns_params.alpha
        assert found.h == ns_params.h

    def test_higher_degree_h(self):
        h = Poly2.monomial(3, 0, Scalar(0, 1)) - Poly2.constant(5)
        params = ModuleParams(lambda_=Scalar(-1), alpha=Scalar(2), h=h)
        found = extract_params(partial(act, params), Sector.RAMOND, degree_bound=4)
        assert found.h == h


class TestInconsistentOracles:
    """Oracles outside the module family are rejected."""

    def test_identity_oracle(self):
        with pytest.raises(InconsistentOracleError) as exc:
            extract_params(lambda x, v: v)
        assert exc.value.error_code is ErrorCode.INCONSISTENT_ORACLE

    def test_l2_from_another_module(self, ramond_params):
        """L_1 fixes h; an L_2 built on a different h must be caught."""
        other = ModuleParams(lambda_=Scalar(2), alpha=Scalar(1), h=Poly2.monomial(2, 0))
        l2 = AlgebraElement.of(Sector.RAMOND, GeneratorKind.L, 4)

        def oracle(x, v):
            return act(other if x == l2 else ramond_params, x, v)

        with pytest.raises(InconsistentOracleError) as exc:
            extract_params(oracle)
        assert exc.value.details["m"] == "2"

    def test_odd_generator_dropped(self, ramond_params):
        def oracle(x, v):
            if x.parity() is Parity.ODD:
                return SuperVector.zero(Sector.RAMOND)
            return act(ramond_params, x, v)

        with pytest.raises(InconsistentOracleError):
            extract_params(oracle)

"""
Law checks over the full parameter grids.

The parameter grids always run in full. Index bounds and windows are small
by default; tests marked ``slow`` repeat them at the sizes the CLI
documents (``pytest -m slow``).
"""

from fractions import Fraction
from functools import partial
from itertools import product

import pytest

from src.algebra.poly import Poly2, format_poly
from src.algebra.scalar import SQRT2, Scalar
from src.algebra.superalgebra import Sector
from src.modules.action import act
from src.modules.extraction import extract_params
from src.modules.intertwiner import check_transport
from src.schemas.params import ModuleParams, Truncation
from src.services.sweeps import (
    default_h_grid,
    sweep_h_identity,
    sweep_module_axioms,
    sweep_psi_intertwiner,
    sweep_sigma_hom,
    sweep_super_jacobi,
    sweep_supersymmetry,
)

R, NS = Sector.RAMOND, Sector.NEVEU_SCHWARZ
t = Poly2.var1()
HALF = Scalar(Fraction(1, 2))

# lambda -> chosen square root
SQRTS = {Scalar(1): Scalar(1), Scalar(2): SQRT2, HALF: Scalar(0, Fraction(1, 2))}
LAMBDAS = tuple(SQRTS)
ALPHAS = (Scalar(0), Scalar(1), SQRT2)
HS = (Poly2.zero(), Poly2.constant(1), t, t * t)


def _label(h: Poly2) -> str:
    return format_poly(h, ("t", "s"))


MODULE_GRID = [
    pytest.param(sector, lam, alpha, h, id=f"{sector.value}-{lam}-{alpha}-{_label(h)}")
    for sector, lam, alpha, h in product((R, NS), LAMBDAS, ALPHAS, HS)
]

PSI_GRID = [
    pytest.param(lam, mu, alpha, h, id=f"{lam}-{alpha}-{_label(h)}")
    for (lam, mu), alpha, h in product(
        ((Scalar(4), Scalar(2)), (Scalar(2), SQRT2), (Scalar(Fraction(1, 4)), HALF)),
        (Scalar(0), Scalar(1)),
        (Poly2.zero(), t, t * t),
    )
]

EXTRACTION_TRIPLES = [
    (Scalar(1), Scalar(0), Poly2.zero()),
    (Scalar(1), Scalar(1), t),
    (Scalar(1), SQRT2, t * t),
    (Scalar(2), Scalar(0), Poly2.constant(1)),
    (Scalar(2), Scalar(1), t * t),
    (Scalar(2), SQRT2, Poly2.zero()),
    (HALF, Scalar(0), t),
    (HALF, Scalar(1), Poly2.constant(1)),
    (HALF, SQRT2, t * t),
]


def module(sector: Sector, lam: Scalar, alpha: Scalar, h: Poly2) -> ModuleParams:
    return ModuleParams(
        lambda_=lam,
        alpha=alpha,
        h=h,
        sector=sector,
        sqrt_lambda=SQRTS[lam] if sector is NS else None,
    )


class TestSuperalgebraLaws:
    """Super-Jacobi, super-antisymmetry and sigma with |idx2| <= 8."""

    @pytest.mark.parametrize("sector", [R, NS])
    def test_jacobi(self, sector):
        report = sweep_super_jacobi(sector, 4)
        assert report.passed, report.counterexample

    @pytest.mark.parametrize("sector", [R, NS])
    def test_supersymmetry(self, sector):
        assert sweep_supersymmetry(sector, 4).passed

    def test_sigma_hom_covers_odd_index_seven(self):
        """Bound 4 reaches G_{+-7/2} and every central pair up to L_{+-4}."""
        report = sweep_sigma_hom(4)
        assert report.passed, report.counterexample


class TestHIdentityGrid:
    """The commutator identity of the h-family on the default grid."""

    def test_default_grid(self):
        report = sweep_h_identity()
        assert report.passed, report.counterexample
        assert report.data == {"polynomials": len(default_h_grid()), "alphas": 5, "m_bound": 4}

    def test_default_grid_covers_every_degree(self):
        degrees = {h.degree_v1() for h in default_h_grid()}
        assert degrees == {0, 1, 2, 3, 4}


class TestModuleAxiomGrid:
    """Every (lambda, alpha, h) in both sectors."""

    @pytest.mark.parametrize(("sector", "lam", "alpha", "h"), MODULE_GRID)
    def test_small_window(self, sector, lam, alpha, h):
        report = sweep_module_axioms(
            module(sector, lam, alpha, h), 1, Truncation(max_e1=1, max_e2=1)
        )
        assert report.passed, report.counterexample

    @pytest.mark.slow
    @pytest.mark.parametrize(("sector", "lam", "alpha", "h"), MODULE_GRID)
    def test_full_window(self, sector, lam, alpha, h):
        """|idx2| <= 6 and e1, e2 <= 3."""
        report = sweep_module_axioms(
            module(sector, lam, alpha, h), 3, Truncation(max_e1=3, max_e2=3)
        )
        assert report.passed, report.counterexample


class TestPsiGrid:
    """Ψ for every (lambda, sqrt_lambda), alpha and h."""

    @pytest.mark.parametrize(("lam", "mu", "alpha", "h"), PSI_GRID)
    def test_transport_condition(self, lam, mu, alpha, h):
        assert check_transport(h, alpha, 4) is None

    @pytest.mark.parametrize(("lam", "mu", "alpha", "h"), PSI_GRID)
    def test_small_window(self, lam, mu, alpha, h):
        report = sweep_psi_intertwiner(h, alpha, lam, mu, 1, Truncation(max_e1=1, max_e2=1))
        assert report.passed, report.counterexample

    @pytest.mark.slow
    @pytest.mark.parametrize(("lam", "mu", "alpha", "h"), PSI_GRID)
    def test_full_window(self, lam, mu, alpha, h):
        """|idx2| <= 6 covers G_{+-5/2}; e1, e2 <= 3."""
        report = sweep_psi_intertwiner(h, alpha, lam, mu, 3, Truncation(max_e1=3, max_e2=3))
        assert report.passed, report.counterexample


class TestExtractionGrid:
    """Nine triples read back exactly, and distinct triples stay distinct."""

    @pytest.mark.parametrize("sector", [R, NS])
    def test_round_trip_and_distinct(self, sector):
        seen = set()
        for lam, alpha, h in EXTRACTION_TRIPLES:
            params = module(sector, lam, alpha, h)
            found = extract_params(partial(act, params), sector)
            assert (found.lambda_, found.alpha, found.h) == (lam, alpha, h)
            seen.add((str(found.lambda_), str(found.alpha), _label(found.h)))
        assert len(seen) == len(EXTRACTION_TRIPLES)

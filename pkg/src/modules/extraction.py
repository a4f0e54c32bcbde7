"""
Recover (lambda, alpha, h) from a black-box action.

Everything is read off the cyclic vector 1:

    W_1 . 1 = lambda (v1 - alpha) 1
    L_m . 1 = lambda^m (v2 + h_m(v1)) 1,   h = h_1

Further samples L_m . 1 for m = 1..degree_bound (and, for NS oracles, the
action on the odd cyclic vector) must agree with the family formulas,
otherwise the oracle is rejected.
"""

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

import structlog

from src.algebra.poly import Poly2, h_m
from src.algebra.scalar import Scalar, int_pow
from src.algebra.superalgebra import AlgebraElement, GeneratorKind, Sector
from src.core.exceptions import InconsistentOracleError
from src.modules.vectors import SuperVector

logger = structlog.get_logger(__name__)

ActionOracle = Callable[[AlgebraElement, SuperVector], SuperVector]


@dataclass(frozen=True)
class ExtractedParams:
    lambda_: Scalar
    alpha: Scalar
    h: Poly2


def _reject(reason: str, **details: str) -> InconsistentOracleError:
    logger.info("oracle_rejected", reason=reason, **details)
    return InconsistentOracleError(reason, details=details)


def _read_w1(image: SuperVector) -> tuple[Scalar, Scalar]:
    p = image.even
    if not image.odd.is_zero or p.degree_v2() > 0 or p.degree_v1() != 1:
        raise _reject("W_1 . 1 is not of the form lambda(v1 - alpha)", image=str(image))
    lam = p.coefficient(1)
    return lam, -p.constant_term() / lam


def extract_params(
    oracle: ActionOracle, kind: Sector = Sector.RAMOND, degree_bound: int = 3
) -> ExtractedParams:
    """
    Read the module parameters from an action oracle.

    Args:
        oracle: callable applying an algebra element to a vector
        kind: sector of the oracle's algebra and vectors
        degree_bound: largest m for which L_m . 1 is cross-checked

    Returns:
        ExtractedParams with lambda, alpha and h

    Raises:
        InconsistentOracleError: a sample contradicts the module family
    """
    one = SuperVector.one(kind)
    lam, alpha = _read_w1(oracle(AlgebraElement.of(kind, GeneratorKind.W, 2), one))

    l1 = oracle(AlgebraElement.of(kind, GeneratorKind.L, 2), one)
    if not l1.odd.is_zero:
        raise _reject("L_1 . 1 has an odd component", image=str(l1))
    h = l1.even.scale(lam.inverse()) - Poly2.var2()
    if not h.is_univariate:
        raise _reject("L_1 . 1 is not lambda(v2 + h(v1))", image=str(l1))

    for m in range(1, degree_bound + 1):
        image = oracle(AlgebraElement.of(kind, GeneratorKind.L, 2 * m), one)
        expected = (Poly2.var2() + h_m(h, alpha, m)).scale(int_pow(lam, m))
        if image != SuperVector(kind, expected):
            raise _reject(f"L_{m} . 1 disagrees with h_{m}", m=str(m), image=str(image))

    _check_odd_generator(oracle, kind, lam, alpha, h, degree_bound)
    logger.debug("params_extracted", kind=kind.value, h=str(h))
    return ExtractedParams(lambda_=lam, alpha=alpha, h=h)


def _check_odd_generator(
    oracle: ActionOracle,
    kind: Sector,
    lam: Scalar,
    alpha: Scalar,
    h: Poly2,
    degree_bound: int,
) -> None:
    one = SuperVector.one(kind)
    if kind is Sector.RAMOND:
        # G_0 1 = t 1
        image = oracle(AlgebraElement.of(kind, GeneratorKind.G, 0), one)
        if image != SuperVector.odd_one(kind):
            raise _reject("G_0 . 1 is not t . 1", image=str(image))
        return

    # G_{1/2} 1_even = 1_odd, then the odd cyclic vector carries the same data
    image = oracle(AlgebraElement.of(kind, GeneratorKind.G, 1), one)
    if image != SuperVector.odd_one(kind):
        raise _reject("G_{1/2} . 1_even is not 1_odd", image=str(image))
    odd_one = SuperVector.odd_one(kind)
    w1 = oracle(AlgebraElement.of(kind, GeneratorKind.W, 2), odd_one)
    expected_w1 = (Poly2.var1() - Poly2.constant(alpha)).scale(lam)
    if w1 != SuperVector(kind, Poly2.zero(), expected_w1):
        raise _reject("W_1 . 1_odd is not lambda(y - alpha)", image=str(w1))
    for m in range(1, degree_bound + 1):
        image = oracle(AlgebraElement.of(kind, GeneratorKind.L, 2 * m), odd_one)
        shift = Poly2.constant(Scalar(Fraction(-m, 2)))
        expected = (Poly2.var2() + shift + h_m(h, alpha, m)).scale(int_pow(lam, m))
        if image != SuperVector(kind, Poly2.zero(), expected):
            raise _reject(f"L_{m} . 1_odd disagrees with h_{m}", m=str(m), image=str(image))

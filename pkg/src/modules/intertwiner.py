"""
Restriction of Ramond modules to the NS superalgebra and the isomorphism Ψ.

Through sigma every Ramond module is also an NS module. Ψ identifies the
NS module built on (lambda, alpha, g) with the restricted Ramond module
built on (sqrt_lambda, alpha, h) whenever g_m(t/2) = h_{2m}(t)/2 for all m,
which is the case for g = transport_h(h, alpha):

    even  f(t, s)  ->  f(u/2, s/2)
    odd   k(y, x)  ->  sqrt(lambda/2) * t * k(u/2, s/2)
"""

from fractions import Fraction

import structlog

from src.algebra.poly import Poly1, h_m, substitute, transport_h
from src.algebra.scalar import HALF, HALF_SQRT2, Scalar, ScalarLike, as_scalar
from src.algebra.superalgebra import AlgebraElement, CentralConvention, Sector, sigma
from src.core.exceptions import KindMismatchError, MissingSqrtLambdaError, SectorMismatchError
from src.modules.ramond import act_ramond
from src.modules.vectors import SuperVector
from src.schemas.params import ModuleParams

logger = structlog.get_logger(__name__)


def act_restricted(
    params: ModuleParams,
    x: AlgebraElement,
    v: SuperVector,
    convention: CentralConvention = CentralConvention.CONSISTENT,
) -> SuperVector:
    """Act with an NS element on a Ramond module through sigma."""
    return act_ramond(params, sigma(x, convention), v)


def _odd_factor(p_ns: ModuleParams) -> Scalar:
    """sqrt(lambda/2) = sqrt_lambda * sqrt2/2."""
    if p_ns.sector is not Sector.NEVEU_SCHWARZ:
        raise SectorMismatchError("Ψ takes NS module parameters")
    if p_ns.sqrt_lambda is None:
        raise MissingSqrtLambdaError()
    return p_ns.sqrt_lambda * HALF_SQRT2


def psi(p_ns: ModuleParams, v: SuperVector) -> SuperVector:
    """
    Map an NS vector to the Ramond module with lambda' = sqrt_lambda.

    Raises:
        MissingSqrtLambdaError: p_ns has no sqrt_lambda
        KindMismatchError: v is not an NS vector
    """
    factor = _odd_factor(p_ns)
    if v.kind is not Sector.NEVEU_SCHWARZ:
        raise KindMismatchError("Ψ takes NS vectors")
    return SuperVector(
        Sector.RAMOND,
        substitute(v.even, HALF, 1, HALF),
        substitute(v.odd, HALF, 1, HALF).scale(factor),
    )


def psi_inverse(p_ns: ModuleParams, w: SuperVector) -> SuperVector:
    """Inverse of Ψ: substitute 2*v1, 2*v2 and divide the odd part by sqrt(lambda/2)."""
    factor = _odd_factor(p_ns)
    if w.kind is not Sector.RAMOND:
        raise KindMismatchError("Ψ^-1 takes Ramond vectors")
    return SuperVector(
        Sector.NEVEU_SCHWARZ,
        substitute(w.even, 2, 1, 2),
        substitute(w.odd, 2, 1, 2).scale(factor.inverse()),
    )


def intertwined_params(
    h: Poly1, alpha: ScalarLike, lambda_: ScalarLike, sqrt_lambda: ScalarLike | None
) -> tuple[ModuleParams, ModuleParams]:
    """
    The pair of modules Ψ connects.

    Returns:
        (NS params on g = transport_h(h, alpha), Ramond params on h with lambda' = sqrt_lambda)

    Raises:
        MissingSqrtLambdaError: sqrt_lambda is None
        SqrtMismatchError: sqrt_lambda^2 != lambda
    """
    a = as_scalar(alpha)
    if sqrt_lambda is None:
        raise MissingSqrtLambdaError()
    p_ns = ModuleParams(
        lambda_=as_scalar(lambda_),
        alpha=a,
        h=transport_h(h, a),
        sector=Sector.NEVEU_SCHWARZ,
        sqrt_lambda=as_scalar(sqrt_lambda),
    )
    p_ramond = ModuleParams(lambda_=as_scalar(sqrt_lambda), alpha=a, h=h, sector=Sector.RAMOND)
    return p_ns, p_ramond


def check_transport(h: Poly1, alpha: ScalarLike, m_bound: int) -> int | None:
    """
    Check g_m(t/2) = h_{2m}(t)/2 for |m| <= m_bound, g = transport_h(h, alpha).

    Returns:
        The first offending m in the order 0, 1, -1, 2, -2, ...; None if all pass
    """
    a = as_scalar(alpha)
    g = transport_h(h, a)
    for m in _symmetric_range(m_bound):
        lhs = substitute(h_m(g, a, m), HALF, 1, 1)
        rhs = h_m(h, a, 2 * m).scale(Fraction(1, 2))
        if lhs != rhs:
            logger.info("transport_condition_failed", m=m, lhs=str(lhs), rhs=str(rhs))
            return m
    return None


def _symmetric_range(bound: int) -> list[int]:
    out = [0]
    for m in range(1, bound + 1):
        out += [m, -m]
    return out

"""
Action of the NS superalgebra on Ω(λ, α, h) = C[t, s] ⊕ C[y, x].

The even part lives in (t, s), the odd part in (y, x). L and W act on
each part through the shared W(2,2) kernel (odd part with offset -m/2).
G_r moves between parts:

    G_r f(t, s)  ->  odd   sqrt_lambda^(2r - 1) f(y, x - r)
    G_r k(y, x)  ->  even  sqrt_lambda^(2r + 1) (t - 2r*alpha) k(t, s - r)

Half-integer powers of lambda are taken through the chosen sqrt_lambda,
so every NS action requires it.
"""

from fractions import Fraction

from src.algebra.poly import Poly2, h_m
from src.algebra.scalar import ZERO, Scalar, int_pow
from src.algebra.superalgebra import AlgebraElement, Generator, GeneratorKind, Sector
from src.core.exceptions import (
    InconsistentOracleError,
    KindMismatchError,
    MissingSqrtLambdaError,
    SectorMismatchError,
)
from src.modules.vectors import SuperVector
from src.modules.w22 import l_kernel, w_kernel
from src.schemas.params import ModuleParams


def _lam(params: ModuleParams, m: int) -> Scalar:
    return int_pow(params.lambda_, m)


def _sqrt(params: ModuleParams) -> Scalar:
    if params.sqrt_lambda is None:
        raise MissingSqrtLambdaError()
    return params.sqrt_lambda


def l_even(params: ModuleParams, m: int, f: Poly2) -> Poly2:
    return l_kernel(_lam(params, m), m, params.alpha, h_m(params.h, params.alpha, m), f, ZERO)


def l_odd(params: ModuleParams, m: int, k: Poly2) -> Poly2:
    return l_kernel(
        _lam(params, m),
        m,
        params.alpha,
        h_m(params.h, params.alpha, m),
        k,
        Scalar(Fraction(-m, 2)),
    )


def w_even(params: ModuleParams, m: int, f: Poly2) -> Poly2:
    return w_kernel(_lam(params, m), m, params.alpha, f)


def w_odd(params: ModuleParams, m: int, k: Poly2) -> Poly2:
    return w_kernel(_lam(params, m), m, params.alpha, k)


def g_even(params: ModuleParams, r2: int, f: Poly2) -> Poly2:
    """G_r on f(t, s), r = r2/2; returns k(y, x)."""
    return f.shift_v2(Fraction(r2, 2)).scale(int_pow(_sqrt(params), r2 - 1))


def g_odd(params: ModuleParams, r2: int, k: Poly2) -> Poly2:
    """G_r on k(y, x), r = r2/2; returns f(t, s)."""
    factor = Poly2.var1() - Poly2.constant(params.alpha * r2)
    return (factor * k.shift_v2(Fraction(r2, 2))).scale(int_pow(_sqrt(params), r2 + 1))


def act_generator_ns(params: ModuleParams, gen: Generator, v: SuperVector) -> SuperVector:
    """Action of a single NS generator; no sector checks."""
    kind = gen.kind
    if kind is GeneratorKind.L:
        m = gen.idx2 // 2
        return SuperVector(v.kind, l_even(params, m, v.even), l_odd(params, m, v.odd))
    if kind is GeneratorKind.W:
        m = gen.idx2 // 2
        return SuperVector(v.kind, w_even(params, m, v.even), w_odd(params, m, v.odd))
    if kind is GeneratorKind.G:
        even = g_odd(params, gen.idx2, v.odd) if not v.odd.is_zero else Poly2.zero()
        odd = g_even(params, gen.idx2, v.even) if not v.even.is_zero else Poly2.zero()
        return SuperVector(v.kind, even, odd)
    return SuperVector.zero(v.kind)


def check_ns_inputs(params: ModuleParams, x: AlgebraElement, v: SuperVector) -> None:
    if params.sector is not Sector.NEVEU_SCHWARZ or x.sector is not Sector.NEVEU_SCHWARZ:
        raise SectorMismatchError(
            "NS action needs NS parameters and an NS element",
            details={"params": params.sector.value, "element": x.sector.value},
        )
    if v.kind is not Sector.NEVEU_SCHWARZ:
        raise KindMismatchError("NS action needs an NS vector")
    _sqrt(params)


def act_ns(params: ModuleParams, x: AlgebraElement, v: SuperVector) -> SuperVector:
    """
    Apply x to v in the NS module with the given parameters.

    Raises:
        SectorMismatchError: params or x are not NS
        KindMismatchError: v is not an NS vector
        MissingSqrtLambdaError: params.sqrt_lambda is not set
    """
    check_ns_inputs(params, x, v)
    out = SuperVector.zero(Sector.NEVEU_SCHWARZ)
    for gen, c in x.sorted_terms():
        out = out + act_generator_ns(params, gen, v).scale(c)
    return out


def ns_pairing(params: ModuleParams) -> tuple[Scalar, Poly2]:
    """
    Read the G_{1/2} pairing off the action on the two cyclic vectors.

    G_{1/2} 1_even = c 1_odd and G_{1/2} 1_odd = (lambda/c)(t - alpha) 1_even. The
    implemented normalization has c = 1.

    Returns:
        (c, residual) where residual is the even part of G_{1/2} 1_odd minus
        (lambda/c)(t - alpha); zero for a module of this family

    Raises:
        InconsistentOracleError: G_{1/2} 1_even is not a nonzero multiple of 1_odd
    """
    half = Generator(GeneratorKind.G, 1)
    first = act_generator_ns(params, half, SuperVector.one(Sector.NEVEU_SCHWARZ))
    c = first.odd.constant_term()
    if not first.even.is_zero or first.odd != Poly2.constant(c) or c.is_zero:
        raise InconsistentOracleError(
            "G_{1/2} 1_even is not a multiple of 1_odd", details={"image": str(first)}
        )
    second = act_generator_ns(params, half, SuperVector.odd_one(Sector.NEVEU_SCHWARZ))
    expected = (Poly2.var1() - Poly2.constant(params.alpha)).scale(params.lambda_ / c)
    return c, second.even - expected

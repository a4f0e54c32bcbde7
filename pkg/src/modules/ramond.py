"""
Action of the Ramond superalgebra on Ω(λ, α, h) = C[t^2, s] ⊕ t C[t^2, s].

Vectors are stored as (f, k) for f(u, s) + t*k(u, s), u = t^2. One function
per formula; each takes the component it acts on and returns the
component it produces:

    L_m, W_m  even -> even, odd -> odd (odd carries the -m/2 offset)
    G_m       even -> odd:  t f  ->  cofactor  lambda^m f(u, s - m)
              odd -> even:  t k  ->  lambda^m (u - 2m*alpha) k(u, s - m)
    C1, C2    act as zero
"""

from fractions import Fraction

from src.algebra.poly import Poly2, h_m
from src.algebra.scalar import ZERO, Scalar, int_pow
from src.algebra.superalgebra import AlgebraElement, Generator, GeneratorKind, Sector
from src.core.exceptions import KindMismatchError, SectorMismatchError
from src.modules.vectors import SuperVector
from src.modules.w22 import l_kernel, w_kernel
from src.schemas.params import ModuleParams


def _lam(params: ModuleParams, m: int) -> Scalar:
    return int_pow(params.lambda_, m)


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


def g_even(params: ModuleParams, m: int, f: Poly2) -> Poly2:
    """G_m on an even component; returns the odd cofactor."""
    return f.shift_v2(m).scale(_lam(params, m))


def g_odd(params: ModuleParams, m: int, k: Poly2) -> Poly2:
    """G_m on the odd part t*k; returns an even component."""
    factor = Poly2.var1() - Poly2.constant(params.alpha * (2 * m))
    return (factor * k.shift_v2(m)).scale(_lam(params, m))


def c_even(params: ModuleParams, f: Poly2) -> Poly2:
    return Poly2.zero()


def c_odd(params: ModuleParams, k: Poly2) -> Poly2:
    return Poly2.zero()


def act_generator_ramond(params: ModuleParams, gen: Generator, v: SuperVector) -> SuperVector:
    """Action of a single generator; no sector checks."""
    kind = gen.kind
    if kind is GeneratorKind.L:
        m = gen.idx2 // 2
        return SuperVector(v.kind, l_even(params, m, v.even), l_odd(params, m, v.odd))
    if kind is GeneratorKind.W:
        m = gen.idx2 // 2
        return SuperVector(v.kind, w_even(params, m, v.even), w_odd(params, m, v.odd))
    if kind is GeneratorKind.G:
        m = gen.idx2 // 2
        even = g_odd(params, m, v.odd) if not v.odd.is_zero else Poly2.zero()
        odd = g_even(params, m, v.even) if not v.even.is_zero else Poly2.zero()
        return SuperVector(v.kind, even, odd)
    return SuperVector(v.kind, c_even(params, v.even), c_odd(params, v.odd))


def check_ramond_inputs(params: ModuleParams, x: AlgebraElement, v: SuperVector) -> None:
    if params.sector is not Sector.RAMOND or x.sector is not Sector.RAMOND:
        raise SectorMismatchError(
            "Ramond action needs Ramond parameters and a Ramond element",
            details={"params": params.sector.value, "element": x.sector.value},
        )
    if v.kind is not Sector.RAMOND:
        raise KindMismatchError("Ramond action needs a Ramond vector")


def act_ramond(params: ModuleParams, x: AlgebraElement, v: SuperVector) -> SuperVector:
    """
    Apply x to v in the Ramond module with the given parameters.

    Args:
        params: Ramond module parameters
        x: Ramond algebra element (any parity)
        v: Ramond super vector

    Returns:
        SuperVector: x . v

    Raises:
        SectorMismatchError: params or x are not Ramond
        KindMismatchError: v is not a Ramond vector
    """
    check_ramond_inputs(params, x, v)
    out = SuperVector.zero(Sector.RAMOND)
    for gen, c in x.sorted_terms():
        out = out + act_generator_ramond(params, gen, v).scale(c)
    return out

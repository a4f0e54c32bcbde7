"""
The even kernel shared by every module in the family.

On one polynomial component f(v1, v2) the W(2,2) part acts by

    L_m f = lambda^m [ (v2 + offset + h_m(v1)) f(v1, v2 - m)
                       - m (v1 - m*alpha) d/dv1 f(v1, v2 - m) ]
    W_m f = lambda^m (v1 - m*alpha) f(v1, v2 - m)

with offset 0 on even components and -m/2 on odd ones.
"""

from src.algebra.poly import Poly2, h_m
from src.algebra.scalar import ZERO, Scalar, ScalarLike, as_scalar, int_pow
from src.algebra.superalgebra import AlgebraElement, GeneratorKind
from src.core.exceptions import KindMismatchError
from src.schemas.params import ModuleParams


def l_kernel(
    lam_m: Scalar, m: int, alpha: Scalar, hm: Poly2, f: Poly2, offset: ScalarLike = 0
) -> Poly2:
    """Virasoro-type part on one component; ``hm`` is h_m, ``lam_m`` is lambda^m."""
    if f.is_zero:
        return f
    shifted = f.shift_v2(m)
    multiplier = Poly2.var2() + Poly2.constant(as_scalar(offset)) + hm
    drift = (Poly2.var1() - Poly2.constant(alpha * m)) * shifted.d_dv1()
    return (multiplier * shifted - drift.scale(m)).scale(lam_m)


def w_kernel(lam_m: Scalar, m: int, alpha: Scalar, f: Poly2) -> Poly2:
    if f.is_zero:
        return f
    return ((Poly2.var1() - Poly2.constant(alpha * m)) * f.shift_v2(m)).scale(lam_m)


def act_w22(params: ModuleParams, x: AlgebraElement, f: Poly2) -> Poly2:
    """
    Act with the even subalgebra spanned by L, W and the centre on one polynomial.

    Raises:
        KindMismatchError: x has a G component
    """
    out = Poly2.zero()
    for gen, c in x.sorted_terms():
        if gen.is_central:
            continue
        if gen.kind is GeneratorKind.G:
            raise KindMismatchError("act_w22 takes elements without G terms")
        m = gen.idx2 // 2
        lam_m = int_pow(params.lambda_, m)
        if gen.kind is GeneratorKind.L:
            term = l_kernel(lam_m, m, params.alpha, h_m(params.h, params.alpha, m), f, ZERO)
        else:
            term = w_kernel(lam_m, m, params.alpha, f)
        out = out + term.scale(c)
    return out

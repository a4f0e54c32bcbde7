"""
Quotient modules of a Ramond module at alpha = 0.

For alpha = 0 the t-adic filtration F_k = {valuation >= k} is a chain of
submodules. The layer F_{2i} / F_{2i+1} is spanned by the classes of
u^i g(s); on it

    L_m class(u^i g(s)) = lambda^m (s + m(h(0) - i)) class(u^i g(s - m))

while W, G and the centre act by zero. The layer is simple exactly when
h(0) != i.
"""

from dataclasses import dataclass, field

from src.algebra.poly import Poly2
from src.algebra.scalar import Scalar, int_pow
from src.algebra.superalgebra import AlgebraElement, GeneratorKind, Sector
from src.core.exceptions import AlphaNonzeroError, PreconditionError, SectorMismatchError
from src.modules.vectors import SuperVector
from src.schemas.params import ModuleParams


@dataclass(frozen=True)
class QuotientVector:
    """Class of u^i * g(s); ``g`` only involves the second variable."""

    i: int
    g: Poly2 = field(default_factory=Poly2.zero)

    def __post_init__(self) -> None:
        if self.i < 0:
            raise PreconditionError("Quotient layer index must be non-negative", {"i": self.i})
        if any(e1 for e1, _ in self.g.terms):
            raise PreconditionError("Quotient classes are polynomials in s only")

    @property
    def is_zero(self) -> bool:
        return self.g.is_zero


def _check(params: ModuleParams, x: AlgebraElement) -> None:
    if params.sector is not Sector.RAMOND or x.sector is not Sector.RAMOND:
        raise SectorMismatchError("Quotient modules are Ramond modules")
    if not params.alpha.is_zero:
        raise AlphaNonzeroError(
            "Quotient layers exist only for alpha = 0", {"alpha": str(params.alpha)}
        )


def quotient_shift(params: ModuleParams, i: int) -> Scalar:
    """h(0) - i, the constant deciding simplicity of the layer."""
    return params.h.constant_term() - i


def quotient_act(params: ModuleParams, x: AlgebraElement, v: QuotientVector) -> QuotientVector:
    """
    Act on a quotient class.

    Raises:
        SectorMismatchError: params or x are not Ramond
        AlphaNonzeroError: alpha != 0
    """
    _check(params, x)
    c = quotient_shift(params, v.i)
    out = Poly2.zero()
    for gen, coeff in x.sorted_terms():
        if gen.kind is not GeneratorKind.L:
            continue
        m = gen.idx2 // 2
        multiplier = Poly2.var2() + Poly2.constant(c * m)
        image = (multiplier * v.g.shift_v2(m)).scale(int_pow(params.lambda_, m) * coeff)
        out = out + image
    return QuotientVector(v.i, out)


def lift(v: QuotientVector) -> SuperVector:
    """The representative u^i g(s) in the Ramond module."""
    return SuperVector(Sector.RAMOND, v.g * Poly2.monomial(v.i, 0))


def project(v: SuperVector, i: int) -> QuotientVector:
    """
    Class of a vector of F_{2i} in F_{2i} / F_{2i+1}.

    Raises:
        PreconditionError: v is not in F_{2i}
    """
    if v.kind is not Sector.RAMOND:
        raise PreconditionError("Projection takes Ramond vectors")
    if any(e1 < i for e1, _ in v.even.terms) or any(e1 < i for e1, _ in v.odd.terms):
        raise PreconditionError(
            "Vector does not lie in the filtration piece", {"i": i, "vector": str(v)}
        )
    g = Poly2({(0, e2): c for (e1, e2), c in v.even.terms.items() if e1 == i})
    return QuotientVector(i, g)

"""
Exhaustive identity sweeps over finite grids.

Each sweep builds an ordered grid (generators sorted by kind and index,
window monomials in basis order), checks one identity per cell with exact
arithmetic and folds the outcomes into a ``ProbeReport`` whose
counterexample is the first failing case in grid order.

Cell checkers are module-level functions bound with ``functools.partial``
so the grid can be shipped to worker processes.
"""

from collections.abc import Sequence
from fractions import Fraction
from functools import partial

import structlog

from src.algebra.poly import Poly2, check_h_identity
from src.algebra.scalar import SQRT2, Scalar, ScalarLike, as_scalar
from src.algebra.superalgebra import (
    AlgebraElement,
    CentralConvention,
    Generator,
    GeneratorKind,
    Sector,
    element,
    generators,
    sigma,
    super_sign,
    superbracket,
)
from src.core.exceptions import (
    KindMismatchError,
    MissingSqrtLambdaError,
    PreconditionError,
    SqrtMismatchError,
    TransportConditionError,
)
from src.modules.action import act_generator
from src.modules.intertwiner import (
    act_restricted,
    check_transport,
    intertwined_params,
    psi,
    psi_inverse,
)
from src.modules.neveu_schwarz import act_ns
from src.modules.quotient import QuotientVector, lift, project, quotient_act
from src.modules.ramond import act_ramond
from src.modules.vectors import SuperVector, format_vector
from src.schemas.params import ModuleParams, Truncation
from src.schemas.reports import Counterexample, ProbeReport
from src.services.grid import CellOutcome, run_grid, run_sweep, summarize
from src.services.linalg import SpanBasis, basis_vectors

logger = structlog.get_logger(__name__)


def _failure(
    checked: int, inputs: dict[str, str], lhs: object, rhs: object, residual: object
) -> CellOutcome:
    return CellOutcome(
        checked,
        Counterexample(inputs=inputs, lhs=str(lhs), rhs=str(rhs), residual=str(residual)),
    )


def _act_element(params: ModuleParams, x: AlgebraElement, v: SuperVector) -> SuperVector:
    out = SuperVector.zero(v.kind)
    for gen, c in x.sorted_terms():
        out = out + act_generator(params, gen, v).scale(c)
    return out


def _require_idx_bound(idx_bound: int) -> None:
    if idx_bound < 1:
        raise PreconditionError("idx_bound must be at least 1", {"idx_bound": idx_bound})


# ===== Superalgebra laws =====


def _jacobi_cell(
    x: Generator, *, sector: Sector, gens: tuple[Generator, ...], convention: CentralConvention
) -> CellOutcome:
    ex = element(sector, x)
    with_x = {z: superbracket(ex, element(sector, z), convention) for z in gens}
    checked = 0
    for y in gens:
        ey = element(sector, y)
        xy = superbracket(ex, ey, convention)
        sign = super_sign(x, y)
        for z in gens:
            ez = element(sector, z)
            lhs = superbracket(ex, superbracket(ey, ez, convention), convention)
            rhs = superbracket(xy, ez, convention) + superbracket(
                ey, with_x[z], convention
            ).scale(sign)
            checked += 1
            if lhs != rhs:
                inputs = {"x": str(x), "y": str(y), "z": str(z)}
                return _failure(checked, inputs, lhs, rhs, lhs - rhs)
    return CellOutcome(checked)


def sweep_super_jacobi(
    sector: Sector,
    idx_bound: int,
    convention: CentralConvention = CentralConvention.CONSISTENT,
    max_workers: int | None = None,
) -> ProbeReport:
    """[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]] over all generator triples."""
    _require_idx_bound(idx_bound)
    gens = tuple(generators(sector, idx_bound))
    check = partial(_jacobi_cell, sector=sector, gens=gens, convention=convention)
    data = {"sector": sector.value, "idx_bound": idx_bound, "convention": convention.value}
    return run_sweep("super_jacobi", gens, check, data, max_workers)


def _supersymmetry_cell(
    x: Generator, *, sector: Sector, gens: tuple[Generator, ...], convention: CentralConvention
) -> CellOutcome:
    ex = element(sector, x)
    for n, y in enumerate(gens, start=1):
        ey = element(sector, y)
        lhs = superbracket(ex, ey, convention)
        rhs = superbracket(ey, ex, convention).scale(-super_sign(x, y))
        if lhs != rhs:
            return _failure(n, {"x": str(x), "y": str(y)}, lhs, rhs, lhs - rhs)
    return CellOutcome(len(gens))


def sweep_supersymmetry(
    sector: Sector,
    idx_bound: int,
    convention: CentralConvention = CentralConvention.CONSISTENT,
    max_workers: int | None = None,
) -> ProbeReport:
    """[x, y] = -(-1)^{|x||y|}[y, x] over all generator pairs."""
    _require_idx_bound(idx_bound)
    gens = tuple(generators(sector, idx_bound))
    check = partial(_supersymmetry_cell, sector=sector, gens=gens, convention=convention)
    data = {"sector": sector.value, "idx_bound": idx_bound, "convention": convention.value}
    return run_sweep("supersymmetry", gens, check, data, max_workers)


def _sigma_cell(
    x: Generator, *, gens: tuple[Generator, ...], convention: CentralConvention
) -> CellOutcome:
    ns = Sector.NEVEU_SCHWARZ
    ex = element(ns, x)
    sx = sigma(ex, convention)
    for n, y in enumerate(gens, start=1):
        ey = element(ns, y)
        lhs = sigma(superbracket(ex, ey, convention), convention)
        rhs = superbracket(sx, sigma(ey, convention), convention)
        if lhs != rhs:
            return _failure(n, {"x": str(x), "y": str(y)}, lhs, rhs, lhs - rhs)
    return CellOutcome(len(gens))


def _sigma_injectivity(gens: Sequence[Generator], convention: CentralConvention) -> CellOutcome:
    images = [sigma(element(Sector.NEVEU_SCHWARZ, g), convention) for g in gens]
    columns = sorted({g for img in images for g in img.terms}, key=Generator.sort_key)
    span = SpanBasis(len(columns))
    for gen, img in zip(gens, images, strict=True):
        if not span.insert([img.coefficient(c) for c in columns]):
            return CellOutcome(
                len(gens),
                Counterexample(inputs={"generator": str(gen)}, lhs=str(img), rhs="independent"),
            )
    return CellOutcome(len(gens))


def sweep_sigma_hom(
    idx_bound: int,
    convention: CentralConvention = CentralConvention.CONSISTENT,
    max_workers: int | None = None,
) -> ProbeReport:
    """
    sigma([x, y]) = [sigma(x), sigma(y)] over NS generator pairs, then
    linear independence of the generator images.
    """
    _require_idx_bound(idx_bound)
    gens = tuple(generators(Sector.NEVEU_SCHWARZ, idx_bound))
    logger.info("sweep_started", sweep="sigma_hom", cells=len(gens))
    check = partial(_sigma_cell, gens=gens, convention=convention)
    outcomes = [*run_grid(gens, check, max_workers), _sigma_injectivity(gens, convention)]
    data = {"idx_bound": idx_bound, "convention": convention.value}
    return summarize("sigma_hom", outcomes, data)


# ===== Module laws =====


def _check_module_inputs(params: ModuleParams) -> None:
    if params.sector is Sector.NEVEU_SCHWARZ and params.sqrt_lambda is None:
        raise MissingSqrtLambdaError()


def _axioms_cell(
    x: Generator,
    *,
    params: ModuleParams,
    gens: tuple[Generator, ...],
    vectors: tuple[SuperVector, ...],
    convention: CentralConvention,
) -> CellOutcome:
    sector = params.sector
    ex = element(sector, x)
    x_images = [act_generator(params, x, v) for v in vectors]
    checked = 0
    for y in gens:
        sign = super_sign(x, y)
        xy = superbracket(ex, element(sector, y), convention)
        for v, xv in zip(vectors, x_images, strict=True):
            lhs = act_generator(params, x, act_generator(params, y, v)) - act_generator(
                params, y, xv
            ).scale(sign)
            rhs = _act_element(params, xy, v)
            checked += 1
            if lhs != rhs:
                inputs = {"x": str(x), "y": str(y), "v": format_vector(v)}
                return _failure(checked, inputs, lhs, rhs, lhs - rhs)
    return CellOutcome(checked)


def sweep_module_axioms(
    params: ModuleParams,
    idx_bound: int,
    tr: Truncation,
    convention: CentralConvention = CentralConvention.CONSISTENT,
    max_workers: int | None = None,
) -> ProbeReport:
    """
    x(yv) - (-1)^{|x||y|} y(xv) = [x, y]v over generator pairs and window monomials.

    Raises:
        MissingSqrtLambdaError: NS parameters without sqrt_lambda
    """
    _require_idx_bound(idx_bound)
    _check_module_inputs(params)
    gens = tuple(generators(params.sector, idx_bound))
    vectors = tuple(basis_vectors(tr, params.sector))
    check = partial(
        _axioms_cell, params=params, gens=gens, vectors=vectors, convention=convention
    )
    data = {
        "sector": params.sector.value,
        "idx_bound": idx_bound,
        "window": [tr.max_e1, tr.max_e2],
    }
    return run_sweep("module_axioms", gens, check, data, max_workers)


def _g0_square_cell(v: SuperVector, *, params: ModuleParams) -> CellOutcome:
    g0 = Generator(GeneratorKind.G, 0)
    lhs = act_generator(params, g0, act_generator(params, g0, v))
    rhs = act_generator(params, Generator(GeneratorKind.W, 0), v)
    if lhs != rhs:
        return _failure(1, {"v": format_vector(v)}, lhs, rhs, lhs - rhs)
    return CellOutcome(1)


def sweep_g0_square(params: ModuleParams, tr: Truncation) -> ProbeReport:
    """G_0^2 = W_0 as operators on every window monomial of a Ramond module."""
    if params.sector is not Sector.RAMOND:
        raise KindMismatchError("G_0 only exists in the Ramond sector")
    vectors = tuple(basis_vectors(tr, Sector.RAMOND))
    return run_sweep("g0_square", vectors, partial(_g0_square_cell, params=params))


# ===== Intertwiner =====


def _psi_cell(
    x: Generator,
    *,
    p_ns: ModuleParams,
    p_ramond: ModuleParams,
    vectors: tuple[SuperVector, ...],
) -> CellOutcome:
    ex = element(Sector.NEVEU_SCHWARZ, x)
    for n, v in enumerate(vectors, start=1):
        lhs = psi(p_ns, act_ns(p_ns, ex, v))
        rhs = act_restricted(p_ramond, ex, psi(p_ns, v))
        if lhs != rhs:
            return _failure(n, {"x": str(x), "v": format_vector(v)}, lhs, rhs, lhs - rhs)
    return CellOutcome(len(vectors))


def _psi_bijectivity(p_ns: ModuleParams, tr: Truncation) -> CellOutcome:
    checked = 0
    for v in basis_vectors(tr, Sector.NEVEU_SCHWARZ):
        checked += 1
        back = psi_inverse(p_ns, psi(p_ns, v))
        if back != v:
            return _failure(checked, {"v": format_vector(v)}, back, v, back - v)
    for w in basis_vectors(tr, Sector.RAMOND):
        checked += 1
        back = psi(p_ns, psi_inverse(p_ns, w))
        if back != w:
            return _failure(checked, {"w": format_vector(w)}, back, w, back - w)
    return CellOutcome(checked)


def sweep_psi_intertwiner(
    h: Poly2,
    alpha: ScalarLike,
    lambda_: ScalarLike,
    sqrt_lambda: ScalarLike | None,
    idx_bound: int,
    tr: Truncation,
    max_workers: int | None = None,
) -> ProbeReport:
    """
    Ψ(x . v) = sigma(x) . Ψ(v) for NS generators and NS window monomials,
    then Ψ^-1 Ψ = id and Ψ Ψ^-1 = id on the window.

    Raises:
        MissingSqrtLambdaError: sqrt_lambda is None
        SqrtMismatchError: sqrt_lambda^2 != lambda
        TransportConditionError: the g-family condition fails for some |m| <= idx_bound
    """
    _require_idx_bound(idx_bound)
    if sqrt_lambda is None:
        raise MissingSqrtLambdaError()
    lam, mu = as_scalar(lambda_), as_scalar(sqrt_lambda)
    if mu * mu != lam:
        raise SqrtMismatchError(details={"lambda": str(lam), "sqrt_lambda": str(mu)})
    bad_m = check_transport(h, alpha, idx_bound)
    if bad_m is not None:
        raise TransportConditionError(f"g_m(t/2) != h_2m(t)/2 at m = {bad_m}", m=bad_m)
    p_ns, p_ramond = intertwined_params(h, alpha, lam, mu)
    gens = tuple(generators(Sector.NEVEU_SCHWARZ, idx_bound))
    vectors = tuple(basis_vectors(tr, Sector.NEVEU_SCHWARZ))
    logger.info("sweep_started", sweep="psi_intertwiner", cells=len(gens))
    check = partial(_psi_cell, p_ns=p_ns, p_ramond=p_ramond, vectors=vectors)
    outcomes = [*run_grid(gens, check, max_workers), _psi_bijectivity(p_ns, tr)]
    data = {"g": str(p_ns.h), "idx_bound": idx_bound, "window": [tr.max_e1, tr.max_e2]}
    return summarize("psi_intertwiner", outcomes, data)


# ===== h-family =====

H_COEFFICIENTS: tuple[Scalar, ...] = (
    Scalar(1),
    Scalar(-1),
    Scalar(Fraction(1, 2)),
    Scalar(Fraction(-1, 2)),
    SQRT2,
)
H_ALPHAS: tuple[Scalar, ...] = (Scalar(0), Scalar(1), Scalar(-2), Scalar(Fraction(1, 2)), SQRT2)


def default_h_grid(max_degree: int = 4) -> list[Poly2]:
    """
    Every c*t^k (c in the coefficient set, k <= max_degree) plus one dense
    polynomial mixing all coefficients. The identity is linear in h, so
    this covers every h with these coefficients.
    """
    hs = [Poly2.monomial(k, 0, c) for k in range(max_degree + 1) for c in H_COEFFICIENTS]
    dense = {(k, 0): H_COEFFICIENTS[k % len(H_COEFFICIENTS)] for k in range(max_degree + 1)}
    return [*hs, Poly2(dense)]


def _h_identity_cell(cell: tuple[Poly2, Scalar], *, m_bound: int) -> CellOutcome:
    h, alpha = cell
    checked = 0
    for m in range(-m_bound, m_bound + 1):
        for n in range(-m_bound, m_bound + 1):
            checked += 1
            result = check_h_identity(h, alpha, m, n)
            if not result.passed:
                inputs = {"h": str(h), "alpha": str(alpha), "m": str(m), "n": str(n)}
                return _failure(checked, inputs, result.residual, 0, result.residual)
    return CellOutcome(checked)


def sweep_h_identity(
    hs: Sequence[Poly2] | None = None,
    alphas: Sequence[ScalarLike] | None = None,
    m_bound: int = 4,
    max_workers: int | None = None,
) -> ProbeReport:
    """The h-family commutator identity over an (h, alpha, m, n) grid."""
    h_list = list(hs) if hs is not None else default_h_grid()
    a_list = [as_scalar(a) for a in alphas] if alphas is not None else list(H_ALPHAS)
    cells = [(h, a) for h in h_list for a in a_list]
    check = partial(_h_identity_cell, m_bound=m_bound)
    data = {"polynomials": len(h_list), "alphas": len(a_list), "m_bound": m_bound}
    return run_sweep("h_identity", cells, check, data, max_workers)


# ===== Quotients =====


def _quotient_cell(
    x: Generator, *, params: ModuleParams, classes: tuple[QuotientVector, ...]
) -> CellOutcome:
    ex = element(Sector.RAMOND, x)
    for n, q in enumerate(classes, start=1):
        lhs = project(act_ramond(params, ex, lift(q)), q.i)
        rhs = quotient_act(params, ex, q)
        if lhs != rhs:
            inputs = {"x": str(x), "class": str(q.g)}
            return _failure(n, inputs, lhs.g, rhs.g, lhs.g - rhs.g)
    return CellOutcome(len(classes))


def sweep_quotient_consistency(
    params: ModuleParams, i: int, idx_bound: int, s_deg: int
) -> ProbeReport:
    """quotient_act agrees with the Ramond action followed by projection."""
    _require_idx_bound(idx_bound)
    if i < 0 or s_deg < 0:
        raise PreconditionError("i and s_deg must be non-negative", {"i": i, "s_deg": s_deg})
    gens = tuple(generators(Sector.RAMOND, idx_bound))
    classes = tuple(QuotientVector(i, Poly2.monomial(0, k)) for k in range(s_deg + 1))
    # surfaces AlphaNonzeroError before the grid starts
    quotient_act(params, element(Sector.RAMOND, gens[0]), classes[0])
    check = partial(_quotient_cell, params=params, classes=classes)
    return run_sweep("quotient_consistency", gens, check, {"i": i, "s_deg": s_deg})

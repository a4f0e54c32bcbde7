"""
Submodule and simplicity probes.

- closure_probe: span of everything reachable from a seed inside a window
- filtration_probe: invariance of F_k (t-adic valuation >= k) at alpha = 0
- pi_invariance_probe: invariance of Pi_i, optionally with the full odd part
- quotient_simplicity_probe: the h(0) = i dichotomy on quotient layers
- freeness_witness: L_0, W_0 (and G_0) act on the cyclic vectors as
  multiplication, so monomials in them hit distinct basis vectors

Images leaving the window are discarded during closure, so a closure
dimension is a lower bound: it can certify that a window is filled, never
that a submodule is proper. Properness is certified by the invariance
probes.
"""

from functools import partial

import structlog

from src.algebra.poly import Poly2
from src.algebra.superalgebra import Generator, GeneratorKind, Sector, element, generators
from src.core.exceptions import AlphaNonzeroError, KindMismatchError, PreconditionError
from src.modules.action import act_generator
from src.modules.quotient import QuotientVector, quotient_act, quotient_shift
from src.modules.vectors import SuperVector, format_vector
from src.schemas.params import ModuleParams, Truncation
from src.schemas.reports import Counterexample, ProbeReport
from src.services.grid import CellOutcome, run_sweep
from src.services.linalg import SpanBasis, basis, devectorize, vectorize

logger = structlog.get_logger(__name__)


def closure_probe(
    params: ModuleParams, seed: SuperVector, idx_bound: int, tr: Truncation
) -> ProbeReport:
    """
    Close the span of ``seed`` under every generator with |idx2| <= 2*idx_bound.

    Returns:
        ProbeReport passed when the closure fills the window; data carries
        the dimension reached, the window dimension, discarded images and
        the lowest v1-degree among even terms of the closure

    Raises:
        PreconditionError: seed is zero or leaves the window
        KindMismatchError: seed kind differs from the module sector
    """
    if seed.kind is not params.sector:
        raise KindMismatchError("Seed kind does not match the module")
    if seed.is_zero:
        raise PreconditionError("Closure seed must be nonzero")
    coords, overflow = vectorize(seed, tr)
    if overflow:
        raise PreconditionError("Seed lies outside the window", {"seed": format_vector(seed)})

    gens = generators(params.sector, idx_bound, central=False)
    span = SpanBasis(tr.dimension)
    span.insert(coords)
    applications = discarded = iterations = 0
    grew = True
    while grew:
        grew = False
        iterations += 1
        for row in list(span.rows):
            v = devectorize(row, tr, params.sector)
            for gen in gens:
                image, out = vectorize(act_generator(params, gen, v), tr)
                applications += 1
                if out:
                    discarded += 1
                    continue
                if span.insert(image):
                    grew = True
        logger.debug("closure_iteration", iteration=iterations, dimension=span.rank)

    even_degrees = [
        exp[0] for row in span.rows for (is_odd, exp), c in zip(basis(tr), row, strict=True)
        if not is_odd and not c.is_zero
    ]
    data: dict[str, object] = {
        "dimension": span.rank,
        "full_dimension": tr.dimension,
        "full": span.rank == tr.dimension,
        "iterations": iterations,
        "discarded": discarded,
    }
    if even_degrees:
        data["min_even_v1_degree"] = min(even_degrees)
    logger.info("closure_finished", dimension=span.rank, full_dimension=tr.dimension)
    return ProbeReport(
        name="closure",
        passed=span.rank == tr.dimension,
        checked=applications,
        data=data,
    )


def _filtration_member(v: SuperVector, even_floor: int, odd_floor: int) -> bool:
    return all(e1 >= even_floor for e1, _ in v.even.terms) and all(
        e1 >= odd_floor for e1, _ in v.odd.terms
    )


def _window_members(tr: Truncation, even_floor: int, odd_floor: int) -> tuple[SuperVector, ...]:
    return tuple(
        SuperVector(Sector.RAMOND, Poly2.zero(), Poly2.monomial(*exp))
        if is_odd
        else SuperVector(Sector.RAMOND, Poly2.monomial(*exp))
        for is_odd, exp in basis(tr)
        if exp[0] >= (odd_floor if is_odd else even_floor)
    )


def _invariance_cell(
    gen: Generator,
    *,
    params: ModuleParams,
    members: tuple[SuperVector, ...],
    even_floor: int,
    odd_floor: int,
    label: str,
) -> CellOutcome:
    for n, v in enumerate(members, start=1):
        image = act_generator(params, gen, v)
        if not _filtration_member(image, even_floor, odd_floor):
            return CellOutcome(
                n,
                Counterexample(
                    inputs={"x": str(gen), "v": format_vector(v)},
                    lhs=format_vector(image),
                    rhs=f"member of {label}",
                ),
            )
    return CellOutcome(len(members))


def _check_filtration_preconditions(params: ModuleParams) -> None:
    if params.sector is not Sector.RAMOND:
        raise KindMismatchError("The filtration probe runs on Ramond modules")
    if not params.alpha.is_zero:
        raise AlphaNonzeroError("The filtration is a chain of submodules only for alpha = 0")


def filtration_probe(params: ModuleParams, k: int, idx_bound: int, tr: Truncation) -> ProbeReport:
    """
    Check that F_k, the vectors of t-adic valuation >= k, is stable under every generator.

    u^a s^b has valuation 2a and t u^a s^b has 2a + 1, so F_k is spanned by
    even monomials with a >= ceil(k/2) and odd ones with a >= floor(k/2).

    Raises:
        AlphaNonzeroError: alpha != 0
        PreconditionError: k < 0 or no window monomial lies in F_k
    """
    _check_filtration_preconditions(params)
    if k < 0:
        raise PreconditionError("k must be non-negative", {"k": k})
    even_floor, odd_floor = (k + 1) // 2, k // 2
    members = _window_members(tr, even_floor, odd_floor)
    if not members:
        raise PreconditionError("Window contains no element of F_k", {"k": k})
    check = partial(
        _invariance_cell,
        params=params,
        members=members,
        even_floor=even_floor,
        odd_floor=odd_floor,
        label=f"F_{k}",
    )
    return run_sweep("filtration", tuple(generators(Sector.RAMOND, idx_bound)), check, {"k": k})


def pi_invariance_probe(
    params: ModuleParams,
    i: int,
    idx_bound: int,
    tr: Truncation,
    printed_odd_part: bool = False,
) -> ProbeReport:
    """
    Check that Pi_i = u^i C[u, s] + t u^(i-1) C[u, s] is stable under every generator.

    With ``printed_odd_part`` the odd part is all of t C[u, s] instead; that
    set is stable for i = 1 only (G_0 t = u).

    Raises:
        AlphaNonzeroError: alpha != 0
        PreconditionError: i < 1
    """
    _check_filtration_preconditions(params)
    if i < 1:
        raise PreconditionError("i must be positive", {"i": i})
    odd_floor = 0 if printed_odd_part else i - 1
    members = _window_members(tr, i, odd_floor)
    if not members:
        raise PreconditionError("Window contains no element of Pi_i", {"i": i})
    gens = tuple(generators(Sector.RAMOND, idx_bound))
    check = partial(
        _invariance_cell,
        params=params,
        members=members,
        even_floor=i,
        odd_floor=odd_floor,
        label=f"Pi_{i}",
    )
    data = {"i": i, "odd_part": "printed" if printed_odd_part else "filtration"}
    return run_sweep("pi_invariance", gens, check, data)


def _quotient_closure(
    params: ModuleParams, seed: QuotientVector, gens: list[Generator], s_deg: int
) -> tuple[int, int]:
    """Dimension of the span reachable from seed within degree s_deg; also count applications."""

    def coords(g: Poly2) -> list:  # type: ignore[type-arg]
        return [g.coefficient(0, s_deg - k) for k in range(s_deg + 1)]

    span = SpanBasis(s_deg + 1)
    span.insert(coords(seed.g))
    applications = 0
    grew = True
    while grew:
        grew = False
        for row in list(span.rows):
            g = Poly2({(0, s_deg - k): c for k, c in enumerate(row)})
            for gen in gens:
                image = quotient_act(params, element(Sector.RAMOND, gen), QuotientVector(seed.i, g))
                applications += 1
                if image.g.degree_v2() > s_deg:
                    continue
                if span.insert(coords(image.g)):
                    grew = True
    return span.rank, applications


def quotient_simplicity_probe(
    params: ModuleParams, i: int, idx_bound: int, s_deg: int
) -> ProbeReport:
    """
    Simplicity evidence for the quotient layer u^i C[s].

    When h(0) != i the classes of 1 and s must both generate every s^k,
    k <= s_deg. When h(0) = i the subspace s C[s] must be invariant,
    witnessing a proper submodule.

    Raises:
        PreconditionError: i < 0 or s_deg < 1
        AlphaNonzeroError: alpha != 0
    """
    if i < 0:
        raise PreconditionError("Quotient layer index must be non-negative", {"i": i})
    if s_deg < 1:
        raise PreconditionError("s_deg must be at least 1", {"s_deg": s_deg})
    shift = quotient_shift(params, i)
    gens = [g for g in generators(Sector.RAMOND, idx_bound, central=False)
            if g.kind is GeneratorKind.L]

    if not shift.is_zero:
        checked = 0
        dims = {}
        for label, seed in (("1", Poly2.constant(1)), ("s", Poly2.var2())):
            dim, n = _quotient_closure(params, QuotientVector(i, seed), gens, s_deg)
            dims[label] = dim
            checked += n
        full = all(d == s_deg + 1 for d in dims.values())
        counterexample = None
        if not full:
            short = next(label for label, d in dims.items() if d < s_deg + 1)
            counterexample = Counterexample(
                inputs={"seed": short}, lhs=str(dims[short]), rhs=str(s_deg + 1)
            )
        return ProbeReport(
            name="quotient_simplicity",
            passed=full,
            checked=checked,
            counterexample=counterexample,
            data={"shift": str(shift), "simple_expected": True, "closure_dimensions": dims},
        )

    checked = 0
    for gen in gens:
        for k in range(1, s_deg + 1):
            v = QuotientVector(i, Poly2.monomial(0, k))
            image = quotient_act(params, element(Sector.RAMOND, gen), v)
            checked += 1
            if not image.g.constant_term().is_zero:
                return ProbeReport(
                    name="quotient_simplicity",
                    passed=False,
                    checked=checked,
                    counterexample=Counterexample(
                        inputs={"x": str(gen), "class": str(v.g)}, lhs=str(image.g)
                    ),
                    data={"shift": "0", "simple_expected": False},
                )
    return ProbeReport(
        name="quotient_simplicity",
        passed=True,
        checked=checked,
        data={"shift": "0", "simple_expected": False, "invariant_subspace": "s*C[s]"},
    )


def _freeness_cell(
    exp: tuple[int, int], *, params: ModuleParams, odd: bool
) -> CellOutcome:
    a, b = exp
    kind = params.sector
    l0, w0 = Generator(GeneratorKind.L, 0), Generator(GeneratorKind.W, 0)
    if odd and kind is Sector.NEVEU_SCHWARZ:
        v = SuperVector.odd_one(kind)
    else:
        v = SuperVector.one(kind)
    for _ in range(a):
        v = act_generator(params, w0, v)
    for _ in range(b):
        v = act_generator(params, l0, v)
    if odd and kind is Sector.RAMOND:
        v = act_generator(params, Generator(GeneratorKind.G, 0), v)
    mono = Poly2.monomial(a, b)
    expected = SuperVector(kind, Poly2.zero(), mono) if odd else SuperVector(kind, mono)
    if v != expected:
        label = f"{'odd' if odd else 'even'} ({a}, {b})"
        return CellOutcome(
            1,
            Counterexample(
                inputs={"monomial": label},
                lhs=format_vector(v),
                rhs=format_vector(expected),
                residual=format_vector(v - expected),
            ),
        )
    return CellOutcome(1)


def freeness_witness(params: ModuleParams, tr: Truncation) -> ProbeReport:
    """
    W_0^a L_0^b applied to the cyclic vector(s) gives the basis monomial
    of bidegree (a, b), so the window is reached injectively.

    Ramond: 1 -> u^a s^b, G_0 u^a s^b -> t u^a s^b. NS: 1_even -> t^a s^b,
    1_odd -> y^a x^b.
    """
    cells = [exp for is_odd, exp in basis(tr) if not is_odd]
    reports = [
        run_sweep(
            "freeness",
            cells,
            partial(_freeness_cell, params=params, odd=odd),
            max_workers=1,
        )
        for odd in ((False, True) if tr.include_odd else (False,))
    ]
    first = next((r.counterexample for r in reports if r.counterexample), None)
    return ProbeReport(
        name="freeness",
        passed=first is None,
        checked=sum(r.checked for r in reports),
        counterexample=first,
        data={"sector": params.sector.value},
    )

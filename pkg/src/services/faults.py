"""
Fault injection: single-site mutations of the action and bracket formulas.

Every entry replaces one module-level formula (through ``swapped``, which
rebinds the module attribute and restores it on exit) with a plausible typo. ``run_fault_matrix``
installs each mutation in turn, runs the law sweeps on a fixed small grid
and records which sweep caught it. A mutation that no sweep catches means
the sweeps lack the power to notice that formula.
"""

import importlib
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import structlog

from src.algebra.poly import Poly2, h_m
from src.algebra.scalar import ZERO, Scalar, int_pow
from src.algebra.superalgebra import (
    CentralConvention,
    Generator,
    GeneratorKind,
    Sector,
    Terms,
)
from src.modules.w22 import l_kernel
from src.schemas.params import ModuleParams, Truncation
from src.schemas.reports import ProbeReport
from src.services.sweeps import sweep_module_axioms, sweep_sigma_hom, sweep_super_jacobi

logger = structlog.get_logger(__name__)


# ===== Mutated formulas =====


def _lam(params: ModuleParams, m: int) -> Scalar:
    return int_pow(params.lambda_, m)


def l_even_without_drift(params: ModuleParams, m: int, f: Poly2) -> Poly2:
    multiplier = Poly2.var2() + h_m(params.h, params.alpha, m)
    return (multiplier * f.shift_v2(m)).scale(_lam(params, m))


def l_odd_without_offset(params: ModuleParams, m: int, k: Poly2) -> Poly2:
    return l_kernel(_lam(params, m), m, params.alpha, h_m(params.h, params.alpha, m), k, ZERO)


def _w_plus(params: ModuleParams, m: int, f: Poly2) -> Poly2:
    factor = Poly2.var1() + Poly2.constant(params.alpha * m)
    return (factor * f.shift_v2(m)).scale(_lam(params, m))


def w_even_sign_flip(params: ModuleParams, m: int, f: Poly2) -> Poly2:
    return _w_plus(params, m, f)


def w_odd_sign_flip(params: ModuleParams, m: int, k: Poly2) -> Poly2:
    return _w_plus(params, m, k)


def g_even_without_shift(params: ModuleParams, m: int, f: Poly2) -> Poly2:
    return f.scale(_lam(params, m))


def g_odd_half_alpha(params: ModuleParams, m: int, k: Poly2) -> Poly2:
    factor = Poly2.var1() - Poly2.constant(params.alpha * m)
    return (factor * k.shift_v2(m)).scale(_lam(params, m))


def c_even_identity(params: ModuleParams, f: Poly2) -> Poly2:
    return f


def c_odd_identity(params: ModuleParams, k: Poly2) -> Poly2:
    return k


def bracket_ll_centerless(m2: int, n2: int) -> Terms:
    return {Generator(GeneratorKind.L, m2 + n2): Scalar((n2 - m2) // 2)}


def bracket_lw_centerless(m2: int, n2: int) -> Terms:
    return {Generator(GeneratorKind.W, m2 + n2): Scalar((n2 - m2) // 2)}


def bracket_lg_sign_flip(m2: int, r2: int) -> Terms:
    m = m2 // 2
    return {Generator(GeneratorKind.G, m2 + r2): Scalar(Fraction(r2 + m, 2))}


def bracket_gg_centerless(r2: int, s2: int, convention: CentralConvention) -> Terms:
    return {Generator(GeneratorKind.W, r2 + s2): Scalar(2)}


# ===== Registry =====


@dataclass(frozen=True)
class FaultSpec:
    """A named replacement of one module-level formula."""

    id: str
    target: str
    replacement: Callable[..., Any]
    description: str


FAULTS: tuple[FaultSpec, ...] = (
    FaultSpec("l-even-drift", "src.modules.ramond.l_even", l_even_without_drift,
              "L_m on even part without the -m(u - m*alpha) d/du term"),
    FaultSpec("l-odd-offset", "src.modules.ramond.l_odd", l_odd_without_offset,
              "L_m on odd part without the -m/2 offset"),
    FaultSpec("w-even-sign", "src.modules.ramond.w_even", w_even_sign_flip,
              "W_m on even part with (u + m*alpha)"),
    FaultSpec("w-odd-sign", "src.modules.ramond.w_odd", w_odd_sign_flip,
              "W_m on odd part with (u + m*alpha)"),
    FaultSpec("g-even-shift", "src.modules.ramond.g_even", g_even_without_shift,
              "G_m on even part without the s -> s - m shift"),
    FaultSpec("g-odd-alpha", "src.modules.ramond.g_odd", g_odd_half_alpha,
              "G_m on odd part with (u - m*alpha) instead of (u - 2m*alpha)"),
    FaultSpec("c-even-identity", "src.modules.ramond.c_even", c_even_identity,
              "central elements act by 1 on the even part"),
    FaultSpec("c-odd-identity", "src.modules.ramond.c_odd", c_odd_identity,
              "central elements act by 1 on the odd part"),
    FaultSpec("ll-centerless", "src.algebra.superalgebra.bracket_ll", bracket_ll_centerless,
              "[L_m, L_n] without the C1 cocycle"),
    FaultSpec("lw-centerless", "src.algebra.superalgebra.bracket_lw", bracket_lw_centerless,
              "[L_m, W_n] without the C2 cocycle"),
    FaultSpec("lg-sign", "src.algebra.superalgebra.bracket_lg", bracket_lg_sign_flip,
              "[L_m, G_r] with r + m/2"),
    FaultSpec("gg-centerless", "src.algebra.superalgebra.bracket_gg", bracket_gg_centerless,
              "[G_r, G_s] without the C2 term"),
)


def get_fault(fault_id: str) -> FaultSpec:
    for fault in FAULTS:
        if fault.id == fault_id:
            return fault
    raise KeyError(fault_id)


# Grid the mutations are judged on
FAULT_PARAMS = ModuleParams(lambda_=Scalar(2), alpha=Scalar(1), h=Poly2.var1())
FAULT_WINDOW = Truncation(max_e1=1, max_e2=1)
FAULT_IDX_BOUND = 2

SweepRunner = Callable[[], ProbeReport]

FAULT_SWEEPS: tuple[tuple[str, SweepRunner], ...] = (
    (
        "module_axioms",
        lambda: sweep_module_axioms(FAULT_PARAMS, FAULT_IDX_BOUND, FAULT_WINDOW, max_workers=1),
    ),
    ("super_jacobi", lambda: sweep_super_jacobi(Sector.RAMOND, FAULT_IDX_BOUND, max_workers=1)),
    ("sigma_hom", lambda: sweep_sigma_hom(FAULT_IDX_BOUND, max_workers=1)),
)


@contextmanager
def swapped(target: str, replacement: Any) -> Iterator[None]:
    """
    Rebind ``package.module.attribute`` to ``replacement`` for the duration of the block.

    Raises:
        AttributeError: the module has no such attribute
    """
    module_name, attribute = target.rsplit(".", 1)
    module = importlib.import_module(module_name)
    original = getattr(module, attribute)
    setattr(module, attribute, replacement)
    try:
        yield
    finally:
        setattr(module, attribute, original)


def run_fault(fault: FaultSpec) -> ProbeReport:
    """
    Install one mutation and run the sweeps until one of them fails.

    Sweeps run in-process: a swapped formula does not reach worker processes.

    Returns:
        ProbeReport named ``fault:<id>``; passed means the mutation was killed
    """
    checked = 0
    killed_by: str | None = None
    counterexample = None
    with swapped(fault.target, fault.replacement):
        for name, runner in FAULT_SWEEPS:
            report = runner()
            checked += report.checked
            if not report.passed:
                killed_by = name
                counterexample = report.counterexample
                break

    if killed_by is None:
        logger.warning("fault_survived", fault=fault.id, target=fault.target)
    else:
        logger.info("fault_killed", fault=fault.id, killed_by=killed_by)
    data: dict[str, Any] = {
        "target": fault.target,
        "description": fault.description,
        "killed": killed_by is not None,
        "killed_by": killed_by,
    }
    if counterexample is not None:
        data["counterexample"] = counterexample.model_dump(exclude_none=True)
    return ProbeReport(name=f"fault:{fault.id}", passed=killed_by is not None, checked=checked,
                       data=data)


def run_fault_matrix(faults: tuple[FaultSpec, ...] = FAULTS) -> list[ProbeReport]:
    """Run every mutation; one report per fault in registry order."""
    return [run_fault(fault) for fault in faults]

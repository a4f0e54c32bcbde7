"""Sector dispatch for module actions."""

from src.algebra.superalgebra import AlgebraElement, Generator, Sector
from src.modules.neveu_schwarz import act_generator_ns, act_ns
from src.modules.ramond import act_generator_ramond, act_ramond
from src.modules.vectors import SuperVector
from src.schemas.params import ModuleParams


def act(params: ModuleParams, x: AlgebraElement, v: SuperVector) -> SuperVector:
    """act_ramond or act_ns according to params.sector."""
    if params.sector is Sector.RAMOND:
        return act_ramond(params, x, v)
    return act_ns(params, x, v)


def act_generator(params: ModuleParams, gen: Generator, v: SuperVector) -> SuperVector:
    """Single-generator action without input checks, for inner loops of sweeps."""
    if params.sector is Sector.RAMOND:
        return act_generator_ramond(params, gen, v)
    return act_generator_ns(params, gen, v)

"""
Ordered evaluation of sweep grids.

A sweep is a list of independent cells and a pure checker returning a
``CellOutcome`` per cell. Cells run in-process when ``max_workers`` is 1
and on a process pool otherwise; either way outcomes come back in grid
order, so the first counterexample (and therefore the report) does not
depend on scheduling.
"""

from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, TypeVar

import structlog

from src.config import settings
from src.schemas.reports import Counterexample, ProbeReport

logger = structlog.get_logger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class CellOutcome:
    """Cases checked in one cell and the first failure in it, if any."""

    checked: int
    counterexample: Counterexample | None = None


def run_grid(
    cells: Sequence[T],
    check: Callable[[T], CellOutcome],
    max_workers: int | None = None,
) -> list[CellOutcome]:
    """
    Evaluate every cell; outcomes are returned in cell order.

    ``check`` must be picklable (a module-level function or a partial of one)
    when more than one worker is used.
    """
    workers = max_workers if max_workers is not None else settings.max_workers
    if workers <= 1 or len(cells) <= 1:
        return [check(cell) for cell in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(check, cells))


def summarize(
    name: str,
    outcomes: Sequence[CellOutcome],
    data: dict[str, Any] | None = None,
) -> ProbeReport:
    """Fold ordered outcomes into a report carrying the first counterexample."""
    checked = sum(o.checked for o in outcomes)
    first = next((o.counterexample for o in outcomes if o.counterexample is not None), None)
    if first is not None:
        logger.warning("counterexample_found", sweep=name, inputs=first.inputs)
    report = ProbeReport(
        name=name, passed=first is None, checked=checked, counterexample=first, data=data
    )
    logger.info("sweep_finished", sweep=name, passed=report.passed, checked=checked)
    return report


def run_sweep(
    name: str,
    cells: Sequence[T],
    check: Callable[[T], CellOutcome],
    data: dict[str, Any] | None = None,
    max_workers: int | None = None,
) -> ProbeReport:
    logger.info("sweep_started", sweep=name, cells=len(cells))
    return summarize(name, run_grid(cells, check, max_workers), data)

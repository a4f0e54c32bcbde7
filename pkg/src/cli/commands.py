"""
Verb handlers for the ``bms3`` command line.

A parsed command line becomes a ``Command`` (verb, optional target, flag
map). ``run`` dispatches it to a handler and turns the outcome into an
exit code and the text to print:

    0  success, or every report passed
    1  a report failed (a counterexample was found, or a fault survived)
    2  usage error: bad flags, unparsable input, violated precondition

Value verbs (bracket, act, psi, sigma) print the value, or
``{"result": ...}`` with ``--json``. Verification verbs print one report
per line of JSON, or a short text summary.
"""

import json
from collections.abc import Callable
from functools import partial
from typing import Any, Literal

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.algebra.poly import Poly2, format_poly
from src.algebra.scalar import Scalar
from src.algebra.superalgebra import CentralConvention, Sector, sigma, superbracket
from src.cli.parsers import parse_algebra_expr, parse_poly, parse_scalar, parse_vector_expr
from src.config import settings
from src.core.exceptions import Bms3Error
from src.modules.action import act
from src.modules.extraction import extract_params
from src.modules.intertwiner import check_transport, intertwined_params, psi, psi_inverse
from src.modules.vectors import SuperVector, format_vector
from src.schemas.params import ModuleParams, Truncation
from src.schemas.reports import ProbeReport
from src.services import probes, sweeps
from src.services.faults import FAULTS, get_fault, run_fault, run_fault_matrix

logger = structlog.get_logger(__name__)

Verb = Literal["bracket", "act", "psi", "sigma", "extract", "verify", "probe", "faults"]


class Command(BaseModel):
    """
    One CLI invocation.

    Fields:
        verb: top-level verb
        target: sub-target of ``verify`` and ``probe``
        options: flag values as given on the command line (strings, ints, bools)
    """

    verb: Verb
    target: str | None = None
    options: dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_target(self) -> "Command":
        targets = {"verify": VERIFY_TARGETS, "probe": PROBE_TARGETS}.get(self.verb)
        if targets is not None and self.target not in targets:
            raise ValueError(
                f"{self.verb} needs one of: {', '.join(sorted(targets))} (got {self.target!r})"
            )
        return self

    def opt(self, key: str, default: Any = None) -> Any:
        value = self.options.get(key)
        return default if value is None else value


Outcome = str | ProbeReport | list[ProbeReport]


# ===== Option decoding =====


def _sector(cmd: Command) -> Sector | None:
    raw = cmd.opt("sector")
    return Sector(raw) if raw is not None else None


def _convention(cmd: Command) -> CentralConvention:
    return CentralConvention(cmd.opt("convention", CentralConvention.CONSISTENT.value))


def _bound(cmd: Command) -> int:
    return int(cmd.opt("bound", settings.default_idx_bound))


def _window(cmd: Command) -> Truncation:
    return Truncation(
        max_e1=cmd.opt("max_e1", settings.default_max_e1),
        max_e2=cmd.opt("max_e2", settings.default_max_e2),
    )


def _h(cmd: Command) -> Poly2:
    return parse_poly(cmd.opt("h", "0"), ("t",))


def _sqrt_lambda(cmd: Command) -> Scalar | None:
    raw = cmd.opt("sqrt_lambda")
    return parse_scalar(raw) if raw is not None else None


def _params(cmd: Command, sector: Sector | None = None) -> ModuleParams:
    return ModuleParams(
        lambda_=parse_scalar(cmd.opt("lambda", "1")),
        alpha=parse_scalar(cmd.opt("alpha", "0")),
        h=_h(cmd),
        sector=sector or _sector(cmd) or Sector.RAMOND,
        sqrt_lambda=_sqrt_lambda(cmd),
    )


def _workers(cmd: Command) -> int | None:
    raw = cmd.opt("workers")
    return int(raw) if raw is not None else None


# ===== Value verbs =====


def handle_bracket(cmd: Command) -> Outcome:
    sector = _sector(cmd)
    x = parse_algebra_expr(cmd.opt("x"), sector)
    y = parse_algebra_expr(cmd.opt("y"), sector or x.sector)
    return str(superbracket(x, y, _convention(cmd)))


def handle_act(cmd: Command) -> Outcome:
    params = _params(cmd)
    x = parse_algebra_expr(cmd.opt("element"), params.sector)
    v = parse_vector_expr(cmd.opt("vector"), params.sector)
    return format_vector(act(params, x, v))


def handle_psi(cmd: Command) -> Outcome:
    p_ns, _ = intertwined_params(
        _h(cmd),
        parse_scalar(cmd.opt("alpha", "0")),
        parse_scalar(cmd.opt("lambda", "1")),
        _sqrt_lambda(cmd),
    )
    if cmd.opt("inverse", False):
        w = parse_vector_expr(cmd.opt("vector"), Sector.RAMOND)
        return format_vector(psi_inverse(p_ns, w))
    v = parse_vector_expr(cmd.opt("vector"), Sector.NEVEU_SCHWARZ)
    return format_vector(psi(p_ns, v))


def handle_sigma(cmd: Command) -> Outcome:
    x = parse_algebra_expr(cmd.opt("element"), Sector.NEVEU_SCHWARZ)
    return str(sigma(x, _convention(cmd)))


def handle_extract(cmd: Command) -> Outcome:
    """Self-test: build a module from the flags and read its parameters back."""
    params = _params(cmd)
    found = extract_params(partial(act, params), params.sector, _bound(cmd))
    matches = (
        found.lambda_ == params.lambda_ and found.alpha == params.alpha and found.h == params.h
    )
    return ProbeReport(
        name="extract",
        passed=matches,
        checked=1,
        data={
            "lambda": str(found.lambda_),
            "alpha": str(found.alpha),
            "h": format_poly(found.h, ("t", "s")),
        },
    )


# ===== verify / probe targets =====


def _verify_transport(cmd: Command) -> ProbeReport:
    bad_m = check_transport(_h(cmd), parse_scalar(cmd.opt("alpha", "0")), _bound(cmd))
    return ProbeReport(
        name="transport",
        passed=bad_m is None,
        checked=2 * _bound(cmd) + 1 if bad_m is None else 0,
        data={"first_failing_m": bad_m} if bad_m is not None else {"m_bound": _bound(cmd)},
    )


def _verify_h_identity(cmd: Command) -> ProbeReport:
    hs = [_h(cmd)] if cmd.opt("h") is not None else None
    alphas = [parse_scalar(cmd.opt("alpha"))] if cmd.opt("alpha") is not None else None
    return sweeps.sweep_h_identity(hs, alphas, _bound(cmd), _workers(cmd))


VERIFY_TARGETS: dict[str, Callable[[Command], ProbeReport]] = {
    "jacobi": lambda c: sweeps.sweep_super_jacobi(
        _sector(c) or Sector.RAMOND, _bound(c), _convention(c), _workers(c)
    ),
    "supersymmetry": lambda c: sweeps.sweep_supersymmetry(
        _sector(c) or Sector.RAMOND, _bound(c), _convention(c), _workers(c)
    ),
    "axioms": lambda c: sweeps.sweep_module_axioms(
        _params(c), _bound(c), _window(c), _convention(c), _workers(c)
    ),
    "sigma": lambda c: sweeps.sweep_sigma_hom(_bound(c), _convention(c), _workers(c)),
    "psi": lambda c: sweeps.sweep_psi_intertwiner(
        _h(c),
        parse_scalar(c.opt("alpha", "0")),
        parse_scalar(c.opt("lambda", "1")),
        _sqrt_lambda(c),
        _bound(c),
        _window(c),
        _workers(c),
    ),
    "h-identity": _verify_h_identity,
    "g0-square": lambda c: sweeps.sweep_g0_square(_params(c, Sector.RAMOND), _window(c)),
    "quotient": lambda c: sweeps.sweep_quotient_consistency(
        _params(c, Sector.RAMOND), int(c.opt("i", 0)), _bound(c), int(c.opt("s_deg", 3))
    ),
    "transport": _verify_transport,
}


def _closure(cmd: Command) -> ProbeReport:
    params = _params(cmd)
    seed: SuperVector = parse_vector_expr(cmd.opt("seed", "1"), params.sector)
    return probes.closure_probe(params, seed, _bound(cmd), _window(cmd))


PROBE_TARGETS: dict[str, Callable[[Command], ProbeReport]] = {
    "closure": _closure,
    "pi": lambda c: probes.pi_invariance_probe(
        _params(c, Sector.RAMOND),
        int(c.opt("i", 1)),
        _bound(c),
        _window(c),
        bool(c.opt("printed_odd_part", False)),
    ),
    "filtration": lambda c: probes.filtration_probe(
        _params(c, Sector.RAMOND), int(c.opt("k", 0)), _bound(c), _window(c)
    ),
    "quotient": lambda c: probes.quotient_simplicity_probe(
        _params(c, Sector.RAMOND), int(c.opt("i", 0)), _bound(c), int(c.opt("s_deg", 3))
    ),
    "freeness": lambda c: probes.freeness_witness(_params(c), _window(c)),
}


def handle_verify(cmd: Command) -> Outcome:
    assert cmd.target is not None
    return VERIFY_TARGETS[cmd.target](cmd)


def handle_probe(cmd: Command) -> Outcome:
    assert cmd.target is not None
    return PROBE_TARGETS[cmd.target](cmd)


def handle_faults(cmd: Command) -> Outcome:
    if cmd.opt("list", False):
        return "\n".join(f"{f.id}\t{f.target}\t{f.description}" for f in FAULTS)
    fault_id = cmd.opt("fault")
    if fault_id is not None:
        try:
            return [run_fault(get_fault(fault_id))]
        except KeyError:
            raise ValueError(f"Unknown fault {fault_id!r}") from None
    return run_fault_matrix()


HANDLERS: dict[str, Callable[[Command], Outcome]] = {
    "bracket": handle_bracket,
    "act": handle_act,
    "psi": handle_psi,
    "sigma": handle_sigma,
    "extract": handle_extract,
    "verify": handle_verify,
    "probe": handle_probe,
    "faults": handle_faults,
}


# ===== Rendering =====


def render_report(report: ProbeReport) -> str:
    status = "PASSED" if report.passed else "FAILED"
    lines = [f"{report.name}: {status} (checked {report.checked})"]
    ce = report.counterexample
    if ce is not None:
        lines.append("  inputs: " + ", ".join(f"{k}={v}" for k, v in ce.inputs.items()))
        for label, value in (("lhs", ce.lhs), ("rhs", ce.rhs), ("residual", ce.residual)):
            if value is not None:
                lines.append(f"  {label}: {value}")
    for key, value in (report.data or {}).items():
        lines.append(f"  {key}: {value}")
    return "\n".join(lines)


def _dump(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True)


def render(outcome: Outcome, as_json: bool) -> tuple[int, str]:
    if isinstance(outcome, str):
        return 0, _dump({"result": outcome}) if as_json else outcome
    reports = [outcome] if isinstance(outcome, ProbeReport) else outcome
    code = 0 if all(r.passed for r in reports) else 1
    if as_json:
        return code, "\n".join(_dump(r.to_json_dict()) for r in reports)
    return code, "\n".join(render_report(r) for r in reports)


def run(cmd: Command) -> tuple[int, str]:
    """
    Execute a command.

    Returns:
        (exit code, text to print on stdout)
    """
    as_json = bool(cmd.opt("json", False))
    logger.debug("command_started", verb=cmd.verb, target=cmd.target)
    try:
        outcome = HANDLERS[cmd.verb](cmd)
    except Bms3Error as e:
        logger.warning(
            "command_rejected", verb=cmd.verb, error_code=e.error_code.value, message=e.message
        )
        return 2, _dump(e.to_dict()) if as_json else f"error: {e}"
    except (ValidationError, ValueError) as e:
        logger.warning("command_rejected", verb=cmd.verb, message=str(e))
        payload = {"error": "USAGE", "message": str(e), "details": {}}
        return 2, _dump(payload) if as_json else f"error: {e}"
    code, text = render(outcome, as_json)
    logger.debug("command_finished", verb=cmd.verb, exit_code=code)
    return code, text

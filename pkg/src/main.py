"""
Command-line entry point for the super-BMS3 verification engine.

This module:
- Configures structured logging with structlog (stderr, level from settings)
- Declares the argparse surface: one sub-command per verb
- Turns parsed arguments into a ``Command`` and prints the outcome

Design decisions:
- Logs go to stderr so stdout carries only results and JSON reports
- JSON logs for pipelines, console logs for terminals (BMS3_LOG_FORMAT)
- argparse errors exit 2, the same code as rejected input
- No environment variable changes a result; flags carry every semantic input
"""

import argparse
import logging
import sys
from collections.abc import Sequence

import structlog

from src.cli.commands import PROBE_TARGETS, VERIFY_TARGETS, Command, run
from src.config import settings

# ===== Structured Logging Configuration =====


def stderr_logger_factory(*_args: object) -> structlog.PrintLogger:
    """A logger on whatever sys.stderr is at bind time, not at configuration time."""
    return structlog.PrintLogger(sys.stderr)


def configure_logging() -> None:
    structlog.configure(
        processors=[
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.stdlib.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer()
            if settings.log_format == "json"
            else structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelName(settings.log_level.upper())
        ),
        logger_factory=stderr_logger_factory,
        cache_logger_on_first_use=False,
    )


logger = structlog.get_logger()


# ===== Argument parsing =====


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sector", choices=["R", "NS"], help="module family")
    p.add_argument("--lambda", dest="lambda", help="nonzero scalar, e.g. 2 or sqrt2")
    p.add_argument("--alpha", help="scalar")
    p.add_argument("--h", help="polynomial in t, e.g. 't^2 + 1'")
    p.add_argument("--sqrt-lambda", dest="sqrt_lambda", help="chosen square root of lambda")


def _add_bounds(p: argparse.ArgumentParser, window: bool = True) -> None:
    p.add_argument("--bound", type=int, help="generator index bound")
    if window:
        p.add_argument("--max-e1", dest="max_e1", type=int, help="window cap, first variable")
        p.add_argument("--max-e2", dest="max_e2", type=int, help="window cap, second variable")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="print the stable JSON form")
    p.add_argument(
        "--convention",
        choices=["consistent", "printed"],
        help="central term of [G_r, G_-r] (default consistent)",
    )
    p.add_argument("--workers", type=int, help="worker processes for sweep grids")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bms3",
        description="Exact computations and verification sweeps for the super-BMS3 algebras",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("bracket", help="super-bracket of two elements")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--sector", choices=["R", "NS"])
    _add_common(p)

    p = sub.add_parser("act", help="act with an element on a vector")
    p.add_argument("element")
    p.add_argument("vector", help="'even: <poly> ; odd: <poly>'")
    _add_params(p)
    _add_common(p)

    p = sub.add_parser("psi", help="map an NS vector into the restricted Ramond module")
    p.add_argument("vector")
    _add_params(p)
    p.add_argument("--inverse", action="store_true", help="apply the inverse map")
    _add_common(p)

    p = sub.add_parser("sigma", help="embed an NS element into the Ramond algebra")
    p.add_argument("element")
    _add_common(p)

    p = sub.add_parser("extract", help="recover (lambda, alpha, h) from a module action")
    _add_params(p)
    _add_bounds(p, window=False)
    _add_common(p)

    p = sub.add_parser("verify", help="run an identity sweep")
    p.add_argument("target", choices=sorted(VERIFY_TARGETS))
    _add_params(p)
    _add_bounds(p)
    p.add_argument("--i", type=int, help="quotient layer index")
    p.add_argument("--s-deg", dest="s_deg", type=int, help="degree cap in s for quotients")
    _add_common(p)

    p = sub.add_parser("probe", help="run a submodule or simplicity probe")
    p.add_argument("target", choices=sorted(PROBE_TARGETS))
    _add_params(p)
    _add_bounds(p)
    p.add_argument("--seed", help="closure seed vector")
    p.add_argument("--i", type=int, help="Pi_i or quotient index")
    p.add_argument("--k", type=int, help="valuation floor of F_k")
    p.add_argument("--s-deg", dest="s_deg", type=int, help="degree cap in s for quotients")
    p.add_argument(
        "--printed-odd-part",
        dest="printed_odd_part",
        action="store_true",
        help="use all of tC[u, s] as the odd part of Pi_i",
    )
    _add_common(p)

    p = sub.add_parser("faults", help="run the fault-injection matrix")
    p.add_argument("--fault", help="run a single fault by id")
    p.add_argument("--list", action="store_true", help="list the registered faults")
    p.add_argument("--json", action="store_true")

    return parser


def to_command(ns: argparse.Namespace) -> Command:
    options = {k: v for k, v in vars(ns).items() if k not in ("verb", "target")}
    return Command(verb=ns.verb, target=getattr(ns, "target", None), options=options)


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging()
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logger.debug("cli_invoked", verb=ns.verb, target=getattr(ns, "target", None))
    code, text = run(to_command(ns))
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

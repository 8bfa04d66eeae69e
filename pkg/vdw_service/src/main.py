import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pandas as pd

from src.api.commands.free_space import free_space
from src.api.commands.half_space import half_space
from src.api.commands.limits import limits
from src.api.commands.thresholds import thresholds
from src.api.commands.validate import validate
from src.api.dependencies import (
    get_closed_form_service,
    get_force_service,
    get_potential_service,
    get_sweep_service,
    get_threshold_service,
    get_validation_service,
)
from src.api.schemas.scenario_schema import ScenarioConfig, apply_overrides, load_scenario
from src.config.settings import get_settings
from src.infrastructure.output.writers import write_rows
from src.utils.exceptions import ConfigError, NumericalError, ValidationFailedError
from src.utils.logger import setup_logger
from src.utils.middleware.error_guard import command_guard
from src.utils.middleware.run_context import run_context

logger = setup_logger(__name__)


class CliParser(argparse.ArgumentParser):
    """Usage errors are config errors (exit 1), not argparse's exit 2."""

    def error(self, message):
        raise ConfigError(f"{self.prog}: {message}")


def resolve_config(args) -> ScenarioConfig:
    return apply_overrides(
        load_scenario(args.config),
        rel_tol=args.rel_tol,
        points=args.points,
        log=args.log,
        output=args.output,
        fmt=args.format,
        default_rel_tol=get_settings().QUAD_REL_TOL,
    )


def emit(frame: pd.DataFrame, config: ScenarioConfig, command: str) -> None:
    meta = {"command": command, "rel_tol": config.rel_tol, "config": config.effective()}
    write_rows(frame, meta, config.output.format, config.output.path)


def sweep_status(frame: pd.DataFrame) -> int:
    failed = int(frame["error"].ne("").sum())
    if failed:
        logger.warning({"type": "SweepFailures", "failed_rows": failed, "rows": len(frame)})
        return NumericalError.exit_code
    return 0


def cmd_free_space(args) -> int:
    config = resolve_config(args)
    potentials = get_potential_service(config.rel_tol)
    frame = free_space(config, potentials, get_force_service(potentials), get_sweep_service())
    emit(frame, config, "free-space")
    return sweep_status(frame)


def cmd_half_space(args) -> int:
    config = resolve_config(args)
    if args.no_forces:
        config = config.model_copy(update={"forces": False})
    potentials = get_potential_service(config.rel_tol)
    frame = half_space(config, potentials, get_force_service(potentials), get_sweep_service())
    emit(frame, config, "half-space")
    return sweep_status(frame)


def cmd_limits(args) -> int:
    config = resolve_config(args)
    closed_forms = get_closed_form_service(get_potential_service(config.rel_tol))
    frame = limits(args.case, config, closed_forms, get_threshold_service(closed_forms))
    emit(frame, config, "limits")
    return 0


def cmd_thresholds(args) -> int:
    config = resolve_config(args)
    closed_forms = get_closed_form_service(get_potential_service(config.rel_tol))
    frame = thresholds(get_threshold_service(closed_forms), scan_points=args.scan)
    emit(frame, config, "thresholds")
    return 0


def cmd_validate(args) -> int:
    config = resolve_config(args)
    frame, report = validate(get_validation_service(config.rel_tol), quick=args.quick)
    emit(frame, config, "validate")
    if not report.passed:
        names = ", ".join(c.name for c in report.failures)
        raise ValidationFailedError(f"{len(report.failures)} of {len(report.checks)} checks failed: {names}")
    return 0


def build_parser() -> CliParser:
    common = CliParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="scenario JSON file")
    common.add_argument("--rel-tol", type=float, metavar="R", help="outer relative quadrature tolerance")
    common.add_argument("--points", type=int, metavar="N", help="number of sweep points")
    spacing = common.add_mutually_exclusive_group()
    spacing.add_argument("--log", dest="log", action="store_const", const=True, help="log-spaced sweep")
    spacing.add_argument("--linear", dest="log", action="store_const", const=False, help="linear sweep")
    common.add_argument("--output", metavar="PATH", help="output file; stdout when omitted")
    common.add_argument("--format", choices=["csv", "json"])

    parser = CliParser(prog="vdw", description="Two-atom van der Waals potentials and forces near a half space")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("free-space", parents=[common], help="U0 and radial force of two atoms in free space")
    p.set_defaults(handler=cmd_free_space)

    p = sub.add_parser("half-space", parents=[common], help="U0, U1, U2 and forces near a surface")
    p.add_argument("--no-forces", action="store_true", help="skip the finite-difference forces")
    p.set_defaults(handler=cmd_half_space)

    p = sub.add_parser("limits", parents=[common], help="closed-form limits and image signs")
    p.add_argument("case", nargs="?", default="all")
    p.set_defaults(handler=cmd_limits)

    p = sub.add_parser("thresholds", parents=[common], help="sign-change ratios of the vertical corrections")
    p.add_argument("--scan", type=int, metavar="N", help="emit the scanned correction on N points instead")
    p.set_defaults(handler=cmd_thresholds)

    p = sub.add_parser("validate", parents=[common], help="run the acceptance checks")
    p.add_argument("--quick", action="store_true", help="closed-form and single-quadrature checks only")
    p.set_defaults(handler=cmd_validate)
    return parser


def main(argv=None) -> int:
    with run_context() as run_id:
        try:
            args = build_parser().parse_args(argv)
        except ConfigError as exc:
            logger.error({"type": type(exc).__name__, "error": exc.message, "run_id": run_id, "command": "vdw"})
            return exc.exit_code

        logger.info({"event": "start", "command": args.command, "run_id": run_id})
        code = command_guard(args.command, lambda: args.handler(args))
        logger.info({"event": "finish", "command": args.command, "exit_code": code})
        return code


if __name__ == "__main__":
    sys.exit(main())

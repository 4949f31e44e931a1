"""Command-line front-end: point, sweep and mpps subcommands.

Exit status: 0 on success, 2 on invalid input, 1 when a config file cannot
be loaded or output cannot be written.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from filtration import __version__
from filtration.core.reports import run_mpps, run_point, run_sweep
from filtration.schemas.config import ScenarioConfig
from filtration.schemas.sweep import GridScale, SweepParameter
from filtration.utils.errors import ConfigFileError, FiltrationError, config_file_error, validation_message
from filtration.utils.log import configure_logging
from filtration.utils.render import OutputFormat, render_mpps, render_point, render_sweep
from filtration.utils.settings import Settings, get_settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO_ERROR = 1
EXIT_VALIDATION_ERROR = 2

# argparse dest -> ScenarioConfig field
SCENARIO_FLAGS = {
    "L": "thickness_L",
    "dp": "diameter_dp",
    "df": "fiber_diameter_df",
    "alpha": "solidity_alpha",
    "u": "velocity_u",
    "T": "temperature_T",
    "mu": "viscosity_mu",
    "rho_fluid": "fluid_density_rho_f",
    "rho_particle": "density_rho_p",
    "dF": "element_diameter_dF",
    "area": "element_area",
    "perimeter": "element_perimeter",
    "dp_lo": "dp_lo",
    "dp_hi": "dp_hi",
    "tol": "tol",
}
CONSTANT_FLAGS = {"cd": "drag_CD", "kb": "boltzmann_k"}
SWEEP_FLAGS = {"param": "parameter", "start": "start", "stop": "stop", "points": "points"}


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--config", metavar="PATH", help="JSON scenario file; flags override its values")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.REPORT.value)

    medium = common.add_argument_group("filter medium")
    medium.add_argument("--L", type=float, metavar="MM", help="thickness (mm)")
    medium.add_argument("--df", type=float, metavar="UM", help="fiber diameter (um)")
    medium.add_argument("--alpha", type=float, help="solidity, fiber volume fraction")
    medium.add_argument("--dF", type=float, metavar="M", help="element diameter for Reynolds (m)")
    medium.add_argument("--area", type=float, metavar="M2", help="element cross-section area (m^2)")
    medium.add_argument("--perimeter", type=float, metavar="M", help="element perimeter (m)")

    fluid = common.add_argument_group("fluid")
    fluid.add_argument("--u", type=float, metavar="M/S", help="face velocity (m/s)")
    fluid.add_argument("--T", type=float, metavar="K", help="absolute temperature (K)")
    fluid.add_argument("--mu", type=float, help="absolute viscosity (kg/(m s))")
    fluid.add_argument("--rho", type=float, help="one density for both fluid and particle (kg/m^3)")
    fluid.add_argument("--rho-fluid", type=float, help="fluid density (kg/m^3), overrides --rho")

    particle = common.add_argument_group("particle")
    particle.add_argument("--dp", type=float, metavar="UM", help="particle diameter (um)")
    particle.add_argument("--rho-particle", type=float, help="particle density (kg/m^3), overrides --rho")

    constants = common.add_argument_group("model constants")
    constants.add_argument("--cd", type=float, help="drag coefficient C_D (default 0.44)")
    constants.add_argument("--kb", type=float, help="Boltzmann constant (default 1.3708e-23 J/K)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="filtration",
        description="Efficiency and penetration of a fibrous filter medium",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("point", parents=[common], allow_abbrev=False, help="evaluate one scenario")

    sweep = commands.add_parser("sweep", parents=[common], allow_abbrev=False, help="one-parameter sweep")
    sweep.add_argument("--param", choices=[p.value for p in SweepParameter], help="swept parameter")
    sweep.add_argument("--start", type=float, help="first grid value")
    sweep.add_argument("--stop", type=float, help="last grid value")
    sweep.add_argument("--points", type=int, help="number of grid points (>= 2)")
    sweep.add_argument("--log", action="store_true", help="logarithmic grid")

    mpps = commands.add_parser("mpps", parents=[common], allow_abbrev=False, help="most penetrating particle size")
    mpps.add_argument("--dp-lo", type=float, metavar="UM", help="lower end of the search interval (default 0.01)")
    mpps.add_argument("--dp-hi", type=float, metavar="UM", help="upper end of the search interval (default 10)")
    mpps.add_argument("--tol", type=float, metavar="UM", help="final bracket width (default 1e-4)")
    return parser


def read_config_file(path: str) -> Dict[str, Any]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise config_file_error(path, exc.strerror or str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise config_file_error(path, f"invalid JSON ({exc})") from exc


def _merge(data: Dict[str, Any], key: str, overrides: Dict[str, Any]) -> None:
    if not overrides:
        return
    existing = data.get(key)
    data[key] = {**(existing if isinstance(existing, dict) else {}), **overrides}


def load_config(args: argparse.Namespace) -> ScenarioConfig:
    """Config file values overlaid with every flag that was given."""
    data: Any = read_config_file(args.config) if args.config else {}
    if not isinstance(data, dict):
        return ScenarioConfig.model_validate(data)

    if args.rho is not None:
        data["fluid_density_rho_f"] = args.rho
        data["density_rho_p"] = args.rho
    for dest, field in SCENARIO_FLAGS.items():
        value = getattr(args, dest, None)
        if value is not None:
            data[field] = value

    _merge(data, "constants", {
        field: getattr(args, dest) for dest, field in CONSTANT_FLAGS.items() if getattr(args, dest) is not None
    })
    if args.command == "sweep":
        overrides = {
            field: getattr(args, dest) for dest, field in SWEEP_FLAGS.items() if getattr(args, dest) is not None
        }
        if args.log:
            overrides["scale"] = GridScale.LOGARITHMIC.value
        _merge(data, "sweep", overrides)
    return ScenarioConfig.model_validate(data)


def _point(config: ScenarioConfig, output: OutputFormat, settings: Settings) -> str:
    return render_point(run_point(config), output)


def _sweep(config: ScenarioConfig, output: OutputFormat, settings: Settings) -> str:
    return render_sweep(run_sweep(config, workers=settings.sweep_workers), output)


def _mpps(config: ScenarioConfig, output: OutputFormat, settings: Settings) -> str:
    return render_mpps(run_mpps(config), output)


COMMANDS: Dict[str, Callable[[ScenarioConfig, OutputFormat, Settings], str]] = {
    "point": _point,
    "sweep": _sweep,
    "mpps": _mpps,
}


def _fail(message: str, status: int) -> int:
    logger.debug("exiting with status %d", status, exc_info=True)
    print(f"error: {message}", file=sys.stderr)
    return status


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except ValidationError as exc:
        return _fail(f"invalid settings: {validation_message(exc)}", EXIT_VALIDATION_ERROR)
    configure_logging(settings.log_level)

    try:
        config = load_config(args)
        text = COMMANDS[args.command](config, OutputFormat(args.format), settings)
    except ConfigFileError as exc:
        return _fail(str(exc), EXIT_IO_ERROR)
    except ValidationError as exc:
        return _fail(f"invalid input: {validation_message(exc)}", EXIT_VALIDATION_ERROR)
    except FiltrationError as exc:
        return _fail(f"invalid input: {exc}", EXIT_VALIDATION_ERROR)

    try:
        sys.stdout.write(text)
        sys.stdout.flush()
    except OSError as exc:
        return _fail(f"cannot write output: {exc}", EXIT_IO_ERROR)
    return EXIT_OK

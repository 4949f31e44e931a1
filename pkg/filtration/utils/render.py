import csv
import io
import json
from enum import Enum
from typing import Iterable, List, Optional, Sequence

from filtration.schemas.config import MppsReport, ReportRecord
from filtration.schemas.scenario import Scenario


class OutputFormat(str, Enum):
    REPORT = "report"
    JSON = "json"
    CSV = "csv"


CSV_COLUMNS = [
    "parameter_value", "P_percent", "E_percent", "nD", "nR", "nI",
    "Ku", "Pe", "NR", "Stk", "J", "Cc", "Re", "warnings",
]
MPPS_CSV_COLUMNS = ["dp_star", "p_max_percent", "bracket_lo", "bracket_hi", "boundary"]
WARNING_SEPARATOR = "; "


def fmt6(value: Optional[float]) -> str:
    """Six significant digits for the human report."""
    return "-" if value is None else format(value, ".6g")


def _machine(value) -> str:
    # str() of a float is its shortest round-trip form
    if value is None:
        return ""
    if isinstance(value, Enum):
        return value.value
    return str(value)


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_machine(value) for value in row])
    return buffer.getvalue()


def _csv_row(record: ReportRecord) -> List:
    return [
        record.parameter_value, record.P_percent, record.E_percent,
        record.nD, record.nR, record.nI, record.Ku, record.Pe, record.NR,
        record.Stk, record.J, record.Cc, record.Re,
        WARNING_SEPARATOR.join(record.warnings),
    ]


def _json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _inputs_block(scenario: Scenario) -> List[str]:
    medium, fluid, particle = scenario.medium, scenario.fluid, scenario.particle
    rows = [
        ("L", medium.thickness_L, "mm"),
        ("d_p", particle.diameter_dp, "um"),
        ("d_f", medium.fiber_diameter_df, "um"),
        ("alpha", medium.solidity_alpha, ""),
        ("T", fluid.temperature_T, "K"),
        ("mu", fluid.viscosity_mu, "kg/(m s)"),
        ("u", fluid.velocity_u, "m/s"),
        ("rho_p", particle.density_rho_p, "kg/m^3"),
        ("rho_f", fluid.fluid_density_rho_f, "kg/m^3"),
        ("d_F", medium.element_diameter_dF, "m"),
    ]
    return [f"  {name:<8}{fmt6(value)} {unit}".rstrip() for name, value, unit in rows]


def render_point(record: ReportRecord, output: OutputFormat) -> str:
    if output == OutputFormat.JSON:
        return _json(record.model_dump(mode="json"))
    if output == OutputFormat.CSV:
        return _csv(CSV_COLUMNS, [_csv_row(record)])

    lines = ["Fibrous filter efficiency & penetration", "Inputs"]
    lines += _inputs_block(record.scenario)
    lines += [
        "Results",
        f"  {'E':<8}{fmt6(record.E_percent)} %",
        f"  {'P':<8}{fmt6(record.P_percent)} %",
        f"  {'n_D':<8}{fmt6(record.nD)}",
        f"  {'n_R':<8}{fmt6(record.nR)}",
        f"  {'n_I':<8}{fmt6(record.nI)}",
        f"  {'Re':<8}{fmt6(record.Re)}",
        "Dimensionless groups",
        f"  {'Ku':<8}{fmt6(record.Ku)}",
        f"  {'Pe':<8}{fmt6(record.Pe)}",
        f"  {'N_R':<8}{fmt6(record.NR)}",
        f"  {'Stk':<8}{fmt6(record.Stk)}",
        f"  {'J':<8}{fmt6(record.J)}",
        f"  {'Cc':<8}{fmt6(record.Cc)}",
        f"Dominant mechanism: {record.dominant_mechanism.value}",
    ]
    lines += _warnings_block(record.warnings)
    return "\n".join(lines) + "\n"


def _warnings_block(warnings: List[str]) -> List[str]:
    if not warnings:
        return []
    return ["Warnings"] + [f"  - {warning}" for warning in warnings]


def render_sweep(records: List[ReportRecord], output: OutputFormat) -> str:
    if output == OutputFormat.JSON:
        return _json([record.model_dump(mode="json") for record in records])
    if output == OutputFormat.CSV:
        return _csv(CSV_COLUMNS, [_csv_row(record) for record in records])

    parameter = records[0].parameter.value if records else "value"
    header = [parameter, "P %", "E %", "n_D", "n_R", "n_I", "Re"]
    lines = ["  ".join(f"{name:>12}" for name in header)]
    warnings: List[str] = []
    for index, record in enumerate(records):
        values = [record.parameter_value, record.P_percent, record.E_percent,
                  record.nD, record.nR, record.nI, record.Re]
        lines.append("  ".join(f"{fmt6(value):>12}" for value in values))
        warnings += [f"[{index}] {warning}" for warning in record.warnings]
    lines += _warnings_block(warnings)
    return "\n".join(lines) + "\n"


def render_mpps(report: MppsReport, output: OutputFormat) -> str:
    if output == OutputFormat.JSON:
        return _json(report.model_dump(mode="json"))
    if output == OutputFormat.CSV:
        row = [report.dp_star, report.p_max_percent, report.bracket_lo, report.bracket_hi, report.boundary]
        return _csv(MPPS_CSV_COLUMNS, [row])

    lines = [
        "Most penetrating particle size",
        f"  {'d_p*':<10}{fmt6(report.dp_star)} um",
        f"  {'P max':<10}{fmt6(report.p_max_percent)} %",
        f"  {'bracket':<10}[{fmt6(report.bracket_lo)}, {fmt6(report.bracket_hi)}] um",
    ]
    if report.boundary is not None:
        lines.append(f"  maximum on the {report.boundary.value} boundary of the search interval")
    if not report.unimodal:
        lines.append("  coarse scan was not unimodal; refined around the global grid maximum")
    return "\n".join(lines) + "\n"

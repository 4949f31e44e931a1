from typing import List, Optional

from filtration.core.model import evaluate_scenario
from filtration.core.mpps import find_mpps
from filtration.core.sweep import sweep
from filtration.core.units import to_percent
from filtration.schemas.config import MppsReport, ReportRecord, ScenarioConfig
from filtration.schemas.results import FiltrationResult
from filtration.schemas.scenario import Scenario
from filtration.schemas.sweep import PARAMETER_FIELDS, SweepParameter
from filtration.utils.errors import bracket_error, missing_field_error


def build_record(
    scenario: Scenario,
    result: FiltrationResult,
    parameter: Optional[SweepParameter] = None,
    parameter_value: Optional[float] = None,
) -> ReportRecord:
    """Flatten a FiltrationResult into the reported quantities."""
    groups, factors = result.groups, result.factors
    return ReportRecord(
        parameter=parameter,
        parameter_value=parameter_value,
        scenario=scenario,
        P_percent=to_percent(result.penetration_P),
        E_percent=to_percent(result.efficiency_E),
        nD=factors.eta_diffusion_nD,
        nR=factors.eta_interception_nR,
        nI=factors.eta_impaction_nI,
        sum_n=factors.sum_n,
        Ku=groups.kuwabara_Ku,
        Pe=groups.peclet_Pe,
        NR=groups.interception_NR,
        Stk=groups.stokes_Stk,
        J=groups.impaction_J,
        Cc=groups.slip_Cc,
        Re=groups.reynolds_Re,
        dominant_mechanism=factors.dominant,
        warnings=list(result.warnings),
    )


def run_point(config: ScenarioConfig) -> ReportRecord:
    """Single evaluation of the configured scenario."""
    scenario = config.to_scenario()
    return build_record(scenario, evaluate_scenario(scenario))


def run_sweep(config: ScenarioConfig, workers: Optional[int] = None) -> List[ReportRecord]:
    """Evaluate the configured sweep; one record per grid point, in grid order."""
    spec = config.sweep
    if spec is None:
        raise missing_field_error("sweep")
    section, field = PARAMETER_FIELDS[spec.parameter]
    # Placeholder d_p for dp sweeps; each grid point replaces it
    base = config.to_scenario(diameter_dp=spec.stop if spec.parameter == SweepParameter.DP else None)
    curve = sweep(base, spec, workers=workers)
    return [
        build_record(base.replace(section, field, point.parameter_value), point.result,
                     spec.parameter, point.parameter_value)
        for point in curve
    ]


def run_mpps(config: ScenarioConfig) -> MppsReport:
    """Most-penetrating particle size over the configured bracket."""
    if not (0 < config.dp_lo < config.dp_hi):
        raise bracket_error(config.dp_lo, config.dp_hi)
    base = config.to_scenario(diameter_dp=config.dp_hi)
    mpps = find_mpps(base, config.dp_lo, config.dp_hi, config.tol)
    return MppsReport(
        scenario=base.replace("particle", "diameter_dp", mpps.dp_star),
        dp_star=mpps.dp_star,
        p_max_percent=to_percent(mpps.p_max),
        bracket_lo=mpps.bracket[0],
        bracket_hi=mpps.bracket[1],
        boundary=mpps.boundary,
        unimodal=mpps.unimodal,
        evaluations=mpps.evaluations,
        tol=config.tol,
    )

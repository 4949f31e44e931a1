import logging
from typing import List, Optional

from filtration.core import formulas
from filtration.schemas.results import DimensionlessGroups, FiltrationResult, MechanismFactors
from filtration.schemas.scenario import FilterMedium, FluidState, ModelConstants, Particle, Scenario

logger = logging.getLogger(__name__)


def evaluate(
    medium: FilterMedium,
    fluid: FluidState,
    particle: Particle,
    constants: Optional[ModelConstants] = None,
) -> FiltrationResult:
    """Evaluate the full model chain for one scenario.

    Ku -> Cc -> Pe -> n_D, N_R -> n_R, Stk -> J -> n_I, sum -> P -> E.
    Reynolds is only computed when the element diameter is known.
    """
    constants = constants or ModelConstants()
    alpha = medium.solidity_alpha
    df = medium.fiber_diameter_df
    dp = particle.diameter_dp
    warnings: List[str] = []

    ku = formulas.kuwabara(alpha)
    cc = formulas.slip_correction(dp, constants)
    pe = formulas.peclet(fluid, df, dp, constants)
    n_d = formulas.eta_diffusion(alpha, ku, pe, constants)

    nr = formulas.interception_ratio(dp, df)
    n_r = formulas.eta_interception(alpha, ku, nr)

    stk = formulas.stokes(particle, fluid, df, constants)
    j = formulas.inertial_j(nr, alpha, constants)
    if j < 0:
        warnings.append(
            f"negative impaction factor J = {j:.6g} (N_R = {nr:.6g}, alpha = {alpha:.6g}): "
            "n_I reduces the mechanism sum and raises P"
        )
    n_i = formulas.eta_impaction(stk, j, ku)

    sum_n = n_d + n_r + n_i
    p = formulas.penetration(medium, sum_n)
    if sum_n < 0:
        warnings.append(
            f"negative mechanism sum sum_n = {sum_n:.6g}: P >= 1 and E <= 0"
        )
    if p == formulas.PENETRATION_CEILING:
        warnings.append("penetration overflows double precision; P reported as the largest finite float")
    elif p == 0.0:
        warnings.append("penetration underflows double precision; P reported as 0")
    e = formulas.efficiency(p)

    re = None
    if medium.element_diameter_dF is not None:
        re = formulas.reynolds(fluid, medium.element_diameter_dF)

    for warning in warnings:
        logger.debug("evaluate: %s", warning)

    return FiltrationResult(
        penetration_P=p,
        efficiency_E=e,
        groups=DimensionlessGroups(
            kuwabara_Ku=ku,
            peclet_Pe=pe,
            stokes_Stk=stk,
            interception_NR=nr,
            reynolds_Re=re,
            slip_Cc=cc,
            impaction_J=j,
        ),
        factors=MechanismFactors(
            eta_diffusion_nD=n_d,
            eta_interception_nR=n_r,
            eta_impaction_nI=n_i,
            sum_n=sum_n,
        ),
        warnings=warnings,
    )


def evaluate_scenario(scenario: Scenario) -> FiltrationResult:
    return evaluate(scenario.medium, scenario.fluid, scenario.particle, scenario.constants)

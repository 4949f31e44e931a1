"""Single-formula operations of the fibrous filter model.

Every function is pure and validates its own preconditions, raising
DomainError with the symbol that is out of range.
"""
import logging
import math
import sys

from filtration.core.units import (
    KG_M3_TO_KG_UM3,
    KG_M_S_TO_KG_UM_S,
    M_S_TO_UM_S,
    MM_TO_UM,
    UM2_TO_M2,
)
from filtration.schemas.scenario import FilterMedium, FluidState, ModelConstants, Particle
from filtration.utils.errors import out_of_domain_error

logger = logging.getLogger(__name__)

# Impaction J-factor polynomial (N_R below threshold) and constant branch
J_BASE = 29.6
J_SOLIDITY_COEFF = 28.0
J_SOLIDITY_EXP = 0.62
J_TAIL_COEFF = 27.5
J_TAIL_EXP = 2.8
J_CONSTANT = 2.0

# P reported when exp(-exponent) overflows for a negative mechanism sum
PENETRATION_CEILING = sys.float_info.max

# Below this 1 - alpha the Kuwabara closed form loses all significant digits
_KUWABARA_SERIES_BELOW = 1e-2


def _require_positive(symbol: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise out_of_domain_error(symbol, value, "must be finite and > 0")


def _require_non_negative(symbol: str, value: float) -> None:
    if not (math.isfinite(value) and value >= 0):
        raise out_of_domain_error(symbol, value, "must be finite and >= 0")


def _require_finite(symbol: str, value: float) -> None:
    if not math.isfinite(value):
        raise out_of_domain_error(symbol, value, "must be finite")


def _require_solidity(alpha: float) -> None:
    if not (0 < alpha < 1):
        raise out_of_domain_error("solidity_alpha", alpha, "must satisfy 0 < alpha < 1")


def kuwabara(alpha: float) -> float:
    """Kuwabara hydrodynamic factor Ku(alpha)."""
    _require_solidity(alpha)
    gap = 1.0 - alpha
    if gap >= _KUWABARA_SERIES_BELOW:
        return (4 * alpha - alpha ** 2 - 3) / 4 - math.log(alpha) / 2
    # Same quantity written as the tail of -ln(1 - gap) / 2
    total = 0.0
    term_power = gap ** 3
    n = 3
    while True:
        term = term_power / n
        total += term
        if term <= total * 1e-17:
            break
        term_power *= gap
        n += 1
    return total / 2


def slip_correction(dp: float, constants: ModelConstants) -> float:
    """Slip correction Cc, the bracketed factor of the Peclet number."""
    _require_positive("diameter_dp", dp)
    c = constants
    return 1 + (c.slip_lambda / dp) * (c.slip_A1 + c.slip_A2 * math.exp(-c.slip_A3 * dp))


def peclet(fluid: FluidState, df: float, dp: float, constants: ModelConstants) -> float:
    """Peclet number with the slip correction embedded; df and dp in um."""
    _require_positive("fiber_diameter_df", df)
    cc = slip_correction(dp, constants)
    numerator = 3 * math.pi * fluid.viscosity_mu * fluid.velocity_u * df * dp * UM2_TO_M2
    return numerator / (constants.boltzmann_k * fluid.temperature_T * cc)


def eta_diffusion(alpha: float, ku: float, pe: float, constants: ModelConstants) -> float:
    """Diffusion factor n_D."""
    _require_solidity(alpha)
    _require_positive("kuwabara_Ku", ku)
    _require_positive("peclet_Pe", pe)
    return constants.diffusion_coeff * ((1 - alpha) / ku) ** (1 / 3) * pe ** (-2 / 3)


def interception_ratio(dp: float, df: float) -> float:
    """N_R = d_p / d_f."""
    _require_positive("diameter_dp", dp)
    _require_positive("fiber_diameter_df", df)
    return dp / df


def eta_interception(alpha: float, ku: float, nr: float) -> float:
    """Interception factor n_R."""
    _require_solidity(alpha)
    _require_positive("kuwabara_Ku", ku)
    _require_non_negative("interception_NR", nr)
    return (1 - alpha) * nr ** 2 / (ku * (1 + nr))


def stokes(particle: Particle, fluid: FluidState, df: float, constants: ModelConstants) -> float:
    """Stokes number scaled by the drag coefficient C_D; d_p and d_f in um."""
    _require_positive("fiber_diameter_df", df)
    rho = particle.density_rho_p * KG_M3_TO_KG_UM3
    u = fluid.velocity_u * M_S_TO_UM_S
    mu = fluid.viscosity_mu * KG_M_S_TO_KG_UM_S
    return rho * particle.diameter_dp ** 2 * u * constants.drag_CD / (18 * mu * df)


def inertial_j(nr: float, alpha: float, constants: ModelConstants) -> float:
    """Impaction factor J; N_R exactly at the threshold takes the constant branch."""
    _require_non_negative("interception_NR", nr)
    _require_solidity(alpha)
    if nr >= constants.nr_threshold:
        return J_CONSTANT
    j = (J_BASE - J_SOLIDITY_COEFF * alpha ** J_SOLIDITY_EXP) * nr ** 2 - J_TAIL_COEFF * nr ** J_TAIL_EXP
    if j < 0:
        logger.debug("negative J = %g at N_R = %g, alpha = %g", j, nr, alpha)
    return j


def eta_impaction(stk: float, j: float, ku: float) -> float:
    """Impaction factor n_I; carries the sign of J."""
    _require_non_negative("stokes_Stk", stk)
    _require_positive("kuwabara_Ku", ku)
    return stk * j / (2 * ku ** 2)


def penetration(medium: FilterMedium, sum_n: float) -> float:
    """Penetration fraction through a medium of thickness L (mm).

    A negative mechanism sum gives P > 1; when exp overflows P saturates at
    the largest finite float.
    """
    _require_finite("sum_n", sum_n)
    thickness = medium.thickness_L * MM_TO_UM
    exponent = 4 * thickness * medium.solidity_alpha * sum_n / (math.pi * medium.fiber_diameter_df)
    try:
        return math.exp(-exponent)
    except OverflowError:
        return PENETRATION_CEILING


def efficiency(p: float) -> float:
    """E = 1 - P; negative only for P > 1."""
    if not (math.isfinite(p) and p >= 0):
        raise out_of_domain_error("penetration_P", p, "must be finite and >= 0")
    return 1 - p


def reynolds(fluid: FluidState, dF: float) -> float:
    """Reynolds number of the element flow, SI units throughout."""
    _require_positive("element_diameter_dF", dF)
    return fluid.velocity_u * dF * fluid.fluid_density_rho_f / fluid.viscosity_mu


def equivalent_diameter(area: float, perimeter: float) -> float:
    """Equivalent diameter 4A / perimeter, in the unit of the inputs."""
    _require_positive("element_area", area)
    _require_positive("element_perimeter", perimeter)
    return 4 * area / perimeter

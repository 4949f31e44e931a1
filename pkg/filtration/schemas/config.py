from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from filtration.core.formulas import equivalent_diameter
from filtration.schemas.results import Mechanism
from filtration.schemas.scenario import ModelConstants, Scenario
from filtration.schemas.sweep import Boundary, SweepParameter, SweepSpec


class ScenarioConfig(BaseModel):
    """Scenario as ingested from a JSON config file, CLI flags or an HTTP body.

    Physical fields are optional here; they are checked strictly when the
    config is turned into a Scenario. Element geometry is in SI (m^2, m).
    """
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    # Filter medium
    thickness_L: Optional[float] = None
    fiber_diameter_df: Optional[float] = None
    solidity_alpha: Optional[float] = None
    element_diameter_dF: Optional[float] = None
    element_area: Optional[float] = None
    element_perimeter: Optional[float] = None

    # Fluid
    viscosity_mu: Optional[float] = None
    temperature_T: Optional[float] = None
    velocity_u: Optional[float] = None
    fluid_density_rho_f: Optional[float] = None

    # Particle
    diameter_dp: Optional[float] = None
    density_rho_p: Optional[float] = None

    constants: ModelConstants = Field(default_factory=ModelConstants)
    sweep: Optional[SweepSpec] = None

    # MPPS search bracket and tolerance (um)
    dp_lo: float = 0.01
    dp_hi: float = 10.0
    tol: float = 1e-4

    @model_validator(mode="after")
    def _check_element_geometry(self) -> "ScenarioConfig":
        has_area = self.element_area is not None
        has_perimeter = self.element_perimeter is not None
        if has_area != has_perimeter:
            raise ValueError("element_area and element_perimeter must be given together")
        if has_area and self.element_diameter_dF is not None:
            raise ValueError("give either element_diameter_dF or element_area/element_perimeter, not both")
        return self

    def to_scenario(self, diameter_dp: Optional[float] = None) -> Scenario:
        """Strictly validated Scenario; diameter_dp overrides the configured one."""
        element_diameter = self.element_diameter_dF
        if self.element_area is not None:
            element_diameter = equivalent_diameter(self.element_area, self.element_perimeter)

        medium = {
            "thickness_L": self.thickness_L,
            "fiber_diameter_df": self.fiber_diameter_df,
            "solidity_alpha": self.solidity_alpha,
            "element_diameter_dF": element_diameter,
        }
        fluid = {
            "viscosity_mu": self.viscosity_mu,
            "temperature_T": self.temperature_T,
            "velocity_u": self.velocity_u,
            "fluid_density_rho_f": self.fluid_density_rho_f,
        }
        particle = {
            "diameter_dp": self.diameter_dp if diameter_dp is None else diameter_dp,
            "density_rho_p": self.density_rho_p,
        }
        # Unset fields are left out so the error reads "Field required"
        return Scenario.model_validate({
            "medium": {k: v for k, v in medium.items() if v is not None},
            "fluid": {k: v for k, v in fluid.items() if v is not None},
            "particle": {k: v for k, v in particle.items() if v is not None},
            "constants": self.constants,
        })


class ReportRecord(BaseModel):
    """One evaluated scenario as reported to the user; E and P in percent."""
    parameter: Optional[SweepParameter] = None
    parameter_value: Optional[float] = None
    scenario: Scenario
    P_percent: float
    E_percent: float
    nD: float
    nR: float
    nI: float
    sum_n: float
    Ku: float
    Pe: float
    NR: float
    Stk: float
    J: float
    Cc: float
    Re: Optional[float] = None
    dominant_mechanism: Mechanism
    warnings: List[str] = []


class MppsReport(BaseModel):
    scenario: Scenario
    dp_star: float
    p_max_percent: float
    bracket_lo: float
    bracket_hi: float
    boundary: Optional[Boundary] = None
    unimodal: bool
    evaluations: int
    tol: float

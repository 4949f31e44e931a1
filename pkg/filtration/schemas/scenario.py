from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

# Frozen, finite-only models: values are safe to share across threads
_STRICT = ConfigDict(frozen=True, allow_inf_nan=False, extra="forbid")


class FilterMedium(BaseModel):
    """Geometry and packing of the fibrous medium."""
    model_config = _STRICT

    thickness_L: float = Field(ge=0, description="Medium thickness (mm)")
    fiber_diameter_df: float = Field(gt=0, description="Fiber diameter (um)")
    solidity_alpha: float = Field(gt=0, lt=1, description="Fiber volume fraction V_f / V_F")
    element_diameter_dF: Optional[float] = Field(
        default=None, gt=0, description="Element or pipeline diameter for Reynolds (m)"
    )


class FluidState(BaseModel):
    """Carrier-fluid properties and face velocity."""
    model_config = _STRICT

    viscosity_mu: float = Field(gt=0, description="Absolute viscosity (kg/(m s))")
    temperature_T: float = Field(gt=0, description="Absolute temperature (K)")
    velocity_u: float = Field(gt=0, description="Face velocity (m/s)")
    fluid_density_rho_f: float = Field(gt=0, description="Fluid density (kg/m^3), Reynolds only")


class Particle(BaseModel):
    model_config = _STRICT

    diameter_dp: float = Field(gt=0, description="Particle diameter (um)")
    density_rho_p: float = Field(gt=0, description="Particle density (kg/m^3)")


class ModelConstants(BaseModel):
    """Empirical constants of the model; defaults are the calibrated values."""
    model_config = _STRICT

    boltzmann_k: float = Field(default=1.3708e-23, gt=0, description="Boltzmann constant (J/K)")
    slip_A1: float = Field(default=2.492, gt=0)
    slip_A2: float = Field(default=0.84, gt=0)
    slip_A3: float = Field(default=6.49, gt=0, description="Slip exponent coefficient (1/um)")
    slip_lambda: float = Field(default=0.067, gt=0, description="Mean free path factor (um)")
    drag_CD: float = Field(default=0.44, gt=0)
    nr_threshold: float = Field(default=0.4, gt=0, description="N_R at which J switches to its constant branch")
    diffusion_coeff: float = Field(default=1.61, gt=0)


class Scenario(BaseModel):
    """One complete filtration case: medium, fluid, particle and constants."""
    model_config = _STRICT

    medium: FilterMedium
    fluid: FluidState
    particle: Particle
    constants: ModelConstants = Field(default_factory=ModelConstants)

    def replace(self, section: str, field: str, value: float) -> "Scenario":
        """Return a re-validated copy with one field of one section changed."""
        data = self.model_dump()
        data[section][field] = value
        return Scenario.model_validate(data)

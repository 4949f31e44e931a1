from enum import Enum
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from filtration.schemas.results import FiltrationResult


class SweepParameter(str, Enum):
    DP = "dp"
    L = "L"
    DF = "df"
    ALPHA = "alpha"
    U = "u"
    T = "T"
    MU = "mu"
    RHO_P = "rho_p"


class GridScale(str, Enum):
    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"


class Boundary(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


# Sweep symbol -> (Scenario section, field)
PARAMETER_FIELDS: Dict[SweepParameter, Tuple[str, str]] = {
    SweepParameter.DP: ("particle", "diameter_dp"),
    SweepParameter.L: ("medium", "thickness_L"),
    SweepParameter.DF: ("medium", "fiber_diameter_df"),
    SweepParameter.ALPHA: ("medium", "solidity_alpha"),
    SweepParameter.U: ("fluid", "velocity_u"),
    SweepParameter.T: ("fluid", "temperature_T"),
    SweepParameter.MU: ("fluid", "viscosity_mu"),
    SweepParameter.RHO_P: ("particle", "density_rho_p"),
}


class SweepSpec(BaseModel):
    """One-parameter grid, in the units of the swept field."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False, extra="forbid")

    parameter: SweepParameter
    start: float
    stop: float
    points: int = Field(ge=2)
    scale: GridScale = GridScale.LINEAR

    @model_validator(mode="after")
    def _check_range(self) -> "SweepSpec":
        if not self.start < self.stop:
            raise ValueError(f"start ({self.start!r}) must be < stop ({self.stop!r})")
        if self.scale == GridScale.LOGARITHMIC and self.start <= 0:
            raise ValueError("a logarithmic grid requires start > 0")
        return self


class CurvePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    parameter_value: float
    result: FiltrationResult


class MppsResult(BaseModel):
    """Most-penetrating particle size and the interval it was refined in."""
    model_config = ConfigDict(frozen=True)

    dp_star: float
    p_max: float
    bracket: Tuple[float, float]
    boundary: Optional[Boundary] = None
    unimodal: bool = True
    evaluations: int = 0

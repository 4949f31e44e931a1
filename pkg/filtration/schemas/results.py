from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field


class Mechanism(str, Enum):
    DIFFUSION = "diffusion"
    INTERCEPTION = "interception"
    IMPACTION = "impaction"


class DimensionlessGroups(BaseModel):
    model_config = ConfigDict(frozen=True)

    kuwabara_Ku: float
    peclet_Pe: float
    stokes_Stk: float
    interception_NR: float
    reynolds_Re: Optional[float] = None  # only when the element diameter is known
    slip_Cc: float
    impaction_J: float


class MechanismFactors(BaseModel):
    """Single-fiber capture factors and their sum."""
    model_config = ConfigDict(frozen=True)

    eta_diffusion_nD: float
    eta_interception_nR: float
    eta_impaction_nI: float
    sum_n: float

    @computed_field
    @property
    def dominant(self) -> Mechanism:
        factors = {
            Mechanism.DIFFUSION: self.eta_diffusion_nD,
            Mechanism.INTERCEPTION: self.eta_interception_nR,
            Mechanism.IMPACTION: self.eta_impaction_nI,
        }
        return max(factors, key=factors.get)


class FiltrationResult(BaseModel):
    """Penetration, efficiency and every intermediate of one evaluation."""
    model_config = ConfigDict(frozen=True)

    # P > 1 and E < 0 only for a negative mechanism sum
    penetration_P: float = Field(ge=0)
    efficiency_E: float = Field(le=1)
    groups: DimensionlessGroups
    factors: MechanismFactors
    warnings: List[str] = []

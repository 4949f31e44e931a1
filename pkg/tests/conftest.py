from typing import List

import pytest

from filtration.schemas.scenario import FilterMedium, FluidState, ModelConstants, Particle, Scenario


@pytest.fixture
def worked_scenario() -> Scenario:
    return Scenario(
        medium=FilterMedium(thickness_L=1.0, fiber_diameter_df=2.0, solidity_alpha=0.05),
        fluid=FluidState(viscosity_mu=1.81e-5, temperature_T=293.0, velocity_u=0.1, fluid_density_rho_f=1000.0),
        particle=Particle(diameter_dp=0.1, density_rho_p=1000.0),
        constants=ModelConstants(),
    )


@pytest.fixture
def worked_flags() -> List[str]:
    return [
        "--L", "1", "--df", "2", "--alpha", "0.05", "--dp", "0.1", "--rho", "1000",
        "--u", "0.1", "--mu", "1.81e-5", "--T", "293",
    ]


@pytest.fixture
def negative_j_scenario() -> Scenario:
    """High solidity with N_R just below the J threshold: the J polynomial is negative."""
    return Scenario(
        medium=FilterMedium(thickness_L=0.1, fiber_diameter_df=1.0, solidity_alpha=0.5),
        fluid=FluidState(viscosity_mu=1.81e-5, temperature_T=293.0, velocity_u=0.1, fluid_density_rho_f=1.2),
        particle=Particle(diameter_dp=0.38, density_rho_p=100.0),
    )

"""Efficiency and penetration of fibrous filter media."""

__version__ = "1.0.0"

from filtration.core.formulas import (  # noqa: E402
    efficiency,
    equivalent_diameter,
    eta_diffusion,
    eta_impaction,
    eta_interception,
    inertial_j,
    interception_ratio,
    kuwabara,
    peclet,
    penetration,
    reynolds,
    slip_correction,
    stokes,
)
from filtration.core.model import evaluate, evaluate_scenario  # noqa: E402
from filtration.core.mpps import find_mpps  # noqa: E402
from filtration.core.sweep import sweep  # noqa: E402
from filtration.schemas.results import FiltrationResult  # noqa: E402
from filtration.schemas.scenario import FilterMedium, FluidState, ModelConstants, Particle, Scenario  # noqa: E402
from filtration.schemas.sweep import SweepSpec  # noqa: E402

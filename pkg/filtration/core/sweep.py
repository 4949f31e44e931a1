import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np
from pydantic import ValidationError

from filtration.core.model import evaluate_scenario
from filtration.schemas.results import FiltrationResult
from filtration.schemas.scenario import Scenario
from filtration.schemas.sweep import PARAMETER_FIELDS, CurvePoint, GridScale, SweepSpec
from filtration.utils.errors import FiltrationError, grid_point_error

logger = logging.getLogger(__name__)


def build_grid(spec: SweepSpec) -> List[float]:
    """Ascending grid of spec.points values with exact endpoints."""
    if spec.scale == GridScale.LOGARITHMIC:
        grid = np.geomspace(spec.start, spec.stop, spec.points)
    else:
        grid = np.linspace(spec.start, spec.stop, spec.points)
    grid[0] = spec.start
    grid[-1] = spec.stop
    return [float(value) for value in grid]


def grid_scenarios(base: Scenario, spec: SweepSpec, grid: List[float]) -> List[Scenario]:
    """Scenario for every grid point; the first invalid one is reported with its index."""
    section, field = PARAMETER_FIELDS[spec.parameter]
    scenarios = []
    for index, value in enumerate(grid):
        try:
            scenarios.append(base.replace(section, field, value))
        except ValidationError as exc:
            raise grid_point_error(index, spec.parameter.value, value, exc) from exc
    return scenarios


def sweep(base: Scenario, spec: SweepSpec, workers: Optional[int] = None) -> List[CurvePoint]:
    """Evaluate the model at every grid point, in ascending parameter order."""
    grid = build_grid(spec)
    scenarios = grid_scenarios(base, spec, grid)

    def evaluate_point(index: int) -> FiltrationResult:
        try:
            return evaluate_scenario(scenarios[index])
        except FiltrationError as exc:
            raise grid_point_error(index, spec.parameter.value, grid[index], exc) from exc

    indices = range(len(grid))
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate_point, indices))
    else:
        results = [evaluate_point(index) for index in indices]

    logger.info(
        "sweep over %s: %d %s points in [%g, %g]",
        spec.parameter.value, spec.points, spec.scale.value, spec.start, spec.stop,
    )
    return [CurvePoint(parameter_value=value, result=result) for value, result in zip(grid, results)]

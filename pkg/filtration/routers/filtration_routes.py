from typing import List

from fastapi import APIRouter, Depends
from pydantic import ValidationError

from filtration.core.reports import run_mpps, run_point, run_sweep
from filtration.schemas.config import MppsReport, ReportRecord, ScenarioConfig
from filtration.schemas.scenario import ModelConstants
from filtration.utils.errors import FiltrationError, http_error
from filtration.utils.settings import Settings, get_settings

router = APIRouter(prefix="/filtration", tags=["filtration"])


@router.post("/point", response_model=ReportRecord)
def point(config: ScenarioConfig) -> ReportRecord:
    """Evaluate one scenario."""
    try:
        return run_point(config)
    except (FiltrationError, ValidationError) as exc:
        raise http_error(exc)


@router.post("/sweep", response_model=List[ReportRecord])
def sweep(config: ScenarioConfig, settings: Settings = Depends(get_settings)) -> List[ReportRecord]:
    """Evaluate a one-parameter sweep, in grid order."""
    try:
        return run_sweep(config, workers=settings.sweep_workers)
    except (FiltrationError, ValidationError) as exc:
        raise http_error(exc)


@router.post("/mpps", response_model=MppsReport)
def mpps(config: ScenarioConfig) -> MppsReport:
    """Most penetrating particle size over the configured bracket."""
    try:
        return run_mpps(config)
    except (FiltrationError, ValidationError) as exc:
        raise http_error(exc)


@router.get("/constants", response_model=ModelConstants)
def constants() -> ModelConstants:
    """Default model constants."""
    return ModelConstants()

import logging
import math
from typing import Callable, List, NamedTuple

import numpy as np

from filtration.core.model import evaluate_scenario
from filtration.schemas.results import FiltrationResult
from filtration.schemas.scenario import Scenario
from filtration.schemas.sweep import Boundary, MppsResult
from filtration.utils.errors import bracket_error, out_of_domain_error

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARED = (3 - math.sqrt(5)) / 2

COARSE_POINTS = 64
MAX_REFINEMENTS = 200
# Relative distance below the J-branch switch that stays on the polynomial branch
SWITCH_OFFSET = 1e-12


class GoldenSection(NamedTuple):
    lo: float
    hi: float
    x: float
    fx: float
    evaluations: int


def golden_section_search(func: Callable[[float], float], a: float, b: float, tol: float) -> GoldenSection:
    """Shrink [a, b] around the maximum of a unimodal func until b - a <= tol.

    Returns the final interval together with the better of its two interior
    probes. The iteration count is fixed up front from tol, so a tol below
    floating-point resolution cannot loop forever.
    """
    (a, b) = (min(a, b), max(a, b))
    h = b - a
    steps = 0
    if h > tol:
        steps = min(int(math.ceil(math.log(tol / h) / math.log(INV_PHI))) + 1, MAX_REFINEMENTS)

    c = a + INV_PHI_SQUARED * h
    d = a + INV_PHI * h
    yc = func(c)
    yd = func(d)
    evaluations = 2

    for _ in range(steps):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARED * h
            yc = func(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = func(d)
        evaluations += 1

    if yc > yd:
        return GoldenSection(a, b, c, yc, evaluations)
    return GoldenSection(a, b, d, yd, evaluations)


def _interior_peaks(values: List[float]) -> List[int]:
    return [
        i for i in range(1, len(values) - 1)
        if values[i] >= values[i - 1] and values[i] >= values[i + 1]
    ]


def _branch_switch_candidates(base: Scenario, dp_lo: float, dp_hi: float) -> List[float]:
    """The J-branch switch d_p = N_R threshold * d_f and a point just below it.

    P jumps there, so its supremum can sit between two coarse grid points.
    """
    switch = base.constants.nr_threshold * base.medium.fiber_diameter_df
    candidates = [switch * (1 - SWITCH_OFFSET), switch]
    return [dp for dp in candidates if dp_lo < dp < dp_hi]


def find_mpps(
    base: Scenario,
    dp_lo: float,
    dp_hi: float,
    tol: float,
    coarse_points: int = COARSE_POINTS,
) -> MppsResult:
    """Most-penetrating particle size of base in [dp_lo, dp_hi] (um).

    A log-spaced coarse scan, plus the J-branch switch, brackets the maximum
    of P(d_p), then golden section refines it. P falls strictly as the
    mechanism sum rises for a fixed medium, so the search maximizes -sum_n,
    which keeps working when P itself under- or overflows.
    """
    if not (math.isfinite(dp_lo) and math.isfinite(dp_hi) and 0 < dp_lo < dp_hi):
        raise bracket_error(dp_lo, dp_hi)
    if not (math.isfinite(tol) and tol > 0):
        raise out_of_domain_error("tol", tol, "must be finite and > 0")

    def result_at(dp: float) -> FiltrationResult:
        return evaluate_scenario(base.replace("particle", "diameter_dp", dp))

    def objective(dp: float) -> float:
        return -result_at(dp).factors.sum_n

    grid = np.geomspace(dp_lo, dp_hi, max(coarse_points, COARSE_POINTS))
    grid[0] = dp_lo
    grid[-1] = dp_hi
    grid = sorted(set(float(dp) for dp in grid) | set(_branch_switch_candidates(base, dp_lo, dp_hi)))
    values = [objective(dp) for dp in grid]
    best = int(np.argmax(values))
    peaks = _interior_peaks(values)
    unimodal = peaks == [best]
    if not unimodal:
        logger.info(
            "coarse scan found %d interior maxima; refining around the global grid maximum at %g um",
            len(peaks), grid[best],
        )

    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, len(grid) - 1)]
    refined = golden_section_search(objective, lo, hi, tol)
    dp_star, bracket = refined.x, (refined.lo, refined.hi)

    boundary = None
    if values[best] >= refined.fx:
        # Coarse point beats every probe: a bracket end or the left side of the J switch
        dp_star = grid[best]
        bracket = (min(refined.lo, dp_star), max(refined.hi, dp_star))
        if best == 0:
            boundary = Boundary.LOWER
        elif best == len(grid) - 1:
            boundary = Boundary.UPPER

    evaluations = len(grid) + refined.evaluations + 1
    p_max = result_at(dp_star).penetration_P
    logger.info("MPPS %g um (P = %g) after %d evaluations", dp_star, p_max, evaluations)
    return MppsResult(
        dp_star=dp_star,
        p_max=p_max,
        bracket=bracket,
        boundary=boundary,
        unimodal=unimodal,
        evaluations=evaluations,
    )

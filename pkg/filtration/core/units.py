"""Unit ledger.

Callers pass mixed engineering units: L in mm, d_p and d_f in
micrometers, d_F in m, u in m/s, mu in kg/(m s), T in K, densities in
kg/m^3. Every conversion below is applied inside the formulas; nothing is
pre-converted by callers. Results are fractions; percent is presentation only.
"""
import math
import sys

MM_TO_UM = 1e3                   # thickness L
UM2_TO_M2 = 1e-12                # product of two micrometer lengths (Peclet)
KG_M3_TO_KG_UM3 = 1e-18          # density in the Stokes number
M_S_TO_UM_S = 1e6                # velocity in the Stokes number
KG_M_S_TO_KG_UM_S = 1e-6         # viscosity in the Stokes number

PERCENT = 100.0


def to_percent(fraction: float) -> float:
    """Fraction in percent, saturating at the largest finite float."""
    value = PERCENT * fraction
    if math.isinf(value):
        return math.copysign(sys.float_info.max, value)
    return value

"""Low-precision solar longitude (Newcomb's truncated series) and the vernal equinox."""
from __future__ import annotations

import math
from typing import Callable, NamedTuple

from .calendar_core import CalendarDate, check_year, date_to_jd

EPOCH_JD = 2415020.0  # 1900 January 0.5
DAYS_PER_CENTURY = 36525.0

EQUINOX_HALF_WINDOW = 5.0  # days either side of 21 March 0h
EQUINOX_TOLERANCE = 1e-6  # days


class BracketError(RuntimeError):
    """The search window does not contain a sign change."""


class SolarAngles(NamedTuple):
    mean_longitude: float
    mean_anomaly: float
    center: float
    true_longitude: float


def centuries_from_jd(jd: float) -> float:
    """Julian centuries elapsed since JD 2415020.0."""
    return (jd - EPOCH_JD) / DAYS_PER_CENTURY


def wrap_degrees(angle: float) -> float:
    """Reduce an angle to the interval (-180, 180]."""
    r = math.fmod(angle, 360.0)
    if r > 180.0:
        r -= 360.0
    elif r <= -180.0:
        r += 360.0
    return r


def solar_angles(t: float) -> SolarAngles:
    """Mean longitude, mean anomaly, equation of center and true longitude.

    `t` is in Julian centuries from 1900.0; all angles are in degrees and
    the longitudes are left unreduced.
    """
    t2 = t * t
    mean_longitude = 279.69668 + 36000.76892 * t + 0.0003025 * t2
    mean_anomaly = 358.47583 + 35999.04975 * t - 0.000150 * t2 - 0.0000033 * t2 * t
    m = math.radians(math.fmod(mean_anomaly, 360.0))
    center = ((1.919460 - 0.004789 * t - 0.000014 * t2) * math.sin(m)
              + (0.020094 - 0.0001 * t) * math.sin(2 * m)
              + 0.000293 * math.sin(3 * m))
    return SolarAngles(mean_longitude, mean_anomaly, center, mean_longitude + center)


def true_longitude(jd: float) -> float:
    """Geometric true longitude of the Sun at `jd`, wrapped to (-180, 180]."""
    return wrap_degrees(solar_angles(centuries_from_jd(jd)).true_longitude)


def bisect(func: Callable[[float], float], lo: float, hi: float,
           tol: float) -> tuple[float, float]:
    """Shrink a sign-changing bracket [lo, hi] of `func` below width `tol`.

    Returns the final bracket. Raises BracketError if func(lo) and
    func(hi) have the same sign.
    """
    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo == 0.0:
        return lo, lo
    if f_hi == 0.0:
        return hi, hi
    if (f_lo < 0.0) == (f_hi < 0.0):
        raise BracketError(f"no sign change in [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = func(mid)
        if f_mid == 0.0:
            return mid, mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return lo, hi


def equinox_bracket(year: int) -> tuple[float, float]:
    """Converged bisection bracket around the March equinox of `year`."""
    check_year(year)
    jd0 = date_to_jd(CalendarDate(year, 3, 21))
    return bisect(true_longitude, jd0 - EQUINOX_HALF_WINDOW,
                  jd0 + EQUINOX_HALF_WINDOW, EQUINOX_TOLERANCE)


def find_vernal_equinox(year: int) -> float:
    """Julian Day (UT) at which the Sun's true longitude crosses 0 degrees."""
    lo, hi = equinox_bracket(year)
    return 0.5 * (lo + hi)

"""Astronomical Easter: Sunday after the 14th day of the first lunation whose
14th day reaches the true vernal equinox.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .calendar_core import (
    CalendarDate,
    check_year,
    date_to_jd,
    day_of_year_to_date,
    euclidean_mod,
    leap_indicator,
)
from .lunar import (
    first_lunation_after_march,
    march_fraction,
    mean_new_moon,
    paschal_new_moon,
)
from .solar import find_vernal_equinox, true_longitude

log = logging.getLogger(__name__)

# |(JJ_NM + 14) - JJ_e| below this many days is reported as a knife-edge year
NEAR_BOUNDARY_DAYS = 0.05
# mean New Moon from the lunation estimate should land in [1 March - 1.5, 1 March + 31]
NEW_MOON_GUARD = (-1.5, 31.0)


class ComputationError(RuntimeError):
    pass


@dataclass(frozen=True)
class PaschalContext:
    """Every intermediate quantity of one year's astronomical Easter."""

    year: int
    nf: int
    jj_0: float
    jj_1j: float
    jj_e: float
    tl_e: float
    f: float
    k: int
    jj_nm_first: float
    jj_nm: float
    shifted: bool
    z_a: int
    c: int
    u: int
    m_ac: int
    z_p: int
    easter: CalendarDate

    @property
    def margin(self) -> float:
        """Days by which the 14th day of the first lunation follows the equinox."""
        return self.jj_nm_first + 14 - self.jj_e

    @property
    def near_boundary(self) -> bool:
        return abs(self.margin) < NEAR_BOUNDARY_DAYS


def paschal_day_of_year(jj_nm: float, year: int) -> int:
    """Day of the year (1 = 1 January) on which the Paschal New Moon falls."""
    jj_1j = date_to_jd(CalendarDate(year, 1, 1))
    z_a = math.floor(jj_nm - jj_1j) + 1
    if not 60 <= z_a <= 366:
        raise ComputationError(
            f"Paschal New Moon on day {z_a} of {year}, expected after 1 March")
    return z_a


def year_digits(year: int) -> tuple[int, int]:
    """Century number and year within the century."""
    return year // 100, euclidean_mod(year, 100)


def catholic_hand(year: int, nf: int) -> int:
    """Gregorian weekday index of the year (analogue of the dominical letter).

    Leap years get one less. The result may be 0; it is only ever used
    modulo 7.
    """
    c, u = year_digits(year)
    m_ac = euclidean_mod(u + u // 4 + c // 4 - 2 * c, 7) + 1
    if nf == 1:
        m_ac -= 1
    return m_ac


def next_sunday_on_or_after_offset(j: int, m_ac: int) -> int:
    """Day number of the first Sunday on or after day `j`."""
    return j + euclidean_mod(2 - j - m_ac, 7)


def paschal_context(year: int) -> PaschalContext:
    check_year(year)
    nf = leap_indicator(year)
    jj_0 = date_to_jd(CalendarDate(year, 3, 21))
    jj_1j = date_to_jd(CalendarDate(year, 1, 1))
    jj_e = find_vernal_equinox(year)

    f = march_fraction(nf)
    k = first_lunation_after_march(year, f)
    jj_nm_first = mean_new_moon(k)
    march_1 = date_to_jd(CalendarDate(year, 3, 1))
    lo, hi = NEW_MOON_GUARD
    if not march_1 + lo <= jj_nm_first <= march_1 + hi:
        log.warning("%d: mean New Moon %.3f days from 1 March, outside [%g, %g]",
                    year, jj_nm_first - march_1, lo, hi)

    jj_nm = paschal_new_moon(jj_nm_first, jj_e)
    z_a = paschal_day_of_year(jj_nm, year)
    c, u = year_digits(year)
    m_ac = catholic_hand(year, nf)
    # the Sunday on or after the 14th day of the Moon
    z_p = next_sunday_on_or_after_offset(z_a + 14, m_ac)
    return PaschalContext(
        year=year, nf=nf, jj_0=jj_0, jj_1j=jj_1j, jj_e=jj_e,
        tl_e=true_longitude(jj_e), f=f, k=k, jj_nm_first=jj_nm_first,
        jj_nm=jj_nm, shifted=jj_nm != jj_nm_first, z_a=z_a, c=c, u=u,
        m_ac=m_ac, z_p=z_p, easter=day_of_year_to_date(z_p, year),
    )


def astronomical_easter(year: int) -> CalendarDate:
    return paschal_context(year).easter

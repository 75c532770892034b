"""Church computus: Gregorian (Catholic) and Julian (Orthodox) Easter."""
from __future__ import annotations

from dataclasses import dataclass

from .astronomical import astronomical_easter
from .calendar_core import (
    MIN_YEAR,
    Calendar,
    CalendarDate,
    check_year,
    date_to_jd,
    jd_to_date,
)


def _check_computus_year(year: int) -> None:
    if year < MIN_YEAR:
        raise ValueError(f"computus undefined before {MIN_YEAR}: {year}")


def catholic_easter(year: int) -> CalendarDate:
    """Gregorian Easter Sunday (anonymous Gregorian / Meeus-Jones-Butcher)."""
    _check_computus_year(year)
    a = year % 19
    b, c = divmod(year, 100)
    d, e = divmod(b, 4)
    f = (b + 8) // 25
    g = (b - f + 1) // 3
    h = (19 * a + b - d - g + 15) % 30
    i, k = divmod(c, 4)
    l = (32 + 2 * e + 2 * i - h - k) % 7
    m = (a + 11 * h + 22 * l) // 451
    month, day = divmod(h + l - 7 * m + 114, 31)
    return CalendarDate(year, month, day + 1)


def julian_easter(year: int) -> CalendarDate:
    """Easter Sunday of the Julian computus, as a Julian-calendar date."""
    a = year % 4
    b = year % 7
    c = year % 19
    d = (19 * c + 15) % 30
    e = (2 * a + 4 * b - d + 34) % 7
    month, day = divmod(d + e + 114, 31)
    return CalendarDate(year, month, day + 1, Calendar.JULIAN)


def orthodox_easter(year: int) -> CalendarDate:
    """Orthodox Easter expressed in the Gregorian calendar."""
    _check_computus_year(year)
    date, _ = jd_to_date(date_to_jd(julian_easter(year)), Calendar.GREGORIAN)
    return date


def days_between(later: CalendarDate, earlier: CalendarDate) -> int:
    return round(date_to_jd(later) - date_to_jd(earlier))


@dataclass(frozen=True)
class EasterResult:
    year: int
    orthodox: CalendarDate
    catholic: CalendarDate
    astronomical: CalendarDate

    @property
    def astro_minus_catholic_days(self) -> int:
        return days_between(self.astronomical, self.catholic)

    @property
    def astro_minus_orthodox_days(self) -> int:
        return days_between(self.astronomical, self.orthodox)


def easter_result(year: int) -> EasterResult:
    check_year(year)
    return EasterResult(year, orthodox_easter(year), catholic_easter(year),
                        astronomical_easter(year))

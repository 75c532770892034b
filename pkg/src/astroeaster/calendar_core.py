"""Calendar arithmetic: leap rule, Julian Day conversion, day-of-year and weekday.

All instants are UT Julian Days; civil midnight falls on half-integers.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

MIN_YEAR = 1583
MAX_YEAR = 3000

MONTH_NAMES = (
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)


class OutOfRangeError(ValueError):
    """Raised when a year or Julian Day lies outside the supported range."""


class Calendar(enum.Enum):
    GREGORIAN = "gregorian"
    JULIAN = "julian"


def euclidean_mod(x: int, y: int) -> int:
    """Remainder of x by y, always in [0, y) even for negative x."""
    if y <= 0:
        raise ValueError(f"modulus must be positive, got {y}")
    return x % y


def is_leap(year: int, system: Calendar = Calendar.GREGORIAN) -> bool:
    if system is Calendar.JULIAN:
        return year % 4 == 0
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def leap_indicator(year: int) -> int:
    """Number of extra February days (0 or 1) in the Gregorian calendar."""
    if euclidean_mod(year, 400) == 0:
        return 1
    if euclidean_mod(year, 100) == 0:
        return 0
    if euclidean_mod(year, 4) == 0:
        return 1
    return 0


_COMMON = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)
_LEAP = (31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


def month_lengths(year: int, system: Calendar = Calendar.GREGORIAN) -> tuple[int, ...]:
    return _LEAP if is_leap(year, system) else _COMMON


def check_year(year: int) -> None:
    if not MIN_YEAR <= year <= MAX_YEAR:
        raise OutOfRangeError(
            f"year out of supported range {MIN_YEAR}–{MAX_YEAR}: {year}")


@dataclass(frozen=True)
class CalendarDate:
    year: int
    month: int
    day: int
    system: Calendar = Calendar.GREGORIAN

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise ValueError(f"invalid month {self.month}")
        ndays = month_lengths(self.year, self.system)[self.month - 1]
        if not 1 <= self.day <= ndays:
            raise ValueError(
                f"invalid day {self.day} for {self.year}-{self.month:02d} "
                f"({self.system.value})")

    def isoformat(self) -> str:
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}"

    def display(self) -> str:
        """Short form such as ``27 March``."""
        return f"{self.day} {MONTH_NAMES[self.month - 1]}"

    @classmethod
    def fromisoformat(cls, text: str,
                      system: Calendar = Calendar.GREGORIAN) -> CalendarDate:
        parts = text.strip().split("-")
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise ValueError(f"not an ISO date: {text!r}")
        y, m, d = (int(p) for p in parts)
        return cls(y, m, d, system)

    def __str__(self) -> str:
        return self.isoformat()


def date_to_jd(date: CalendarDate, fraction_of_day: float = 0.0) -> float:
    """Julian Day of `date` at the given UT fraction of the day."""
    if not 0.0 <= fraction_of_day < 1.0:
        raise ValueError(f"fraction_of_day must be in [0, 1), got {fraction_of_day}")
    y, m = date.year, date.month
    if m <= 2:
        y -= 1
        m += 12
    if date.system is Calendar.GREGORIAN:
        a = y // 100
        b = 2 - a + a // 4
    else:
        b = 0
    # 365.25 * n and 30.6001 * n are floored exactly as in the classic formula
    days = (1461 * (y + 4716)) // 4 + math.floor(30.6001 * (m + 1)) + date.day + b
    return days - 1524.5 + fraction_of_day


JD_MIN = date_to_jd(CalendarDate(1500, 1, 1, Calendar.JULIAN))
JD_MAX = date_to_jd(CalendarDate(3101, 1, 1))


def jd_to_date(jd: float, system: Calendar = Calendar.GREGORIAN
               ) -> tuple[CalendarDate, float]:
    """Inverse of :func:`date_to_jd`: the civil date and UT fraction of day."""
    if not math.isfinite(jd) or not JD_MIN <= jd < JD_MAX:
        raise OutOfRangeError(f"Julian Day {jd} outside supported range")
    z = math.floor(jd + 0.5)
    frac = jd + 0.5 - z
    if system is Calendar.GREGORIAN:
        alpha = math.floor((z - 1867216.25) / 36524.25)
        a = z + 1 + alpha - alpha // 4
    else:
        a = z
    b = a + 1524
    c = math.floor((b - 122.1) / 365.25)
    d = (1461 * c) // 4
    e = math.floor((b - d) / 30.6001)
    day = b - d - math.floor(30.6001 * e)
    month = e - 1 if e < 14 else e - 13
    year = c - 4716 if month > 2 else c - 4715
    return CalendarDate(year, month, day, system), frac


def day_of_year_to_date(z: int, year: int) -> CalendarDate:
    """Gregorian date of day number `z` (1 = 1 January) in `year`.

    For March and April this is the familiar pair of rules: days past
    90 + nf are (z - 90 - nf) April, otherwise (z - 59 - nf) March.
    """
    nf = leap_indicator(year)
    if not 1 <= z <= 365 + nf:
        raise ValueError(f"day of year {z} out of range for {year}")
    day = z
    for month, ndays in enumerate(month_lengths(year), start=1):
        if day <= ndays:
            return CalendarDate(year, month, day)
        day -= ndays
    raise AssertionError("unreachable")


def day_of_year(date: CalendarDate) -> int:
    return sum(month_lengths(date.year, date.system)[:date.month - 1]) + date.day


def day_of_week(jd: float) -> int:
    """Weekday of the civil day containing `jd`; 0 is Sunday."""
    return euclidean_mod(math.floor(jd + 1.5), 7)

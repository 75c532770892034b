"""Easter dates from the true vernal equinox and the mean New Moon, alongside
the classical Catholic and Orthodox computus."""

from .astronomical import PaschalContext, astronomical_easter, paschal_context
from .calendar_core import (
    Calendar,
    CalendarDate,
    OutOfRangeError,
    date_to_jd,
    day_of_week,
    jd_to_date,
)
from .classical import EasterResult, catholic_easter, easter_result, orthodox_easter
from .solar import find_vernal_equinox

__all__ = [
    "Calendar",
    "CalendarDate",
    "EasterResult",
    "OutOfRangeError",
    "PaschalContext",
    "astronomical_easter",
    "catholic_easter",
    "date_to_jd",
    "day_of_week",
    "easter_result",
    "find_vernal_equinox",
    "jd_to_date",
    "orthodox_easter",
    "paschal_context",
]

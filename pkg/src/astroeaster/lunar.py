"""Mean New Moon following 1 March and the choice of the Paschal lunation."""
from __future__ import annotations

import math

SYNODIC_MONTH = 29.53058868
NEW_MOON_EPOCH = 2415020.75933
LUNATIONS_PER_YEAR = 12.3685


def march_fraction(nf: int) -> float:
    """Fraction of the year elapsed at 1 March, given the leap indicator."""
    if nf not in (0, 1):
        raise ValueError(f"leap indicator must be 0 or 1, got {nf}")
    return (59 + nf) / (365 + nf)


def first_lunation_after_march(year: int, f: float) -> int:
    """Lunation number of the first mean New Moon after 1 March.

    The integer part is taken with floor, so years before 1900 give
    negative indices consistently.
    """
    return math.floor((year + f - 1900.0) * LUNATIONS_PER_YEAR) + 1


def mean_new_moon(k: int) -> float:
    """Julian Day of mean New Moon number `k` (k = 0 near 1900 January 0)."""
    return NEW_MOON_EPOCH + SYNODIC_MONTH * k


def paschal_new_moon(jj_nm: float, jj_e: float) -> float:
    """New Moon of the Paschal lunation.

    Keeps `jj_nm` when its 14th day is at or after the equinox instant,
    otherwise moves one synodic month later.
    """
    if jj_nm + 14 >= jj_e:
        return jj_nm
    return jj_nm + SYNODIC_MONTH

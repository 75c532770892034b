import datetime
import math

import pytest
from hypothesis import given, strategies as st

from astroeaster.calendar_core import (
    Calendar,
    CalendarDate,
    OutOfRangeError,
    date_to_jd,
    day_of_week,
    day_of_year,
    day_of_year_to_date,
    euclidean_mod,
    jd_to_date,
    leap_indicator,
    month_lengths,
)

# JD of 0001-01-01 (proleptic Gregorian) at 0h is ordinal 1 + 1721424.5
ORDINAL_TO_JD = 1721424.5


def gregorian_jd_oracle(y, m, d):
    return datetime.date(y, m, d).toordinal() + ORDINAL_TO_JD


def julian_days(start_year, end_year):
    """Enumerate Julian-calendar days with their JD, counting from the reform.

    1582-10-04 (Julian) is the day before 1582-10-15 (Gregorian), JD 2299159.5.
    """
    jd = 2299159.5
    y, m, d = 1582, 10, 4
    while y <= end_year:
        if y >= start_year:
            yield (y, m, d), jd
        jd += 1
        d += 1
        if d > month_lengths(y, Calendar.JULIAN)[m - 1]:
            d, m = 1, m + 1
            if m > 12:
                m, y = 1, y + 1


class TestEuclideanMod:
    @pytest.mark.parametrize("x, y, expected", [
        (83, 7, 6),
        (0, 7, 0),
        (-76, 7, 1),
        (-35, 7, 0),
    ])
    def test_examples(self, x, y, expected):
        assert euclidean_mod(x, y) == expected

    @pytest.mark.parametrize("y", [0, -7])
    def test_nonpositive_modulus(self, y):
        with pytest.raises(ValueError):
            euclidean_mod(5, y)

    @given(st.integers(-10**6, 10**6), st.integers(1, 1000))
    def test_law(self, x, y):
        r = euclidean_mod(x, y)
        assert 0 <= r < y
        assert (x - r) % y == 0


class TestLeapIndicator:
    @pytest.mark.parametrize("year, nf", [(1994, 0), (2000, 1), (1900, 0), (2024, 1)])
    def test_examples(self, year, nf):
        assert leap_indicator(year) == nf

    def test_matches_calendar_module(self):
        import calendar
        for year in range(1583, 3001):
            assert leap_indicator(year) == int(calendar.isleap(year))


class TestDateToJd:
    @pytest.mark.parametrize("date, frac, expected", [
        (CalendarDate(1994, 3, 21), 0.0, 2449432.5),
        (CalendarDate(1994, 1, 1), 0.0, 2449353.5),
        (CalendarDate(2000, 1, 1), 0.5, 2451545.0),
        (CalendarDate(1582, 10, 15), 0.0, 2299160.5),
        (CalendarDate(1582, 10, 4, Calendar.JULIAN), 0.0, 2299159.5),
        (CalendarDate(2011, 3, 21), 0.75, 2455642.25),
    ])
    def test_published_values(self, date, frac, expected):
        assert date_to_jd(date, frac) == expected

    def test_gregorian_against_ordinal(self):
        d = datetime.date(1583, 1, 1)
        end = datetime.date(3000, 12, 31)
        one = datetime.timedelta(days=1)
        while d <= end:
            assert date_to_jd(CalendarDate(d.year, d.month, d.day)) == \
                gregorian_jd_oracle(d.year, d.month, d.day)
            d += one

    def test_julian_against_enumeration(self):
        for (y, m, d), jd in julian_days(1583, 3000):
            assert date_to_jd(CalendarDate(y, m, d, Calendar.JULIAN)) == jd

    def test_midnight_is_half_integer(self):
        jd = date_to_jd(CalendarDate(2050, 7, 9))
        assert jd - math.floor(jd) == 0.5

    @pytest.mark.parametrize("frac", [-0.1, 1.0])
    def test_bad_fraction(self, frac):
        with pytest.raises(ValueError):
            date_to_jd(CalendarDate(2000, 1, 1), frac)

    @pytest.mark.parametrize("y, m, d, system", [
        (1900, 2, 29, Calendar.GREGORIAN),
        (2001, 4, 31, Calendar.GREGORIAN),
        (2000, 13, 1, Calendar.GREGORIAN),
        (1901, 2, 29, Calendar.JULIAN),
    ])
    def test_invalid_date(self, y, m, d, system):
        with pytest.raises(ValueError):
            CalendarDate(y, m, d, system)

    def test_julian_leap_day_allowed(self):
        CalendarDate(1900, 2, 29, Calendar.JULIAN)


class TestJdToDate:
    def test_anchor(self):
        assert jd_to_date(2449432.5) == (CalendarDate(1994, 3, 21), 0.0)

    def test_new_moon_1994(self):
        date, frac = jd_to_date(2449423.895)
        assert date == CalendarDate(1994, 3, 12)
        assert frac == pytest.approx(0.395, abs=1e-9)
        assert 9.0 <= 24 * frac < 10.0

    def test_julian_system(self):
        assert jd_to_date(2299159.5, Calendar.JULIAN)[0] == \
            CalendarDate(1582, 10, 4, Calendar.JULIAN)

    @pytest.mark.parametrize("jd", [1000000.0, 3e7, float("nan"), float("inf")])
    def test_out_of_range(self, jd):
        with pytest.raises(OutOfRangeError):
            jd_to_date(jd)

    def test_round_trip_every_day(self):
        d = datetime.date(1583, 1, 1)
        end = datetime.date(3000, 12, 31)
        one = datetime.timedelta(days=1)
        while d <= end:
            date = CalendarDate(d.year, d.month, d.day)
            for frac in (0.0, 0.25, 0.5):
                back, f = jd_to_date(date_to_jd(date, frac))
                assert back == date
                assert abs(f - frac) <= 1e-9
            d += one

    def test_round_trip_julian(self):
        for (y, m, d), jd in julian_days(1583, 3000):
            assert jd_to_date(jd, Calendar.JULIAN)[0] == \
                CalendarDate(y, m, d, Calendar.JULIAN)

    @given(st.floats(2299160.5, 2816787.0))
    def test_round_trip_from_jd(self, jd):
        date, frac = jd_to_date(jd)
        assert date_to_jd(date, frac) == pytest.approx(jd, abs=1e-8)


class TestDayOfYear:
    @pytest.mark.parametrize("z, year, expected", [
        (86, 1994, CalendarDate(1994, 3, 27)),
        (91, 1994, CalendarDate(1994, 4, 1)),
        (90, 1994, CalendarDate(1994, 3, 31)),
        (91, 2000, CalendarDate(2000, 3, 31)),
        (92, 2000, CalendarDate(2000, 4, 1)),
        (1, 2000, CalendarDate(2000, 1, 1)),
        (366, 2000, CalendarDate(2000, 12, 31)),
    ])
    def test_examples(self, z, year, expected):
        assert day_of_year_to_date(z, year) == expected

    @pytest.mark.parametrize("z, year", [(0, 1994), (366, 1994), (367, 2000)])
    def test_out_of_range(self, z, year):
        with pytest.raises(ValueError):
            day_of_year_to_date(z, year)

    @pytest.mark.parametrize("year", [1994, 2000, 1900, 2024])
    def test_march_april_rule(self, year):
        nf = leap_indicator(year)
        for z in range(60 + nf, 121 + nf):
            date = day_of_year_to_date(z, year)
            if z > 90 + nf:
                assert (date.month, date.day) == (4, z - 90 - nf)
            else:
                assert (date.month, date.day) == (3, z - 59 - nf)

    @given(st.dates(datetime.date(1583, 1, 1), datetime.date(3000, 12, 31)))
    def test_inverse(self, d):
        date = CalendarDate(d.year, d.month, d.day)
        assert day_of_year(date) == d.timetuple().tm_yday
        assert day_of_year_to_date(day_of_year(date), d.year) == date


class TestDayOfWeek:
    def test_examples(self):
        assert day_of_week(2449438.5) == 0
        assert day_of_week(2449439.5) == 1
        assert day_of_week(date_to_jd(CalendarDate(2000, 4, 23))) == 0

    def test_fraction_of_day_ignored(self):
        jd = date_to_jd(CalendarDate(1994, 3, 27))
        assert day_of_week(jd + 0.99) == 0

    @given(st.dates(datetime.date(1583, 1, 1), datetime.date(3000, 12, 31)))
    def test_against_datetime(self, d):
        jd = date_to_jd(CalendarDate(d.year, d.month, d.day))
        assert day_of_week(jd) == d.isoweekday() % 7

    @given(st.dates(datetime.date(1583, 1, 1), datetime.date(3000, 12, 30)))
    def test_advances_by_one(self, d):
        jd = date_to_jd(CalendarDate(d.year, d.month, d.day))
        assert day_of_week(jd + 1) == (day_of_week(jd) + 1) % 7

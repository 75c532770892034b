"""Range tables, discrepancy statistics, the golden fixture and year traces."""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from importlib import resources
from pathlib import Path

from .astronomical import PaschalContext, paschal_context
from .calendar_core import CalendarDate, check_year, jd_to_date
from .classical import EasterResult, catholic_easter, orthodox_easter

CSV_HEADER = ("year", "orthodox", "catholic", "astronomical")
METHODS = CSV_HEADER[1:]


class FixtureError(Exception):
    """The golden fixture is missing or malformed."""


def default_fixture() -> Path:
    return Path(str(resources.files("astroeaster") / "data" / "table_1950_2050.csv"))


def year_range(from_year: int, to_year: int) -> range:
    check_year(from_year)
    check_year(to_year)
    if from_year > to_year:
        raise ValueError(f"empty range: {from_year} > {to_year}")
    return range(from_year, to_year + 1)


def compute_rows(from_year: int, to_year: int) -> list[EasterResult]:
    return [EasterResult(y, orthodox_easter(y), catholic_easter(y),
                         paschal_context(y).easter)
            for y in year_range(from_year, to_year)]


def format_table(rows: list[EasterResult]) -> str:
    lines = [f"{'YEAR':<6}{'ORTHODOX':<12}{'CATHOLIC':<12}ASTRONOMIC"]
    for r in rows:
        lines.append(f"{r.year:<6}{r.orthodox.display():<12}"
                     f"{r.catholic.display():<12}{r.astronomical.display()}")
    return "\n".join(lines) + "\n"


def format_csv(rows: list[EasterResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([r.year, r.orthodox.isoformat(), r.catholic.isoformat(),
                         r.astronomical.isoformat()])
    return buf.getvalue()


def percent(count: int, total: int) -> Decimal:
    """Percentage rounded half-up to one decimal."""
    return (Decimal(100 * count) / Decimal(total)).quantize(
        Decimal("0.1"), rounding=ROUND_HALF_UP)


@dataclass
class ComparisonStats:
    total_years: int
    histogram: dict[int, int] = field(default_factory=dict)

    @property
    def differing_years(self) -> int:
        return self.total_years - self.histogram.get(0, 0)

    @property
    def percentages(self) -> dict[int, Decimal]:
        return {k: percent(v, self.total_years) for k, v in self.histogram.items()}

    def render(self) -> str:
        lines = [
            f"years: {self.total_years}",
            f"differing (astronomical - catholic != 0): {self.differing_years} "
            f"({percent(self.differing_years, self.total_years)}%)",
            "astronomical - catholic (days): count (percent)",
        ]
        pct = self.percentages
        for key in sorted(self.histogram):
            label = f"{key:+d}" if key else "0"
            lines.append(f"  {label}: {self.histogram[key]} ({pct[key]}%)")
        return "\n".join(lines) + "\n"


def compute_stats(rows: list[EasterResult]) -> ComparisonStats:
    hist = Counter(r.astro_minus_catholic_days for r in rows)
    return ComparisonStats(len(rows), dict(sorted(hist.items())))


@dataclass(frozen=True)
class GoldenRow:
    year: int
    orthodox: CalendarDate
    catholic: CalendarDate
    astronomical: CalendarDate


def load_golden(path: Path | str) -> list[GoldenRow]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FixtureError(f"cannot read fixture {path}: {exc}") from exc
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None:
        raise FixtureError(f"fixture {path} is empty")
    if tuple(h.strip() for h in header) != CSV_HEADER:
        raise FixtureError(f"fixture {path}: bad header {header}")
    rows: list[GoldenRow] = []
    for lineno, rec in enumerate(reader, start=2):
        if not rec:
            continue
        if len(rec) != 4:
            raise FixtureError(f"{path}:{lineno}: expected 4 fields, got {len(rec)}")
        try:
            year = int(rec[0])
            dates = [CalendarDate.fromisoformat(cell) for cell in rec[1:]]
        except ValueError as exc:
            raise FixtureError(f"{path}:{lineno}: {exc}") from exc
        if rows and year <= rows[-1].year:
            raise FixtureError(f"{path}:{lineno}: years must be strictly ascending")
        rows.append(GoldenRow(year, *dates))
    if not rows:
        raise FixtureError(f"fixture {path} has no data rows")
    return rows


@dataclass(frozen=True)
class Mismatch:
    year: int
    method: str
    expected: CalendarDate
    computed: CalendarDate


def verify_rows(golden: list[GoldenRow]) -> tuple[int, list[Mismatch]]:
    """Recompute every fixture cell; return (cells checked, mismatches)."""
    mismatches = []
    for row in golden:
        result = EasterResult(row.year, orthodox_easter(row.year),
                              catholic_easter(row.year),
                              paschal_context(row.year).easter)
        for method in METHODS:
            expected, computed = getattr(row, method), getattr(result, method)
            if expected != computed:
                mismatches.append(Mismatch(row.year, method, expected, computed))
    return len(golden) * len(METHODS), mismatches


def _clock(jd: float) -> str:
    date, frac = jd_to_date(jd)
    return f"{date.display()} {24 * frac:.1f}h UT"


def format_trace(ctx: PaschalContext) -> str:
    lines = [
        f"JJ_0={ctx.jj_0:.1f}  ({_clock(ctx.jj_0)})",
        f"JJ_1J={ctx.jj_1j:.1f}  ({_clock(ctx.jj_1j)})",
        f"JJ_e={ctx.jj_e:.5f}  ({_clock(ctx.jj_e)}, TL={ctx.tl_e:+.6f} deg)",
        f"nf={ctx.nf}",
        f"f={ctx.f:.7f}",
        f"k={ctx.k}",
        f"JJ_NM={ctx.jj_nm_first:.5f}  ({_clock(ctx.jj_nm_first)})",
        f"JJ_NM+14-JJ_e={ctx.margin:+.3f} d",
    ]
    if ctx.shifted:
        lines.append(f"14th day precedes the equinox: next lunation "
                     f"JJ_NM={ctx.jj_nm:.5f}  ({_clock(ctx.jj_nm)})")
    else:
        lines.append("14th day reaches the equinox: Paschal lunation")
    if ctx.near_boundary:
        lines.append(f"WARNING: |JJ_NM+14-JJ_e| < 0.05 d; lunation choice is "
                     f"sensitive to the equinox instant")
    lines += [
        f"z_a={ctx.z_a}",
        f"c={ctx.c} u={ctx.u}",
        f"m_ac={ctx.m_ac}",
        f"z_p={ctx.z_p}",
        f"astronomical Easter: {ctx.easter.display()} {ctx.year}",
    ]
    return "\n".join(lines) + "\n"


def format_year(year: int, trace: bool = False) -> str:
    ctx = paschal_context(year)
    out = ""
    if trace:
        out += format_trace(ctx) + "\n"
    out += (f"{year}\n"
            f"  orthodox      {orthodox_easter(year).display()}\n"
            f"  catholic      {catholic_easter(year).display()}\n"
            f"  astronomical  {ctx.easter.display()}\n")
    return out

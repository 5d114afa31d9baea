"""The seven families of same-weekday anchor-date systems.

Shift every classic anchor date by the same number of days k (mod 7)
and the method still works: the anchor dates of a year still share one
weekday, only the code table rotates and the century anchors move with
the shift. Class k = 0 is the classic doomsday set; Wang's null-days
set is class k = 5.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import conway
from .conway import DOOMSDAY_DATES, doomsday_date
from .core import COMMON_MONTH_LENGTHS, Date, Weekday, is_leap
from .doomyears import year_offset_doomyear
from .vector import VectorCode, square_knot_forward


def _code_for_residue(residue: int) -> VectorCode:
    if residue == 0:
        return VectorCode(0, 0)
    return VectorCode(7 - residue, residue)


@dataclass(frozen=True)
class AnchorSystem:
    """One equivalence class of anchor-date systems, in canonical residue form."""

    k: int
    residues: tuple[int, ...]
    codes: tuple[VectorCode, ...]

    def shift_century(self, anchor: int) -> int:
        """Century anchor adjusted for this system.

        The system's anchor dates sit k days after the classic ones, so
        their shared weekday, and with it every century anchor, moves k
        days forward.
        """
        return (anchor + self.k) % 7

    def century_anchor(self, year: int) -> int:
        """Shifted century anchor for ``year``."""
        return self.shift_century(conway.century_anchor(year))

    def code(self, month: int, leap: bool = False) -> VectorCode:
        """Month code from this class's leap-aware residue."""
        return _code_for_residue((doomsday_date(month, leap) + self.k) % 7)

    def weekday(self, date: Date) -> Weekday:
        """End-to-end weekday using this system's tables only."""
        offset = square_knot_forward(date.day, self.code(date.month, is_leap(date.year)))
        total = self.century_anchor(date.year) + year_offset_doomyear(date.year % 100) + offset
        return Weekday(total % 7)


def system(k: int) -> AnchorSystem:
    """Canonical representative of equivalence class ``k``."""
    if not 0 <= k <= 6:
        raise ValueError(f"system index {k} outside 0..6")
    residues = tuple((d + k) % 7 for d in DOOMSDAY_DATES)
    return AnchorSystem(
        k=k,
        residues=residues,
        codes=tuple(_code_for_residue(r) for r in residues),
    )


#: The rotation cycle in residue order: _ROTATION[r] is the code for residue r.
_ROTATION = tuple(_code_for_residue(r) for r in range(7))


def rotate_code(code: VectorCode) -> VectorCode:
    """Next code when every anchor date slips one further day."""
    try:
        index = _ROTATION.index(code)
    except ValueError:
        raise ValueError(f"{code} is not a vocabulary code") from None
    return _ROTATION[(index + 1) % 7]


class NotUniformError(Exception):
    """The 12 dates do not shift the classic anchors by one uniform amount."""

    def __init__(self, offsets: dict[int, int]):
        self.offsets = dict(offsets)
        counts = Counter(self.offsets.values())
        self.majority = max(counts.items(), key=lambda item: (item[1], -item[0]))[0]
        self.offending = tuple(
            sorted(month for month, off in self.offsets.items() if off != self.majority)
        )
        months = ", ".join(str(month) for month in self.offending)
        super().__init__(
            f"months {months} disagree with the majority day shift {self.majority}"
        )


def classify(dates: Sequence[tuple[int, int]]) -> int:
    """Equivalence class of a 12-date same-weekday system.

    ``dates`` holds one (month, day) pair per month, in any order, with
    each day valid for its month in a common year.
    """
    if len(dates) != 12:
        raise ValueError(f"need 12 (month, day) pairs, got {len(dates)}")
    offsets: dict[int, int] = {}
    for month, day in dates:
        if not 1 <= month <= 12:
            raise ValueError(f"month {month} outside 1..12")
        if month in offsets:
            raise ValueError(f"month {month} given twice")
        limit = COMMON_MONTH_LENGTHS[month - 1]
        if not 1 <= day <= limit:
            raise ValueError(f"day {day} outside 1..{limit} for month {month}")
        offsets[month] = (day - DOOMSDAY_DATES[month - 1]) % 7
    distinct = set(offsets.values())
    if len(distinct) != 1:
        raise NotUniformError(offsets)
    return distinct.pop()


def zero_month_count(k: int) -> int:
    """How many months of system ``k`` carry the silent 00 code."""
    return sum(1 for residue in system(k).residues if residue == 0)


@dataclass(frozen=True)
class MonthGrouping:
    """Months bucketed by the classic anchor-date residue d mod 7."""

    groups: dict[int, frozenset[int]]

    @property
    def sizes(self) -> tuple[int, ...]:
        """Group sizes for residues 0..6."""
        return tuple(len(self.groups.get(r, frozenset())) for r in range(7))


def month_groupings() -> MonthGrouping:
    """Partition of the 12 months by their classic anchor-date residue."""
    buckets: dict[int, set[int]] = {}
    for month, anchor_day in enumerate(DOOMSDAY_DATES, start=1):
        buckets.setdefault(anchor_day % 7, set()).add(month)
    return MonthGrouping({r: frozenset(months) for r, months in sorted(buckets.items())})

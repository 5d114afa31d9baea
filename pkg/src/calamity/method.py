"""The full lookup pipeline: century anchor + year digit + month offset.

Every contribution is a single digit. The canonical form always adds
the forward month offset. The traced form can run the month step in
either direction, recording a backward offset as a subtraction, and
keeps every component it used so the computation can be checked by eye.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .conway import century_anchor
from .core import Date, Direction, Weekday, is_leap
from .doomyears import doomyear, nearest_anchor, year_offset_doomyear
from .vector import VectorCode, gaps, square_knot_forward, vector_code

#: Sentinel for "pick the month direction with the smaller gap".
AUTO = "auto"


class YearStep(NamedTuple):
    """Recorded year navigation: which anchor, how far, which digit."""

    anchor: int
    distance: int
    direction: Direction
    digit: int


class MonthStep(NamedTuple):
    """Recorded month step: gap direction, gap size, selected code digit."""

    direction: Direction
    gap: int
    digit: int


@dataclass(frozen=True, slots=True)
class StepTrace:
    """Every component of one weekday computation."""

    century_anchor: int
    year_navigation: YearStep
    month_code: VectorCode
    target_gap: MonthStep
    final: Weekday

    @property
    def month_offset(self) -> int:
        """Signed month contribution: positive forward, negative backward."""
        reduced = (self.target_gap.gap + self.target_gap.digit) % 7
        if self.target_gap.direction is Direction.FORWARD:
            return reduced
        return -reduced

    def recompute(self) -> Weekday:
        """Re-add the recorded components; must reproduce ``final``."""
        total = self.century_anchor + self.year_navigation.digit + self.month_offset
        return Weekday(total % 7)


def weekday_calamity(date: Date) -> Weekday:
    """Weekday as century anchor + year digit + forward month offset, mod 7."""
    code = vector_code(date.month, is_leap(date.year))
    total = (
        century_anchor(date.year)
        + year_offset_doomyear(date.year % 100)
        + square_knot_forward(date.day, code)
    )
    return Weekday(total % 7)


def weekday_calamity_traced(
    date: Date, month_direction: Union[Direction, str] = AUTO
) -> tuple[Weekday, StepTrace]:
    """Compute the weekday and a full step trace.

    ``month_direction`` is forward, backward, or ``"auto"``. Auto takes
    whichever gap of the target day is smaller and falls back to
    forward when the day sits on an anchor. The resulting weekday never
    depends on the choice.
    """
    anchor = century_anchor(date.year)
    nav = nearest_anchor(date.year % 100)
    row = doomyear(nav.distance)
    if nav.direction is Direction.FORWARD:
        year_digit = row.forward_digit
    else:
        year_digit = row.backward_digit

    code = vector_code(date.month, is_leap(date.year))
    pair = gaps(date.day)
    if month_direction == AUTO:
        chosen = Direction.FORWARD if pair.forward <= pair.backward else Direction.BACKWARD
    else:
        chosen = Direction(month_direction)

    if chosen is Direction.FORWARD:
        step = MonthStep(Direction.FORWARD, pair.forward, code.tens)
        total = anchor + year_digit + (pair.forward + code.tens)
    else:
        step = MonthStep(Direction.BACKWARD, pair.backward, code.units)
        total = anchor + year_digit - (pair.backward + code.units)

    final = Weekday(total % 7)
    trace = StepTrace(
        century_anchor=anchor,
        year_navigation=YearStep(nav.anchor, nav.distance, nav.direction, year_digit),
        month_code=code,
        target_gap=step,
        final=final,
    )
    return final, trace

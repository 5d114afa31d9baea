"""Mental-operation accounting for the two weekday methods.

Re-runs each computation as a list of classified events so the two
variable steps (year and month) can be compared for operation count,
value size, and dependency shape. Century-anchor recall is constant per
century and is counted for neither method.

An event's result counts as an intermediate value only when it feeds
the weekday arithmetic. The year-navigation subtraction produces a
table position, the year restated relative to its anchor, not a weekday
quantity; it is recorded faithfully but excluded from intermediate
maxima.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .conway import century_anchor, doomsday_date
from .core import Date, Direction, is_leap, iter_dates
from .doomyears import doomyear, nearest_anchor
from .vector import gaps, vector_code


class OpKind(str, enum.Enum):
    """Classification of one mental operation."""

    INT_DIVISION = "int_division"
    MULTIDIGIT_ADD = "multidigit_add"
    MOD_REDUCE_LARGE = "mod_reduce_large"
    SMALL_SUBTRACT = "small_subtract"
    TABLE_RECALL = "table_recall"
    GAP_MEASURE = "gap_measure"
    DIGIT_SELECT_ADD = "digit_select_add"
    SIGN_CORRECT = "sign_correct"

    def __str__(self) -> str:
        return self.value


_DIVISION_KINDS = frozenset({OpKind.INT_DIVISION})
# Sign correction reduces a sum that can be large or negative, so it
# counts as a mod reduction on a large value.
_LARGE_MOD_KINDS = frozenset({OpKind.MOD_REDUCE_LARGE, OpKind.SIGN_CORRECT})


@dataclass(frozen=True, slots=True)
class OpEvent:
    """One recorded mental operation.

    ``depends_on`` lists indices of earlier events whose results this
    one consumes. ``intermediate`` marks whether the result magnitude
    participates in intermediate-value maxima.
    """

    kind: OpKind
    operands: tuple[int, ...]
    result_magnitude: int
    depends_on: tuple[int, ...] = ()
    intermediate: bool = True


def trace_standard(date: Date) -> list[OpEvent]:
    """The five serial events of the arithmetic method.

    Events are recorded in performance order, each consuming the running
    context of the one before it, which is what makes the chain serial.
    """
    yy = date.year % 100
    quotient = yy // 4
    added = yy + quotient
    omega = added % 7
    anchor_day = doomsday_date(date.month, is_leap(date.year))
    delta = date.day - anchor_day
    corrected = (century_anchor(date.year) + omega + delta) % 7
    return [
        OpEvent(OpKind.INT_DIVISION, (yy, 4), quotient),
        OpEvent(OpKind.MULTIDIGIT_ADD, (yy, quotient), added, depends_on=(0,)),
        OpEvent(OpKind.MOD_REDUCE_LARGE, (added, 7), omega, depends_on=(1,)),
        OpEvent(OpKind.SMALL_SUBTRACT, (date.day, anchor_day), abs(delta), depends_on=(2,)),
        OpEvent(
            OpKind.SIGN_CORRECT,
            (century_anchor(date.year), omega, delta),
            corrected,
            depends_on=(3,),
        ),
    ]


def trace_calamity(date: Date) -> list[OpEvent]:
    """The four events of the table method, two per step.

    The year pair (events 0 and 1) and the month pair (events 2 and 3)
    share no data dependency. Event 0 relocates the year against its
    anchor; its result is a table position and is therefore not an
    intermediate value.
    """
    yy = date.year % 100
    nav = nearest_anchor(yy)
    row = doomyear(nav.distance)
    if nav.direction is Direction.FORWARD:
        nav_operands = (yy, nav.anchor)
        year_digit = row.forward_digit
    else:
        nav_operands = (nav.anchor, yy)
        year_digit = row.backward_digit

    code = vector_code(date.month, is_leap(date.year))
    pair = gaps(date.day)
    lower_anchor = date.day - pair.forward
    month_offset = (pair.forward + code.tens) % 7
    return [
        OpEvent(OpKind.SMALL_SUBTRACT, nav_operands, nav.distance, intermediate=False),
        OpEvent(OpKind.TABLE_RECALL, (nav.distance,), year_digit, depends_on=(0,)),
        OpEvent(OpKind.GAP_MEASURE, (date.day, lower_anchor), pair.forward),
        OpEvent(OpKind.DIGIT_SELECT_ADD, (pair.forward, code.tens), month_offset, depends_on=(2,)),
    ]


def serial_depth(events: Sequence[OpEvent]) -> int:
    """Length of the longest dependency chain."""
    depths: list[int] = []
    for event in events:
        longest = max((depths[i] for i in event.depends_on), default=0)
        depths.append(longest + 1)
    return max(depths, default=0)


def max_intermediate(events: Iterable[OpEvent]) -> int:
    """Largest intermediate result magnitude; table positions excluded."""
    return max((e.result_magnitude for e in events if e.intermediate), default=0)


@dataclass(frozen=True)
class MethodProfile:
    """Per-date operation profile of one method, with sweep-wide maxima."""

    counts: Mapping[OpKind, int]
    total: int
    serial_depth: int
    max_intermediate: int
    divisions: int
    large_mod_reductions: int

    @property
    def dependency(self) -> str:
        """``serial`` when every event chains; ``independent`` otherwise."""
        return "serial" if self.serial_depth == self.total else "independent"


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side operation profiles over an inclusive year range."""

    start_year: int
    end_year: int
    dates_scanned: int
    standard: MethodProfile
    calamity: MethodProfile


def _profile(signature: tuple[OpKind, ...], depth: int, peak: int) -> MethodProfile:
    counted = Counter(signature)
    counts = {kind: counted.get(kind, 0) for kind in OpKind}
    return MethodProfile(
        counts=counts,
        total=len(signature),
        serial_depth=depth,
        max_intermediate=peak,
        divisions=sum(counted.get(kind, 0) for kind in _DIVISION_KINDS),
        large_mod_reductions=sum(counted.get(kind, 0) for kind in _LARGE_MOD_KINDS),
    )


def compare(start_year: int, end_year: int) -> ComparisonReport:
    """Aggregate both traces over every date in the year range.

    Per-date operation signatures are required to be identical across
    the sweep; only the intermediate maxima vary by date. Aggregation is
    a max, so any partitioning of the range gives the same report.
    """
    if start_year > end_year:
        raise ValueError(f"empty year range {start_year}..{end_year}")

    std_signature: tuple[OpKind, ...] | None = None
    cal_signature: tuple[OpKind, ...] | None = None
    std_depth = cal_depth = 0
    std_peak = cal_peak = 0
    scanned = 0
    for date in iter_dates(start_year, end_year):
        std = trace_standard(date)
        cal = trace_calamity(date)
        scanned += 1
        signature = tuple(e.kind for e in std)
        cal_sig = tuple(e.kind for e in cal)
        if std_signature is None:
            std_signature, cal_signature = signature, cal_sig
            std_depth, cal_depth = serial_depth(std), serial_depth(cal)
        elif signature != std_signature or cal_sig != cal_signature:
            raise RuntimeError(f"operation signature changed at {date}")
        std_peak = max(std_peak, max_intermediate(std))
        cal_peak = max(cal_peak, max_intermediate(cal))

    assert std_signature is not None and cal_signature is not None
    return ComparisonReport(
        start_year=start_year,
        end_year=end_year,
        dates_scanned=scanned,
        standard=_profile(std_signature, std_depth, std_peak),
        calamity=_profile(cal_signature, cal_depth, cal_peak),
    )

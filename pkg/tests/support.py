"""Shared hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from calamity.core import MAX_YEAR, MIN_YEAR, Date, month_length


@st.composite
def dates(draw, min_year=MIN_YEAR, max_year=MAX_YEAR):
    """Any valid date, optionally restricted by year."""
    year = draw(st.integers(min_year, max_year))
    month = draw(st.integers(1, 12))
    day = draw(st.integers(1, month_length(year, month)))
    return Date(year, month, day)

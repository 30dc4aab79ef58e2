from fractions import Fraction

from hypothesis import strategies as st

from faadibruno.series import ExpSeries

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)
small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def unital_series(draw, order=None, min_order=1, max_order=8):
    n = order or draw(st.integers(min_order, max_order))
    rest = draw(st.lists(rationals, min_size=n - 1, max_size=n - 1))
    return ExpSeries((Fraction(1), *rest))


@st.composite
def series_pair(draw, min_order=1, max_order=8, unital=True):
    n = draw(st.integers(min_order, max_order))
    if unital:
        return draw(unital_series(order=n)), draw(unital_series(order=n))
    f = draw(st.lists(rationals, min_size=n, max_size=n))
    g = draw(st.lists(rationals, min_size=n, max_size=n))
    return ExpSeries(tuple(f)), ExpSeries(tuple(g))

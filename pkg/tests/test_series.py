from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from faadibruno.errors import DomainError, NotUnitalError, ShapeMismatchError
from faadibruno.series import ExpSeries, compose, compose_oracle, majorant_bound, revert
from oracles import compose_exp, revert_fixed_point
from strategies import series_pair, unital_series


def test_compose_example():
    f = ExpSeries((1, 2, 0, 0))  # t + t^2
    assert compose(f, f).coeffs == (1, 4, 12, 24)


def test_revert_example():
    # inverse of t + t^2 is sum (-1)^(n-1) Catalan(n-1) t^n
    g = revert(ExpSeries((1, 2, 0, 0, 0)))
    catalan = [1, 1, 2, 5, 14]
    assert g.coeffs == tuple((-1) ** n * catalan[n] * factorial(n + 1) for n in range(5))


@given(series_pair(max_order=10, unital=False))
def test_compose_matches_oracles(pair):
    f, g = pair
    h = compose(f, g)
    assert h == compose_oracle(f, g)
    assert h.coeffs == compose_exp(f.coeffs, g.coeffs)


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(*(unital_series(order=n) for _ in range(3)))))
def test_compose_associative(triple):
    f, g, h = triple
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(unital_series(max_order=10))
def test_revert_is_two_sided_inverse(f):
    g = revert(f)
    ident = ExpSeries.identity(f.order)
    assert compose(f, g) == ident
    assert compose(g, f) == ident
    assert g.coeffs == revert_fixed_point(f.coeffs)


@given(unital_series())
def test_identity_is_neutral(f):
    ident = ExpSeries.identity(f.order)
    assert compose(f, ident) == f == compose(ident, f)


def test_compose_accepts_non_unital():
    f = ExpSeries((2, 1, 0))
    g = ExpSeries((0, 1, 1))
    assert compose(f, g) == compose_oracle(f, g)


def test_revert_requires_unital():
    with pytest.raises(NotUnitalError):
        revert(ExpSeries((2, 1)))


def test_order_mismatch():
    with pytest.raises(ShapeMismatchError):
        compose(ExpSeries((1, 1)), ExpSeries((1,)))


def test_json_round_trip_and_errors():
    f = ExpSeries((1, Fraction(-1, 3), 4))
    assert ExpSeries.from_json(f.to_json()) == f
    for bad, field in [({"coeffs": ["1"]}, "order"), ({"order": 1}, "coeffs"), ({"order": 2, "coeffs": ["1"]}, "order")]:
        with pytest.raises(DomainError, match=field):
            ExpSeries.from_json(bad)
    with pytest.raises(DomainError, match="coeffs"):
        ExpSeries.from_json({"order": 1, "coeffs": ["0.5"]})
    with pytest.raises(DomainError):
        ExpSeries(())


def test_majorant_values():
    assert majorant_bound(1, 1, 1, 1, 3) == 24
    assert majorant_bound(1, 1, 1, 1, 1) == 1
    assert majorant_bound(2, 3, 5, 7, 2) == Fraction(2 * 5, 9) * 2 / Fraction(3 * 7, 9) ** 2
    with pytest.raises(DomainError):
        majorant_bound(0, 1, 1, 1, 2)


def test_geometric_family_attains_majorant():
    N = 8
    geo = ExpSeries(tuple(factorial(m) for m in range(1, N + 1)))  # t / (1 - t)
    h = compose(geo, geo)  # t / (1 - 2t)
    for n in range(1, N + 1):
        assert h[n] == factorial(n) * 2 ** (n - 1) == majorant_bound(1, 1, 1, 1, n)


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.fractions(-1, 1), min_size=2 * n, max_size=2 * n))))
def test_bounded_series_stay_below_majorant(data):
    n, scales = data
    f = ExpSeries(tuple(s * factorial(m) for m, s in enumerate(scales[:n], 1)))
    g = ExpSeries(tuple(s * factorial(m) for m, s in enumerate(scales[n:], 1)))
    h = compose(f, g)
    assert all(abs(h[k]) <= majorant_bound(1, 1, 1, 1, k) for k in range(1, n + 1))


def test_indexing():
    f = ExpSeries((1, 2, 3))
    assert (f[1], f[3], f.order) == (1, 3, 3)
    with pytest.raises(IndexError):
        f[0]
    assert ExpSeries.from_ordinary(f.ordinary()) == f

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from faadibruno.arith import (
    TypeVector,
    binomial,
    enumerate_type_vectors,
    factorial,
    fdb_multinomial,
    format_rational,
    parse_rational,
)
from faadibruno.errors import DomainError
from oracles import bell_triangle, pascal_row, type_counts


@pytest.mark.parametrize(
    "entries, expected",
    [((0, 0, 1), 1), ((1, 1, 0), 3), ((3, 0, 0), 1), ((2, 1, 0, 0), 6), ((0, 2, 0, 0), 3), ((1, 0, 1, 0), 4)],
)
def test_fdb_multinomial_small(entries, expected):
    assert fdb_multinomial(TypeVector(entries)) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_multinomial_counts_partitions_of_each_type(n):
    counts = type_counts(n)
    assert {tv.entries: fdb_multinomial(tv) for tv in enumerate_type_vectors(n)} == dict(counts)


@pytest.mark.parametrize("n", range(1, 11))
def test_multinomials_sum_to_bell_number(n):
    assert sum(fdb_multinomial(tv) for tv in enumerate_type_vectors(n)) == bell_triangle(n)[n]


def test_enumerate_type_vectors_by_block_count():
    assert sorted(
        tv.entries for tv in enumerate_type_vectors(4, 2)
    ) == [(0, 2, 0, 0), (1, 0, 1, 0)]
    assert enumerate_type_vectors(3, 4) == []
    assert all(tv.k == 3 for tv in enumerate_type_vectors(7, 3))


def test_type_vector_validation():
    with pytest.raises(DomainError):
        TypeVector((1, 1))
    with pytest.raises(DomainError):
        TypeVector((-1, 1))
    with pytest.raises(DomainError):
        TypeVector(())


def test_type_vector_accessors():
    tv = TypeVector.from_block_sizes([2, 1, 1])
    assert tv.entries == (2, 1, 0, 0)
    assert (tv.n, tv.k, tv[1], tv[2], tv[9]) == (4, 3, 2, 1, 0)
    assert str(tv) == "(2,1)"
    assert TypeVector.from_json(tv.to_json()) == tv


@given(st.integers(1, 40), st.integers(1, 40))
def test_binomial_pascal_rule(n, k):
    if 0 < k < n:
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("n", [0, 5, 17])
def test_binomial_matches_pascal_triangle(n):
    assert [binomial(n, k) for k in range(n + 1)] == pascal_row(n)


def test_binomial_out_of_range_is_zero():
    assert binomial(3, 4) == binomial(3, -1) == 0


def test_factorial_rejects_negative():
    assert factorial(6) == 720
    with pytest.raises(DomainError):
        factorial(-1)


@given(st.fractions(max_denominator=1000))
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_rational_formatting():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(4) == "4"


@pytest.mark.parametrize("bad", ["1.5", "1/0", "x", "", "1/-2", "1/2/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(DomainError):
        parse_rational(bad)


def test_binomial_agrees_with_math_comb():
    assert all(binomial(n, k) == comb(n, k) for n in range(15) for k in range(n + 1))

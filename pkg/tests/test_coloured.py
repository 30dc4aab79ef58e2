import random
from collections import Counter
from fractions import Fraction
from itertools import permutations

import pytest

from faadibruno.checks import random_nseries, random_unital_series
from faadibruno.coloured import (
    NSeries,
    coloured_antipode,
    coloured_convolution,
    coloured_coproduct,
    enumerate_coloured_partitions,
    ground_colours,
    mfactorial,
    multi_indices,
    nseries_compose,
    nseries_revert,
)
from faadibruno.errors import CapExceededError, DomainError, ShapeMismatchError
from faadibruno.hopf import Character, convolve, coproduct
from faadibruno.poly import Generator, Polynomial, TensorElement, pi
from faadibruno.series import compose, revert
from oracles import nseries_substitute, nseries_to_dict, partitions_by_insertion

SHAPES = [nbar for N in (1, 2) for nbar in multi_indices(N, 2, 4)]


def _rename_to_a(t):
    def conv(m):
        return Polynomial.monomial(tuple((Generator("a", g.index[1][0]), e) for g, e in m))

    return t.map_legs(conv, conv)


@pytest.mark.parametrize("nbar, count", [((3,), 5), ((1, 1), 3), ((2, 0), 3), ((2, 1), 9)])
def test_coloured_partition_counts(nbar, count):
    # (2,1): all singletons, three pair-blocks in two colours, the whole set in two colours
    assert len(enumerate_coloured_partitions(nbar, 1)) == count


def test_singletons_keep_colour():
    for p in enumerate_coloured_partitions((2, 2), 2):
        for b, c in zip(p.blocks, p.block_colours):
            if len(b) == 1:
                assert p.colours[b[0] - 1] == c


@pytest.mark.parametrize("n", range(2, 7))
def test_one_colour_is_faa_di_bruno(n):
    assert _rename_to_a(coloured_coproduct(1, (n,))) == coproduct(n)


def test_two_colour_golden_value():
    g = pi(1, (1, 1))
    # the colour-2 pair block contributes Pi^2_(1,1) (x) Pi^1_(0,1) = 0
    assert coloured_coproduct(1, (1, 1)) == g.tensor(1) + Polynomial.one().tensor(g)
    t = coloured_coproduct(2, (2, 1))
    tally = Counter()
    for p in enumerate_coloured_partitions((2, 1), 2):
        left = tuple(sorted(Counter((c, p.block_count(b, 2)) for b, c in zip(p.blocks, p.block_colours) if len(b) > 1).items()))
        top = tuple(Counter(p.block_colours)[i] for i in (1, 2))
        tally[(left, top)] += 1
    expected = TensorElement()
    for (left, top), c in tally.items():
        lp = Polynomial.one()
        for (col, m), e in left:
            lp = lp * pi(col, m) ** e
        expected = expected + lp.tensor(pi(2, top)) * c
    assert t == expected


def _cop_mono(m):
    t = TensorElement.one()
    for g, e in m:
        t = t * coloured_coproduct(*g.index) ** e
    return t


def _s_mono(m):
    p = Polynomial.one()
    for g, e in m:
        p = p * coloured_antipode(*g.index) ** e
    return p


@pytest.mark.parametrize("nbar", SHAPES)
def test_coassociativity(nbar):
    for r in range(1, len(nbar) + 1):
        t = coloured_coproduct(r, nbar)
        left, right = Counter(), Counter()
        for (l, rr), c in t.items():
            for (l1, l2), d in _cop_mono(l).items():
                left[(l1, l2, rr)] += c * d
            for (r1, r2), d in _cop_mono(rr).items():
                right[(l, r1, r2)] += c * d
        assert +left == +right


@pytest.mark.parametrize("nbar", SHAPES)
def test_counit_and_antipode_laws(nbar):
    for r in range(1, len(nbar) + 1):
        gen = pi(r, nbar)
        t = coloured_coproduct(r, nbar)
        assert sum((Polynomial.monomial(rr) * c for (l, rr), c in t.items() if not l), Polynomial()) == gen
        assert sum((Polynomial.monomial(l) * c for (l, rr), c in t.items() if not rr), Polynomial()) == gen
        assert not sum((_s_mono(l) * Polynomial.monomial(rr) * c for (l, rr), c in t.items()), Polynomial())
        assert not sum((Polynomial.monomial(l) * _s_mono(rr) * c for (l, rr), c in t.items()), Polynomial())


@pytest.mark.parametrize("nbar", [nbar for N in (1, 2) for nbar in multi_indices(N, 2, 5)])
def test_ordered_block_count(nbar):
    # ordered coloured partitions with a prescribed sequence of block contents
    cols = ground_colours(nbar)
    N = len(nbar)
    seen = Counter()
    for p in partitions_by_insertion(len(cols)):
        for blocks in permutations(p):
            contents = tuple(tuple(Counter(cols[e - 1] for e in b)[i] for i in range(1, N + 1)) for b in blocks)
            seen[contents] += 1
    for contents, count in seen.items():
        den = 1
        for m in contents:
            den *= mfactorial(m)
        assert count == Fraction(mfactorial(nbar), den)


def test_compose_with_identity():
    f = random_nseries(random.Random(3), 2, 4)
    ident = NSeries.identity(2, 4)
    assert nseries_compose(f, ident) == f == nseries_compose(ident, f)
    assert coloured_convolution(ident, f) == f == coloured_convolution(f, ident)


def test_compose_example_matches_substitution():
    f = NSeries(2, 3, {(1, (1, 1)): 1})
    g = NSeries(2, 3, {(2, (2, 0)): 1})
    assert nseries_to_dict(nseries_compose(f, g)) == nseries_substitute(f, g)


@pytest.mark.parametrize("seed", range(6))
def test_random_compose_routes(seed):
    rng = random.Random(seed)
    M = 2 + seed % 3
    f, g, h = (random_nseries(rng, 2, M) for _ in range(3))
    fg = nseries_compose(f, g)
    assert nseries_to_dict(fg) == nseries_substitute(f, g)
    assert fg == coloured_convolution(g, f)
    assert nseries_compose(fg, h) == nseries_compose(f, nseries_compose(g, h))


@pytest.mark.parametrize("seed", range(6))
def test_revert_round_trip(seed):
    rng = random.Random(100 + seed)
    f = random_nseries(rng, 2, 2 + seed % 3)
    inv = nseries_revert(f)
    ident = NSeries.identity(f.N, f.M)
    assert nseries_compose(f, inv) == ident == nseries_compose(inv, f)


def test_revert_example():
    f = NSeries(2, 3, {(1, (2, 0)): 2})
    inv = nseries_revert(f)
    assert nseries_substitute(f, inv) == {}
    assert nseries_revert(NSeries.identity(2, 3)) == NSeries.identity(2, 3)


@pytest.mark.parametrize("M", range(2, 9))
def test_single_variable_specialization(M, monkeypatch):
    if M > 7:
        monkeypatch.setenv("FDB_MAX_GRADE", str(M))
    rng = random.Random(M)
    for _ in range(3):
        e1, e2 = random_unital_series(rng, M), random_unital_series(rng, M)
        n1, n2 = NSeries.from_exp_series(e1), NSeries.from_exp_series(e2)
        assert nseries_compose(n1, n2).to_exp_series() == compose(e1, e2)
        assert nseries_revert(n1).to_exp_series() == revert(e1)
        if M <= 6:
            chi1, chi2 = Character.from_series(e1), Character.from_series(e2)
            assert coloured_convolution(n1, n2).to_exp_series() == convolve(chi1, chi2).to_series()


def test_validation_and_json():
    with pytest.raises(DomainError):
        NSeries(2, 3, {(1, (0, 1)): 2})
    with pytest.raises(DomainError):
        NSeries(2, 3, {(3, (2, 0)): 1})
    with pytest.raises(DomainError):
        NSeries(2, 2, {(1, (2, 1)): 1})
    with pytest.raises(ShapeMismatchError):
        nseries_compose(NSeries.identity(2, 3), NSeries.identity(1, 3))
    with pytest.raises(CapExceededError):
        coloured_coproduct(1, (1, 1, 1, 1))
    f = random_nseries(random.Random(9), 2, 3)
    assert NSeries.from_json(f.to_json()) == f
    with pytest.raises(DomainError, match="coeffs"):
        NSeries.from_json({"N": 2, "M": 3})
    with pytest.raises(DomainError, match="value"):
        NSeries.from_json({"N": 1, "M": 2, "coeffs": [{"component": 1, "index": [2]}]})

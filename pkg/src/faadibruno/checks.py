"""Bundled self-checks (``fdb check``) and seeded random generators."""
from __future__ import annotations

import random
from fractions import Fraction

from .config import cap
from .errors import DomainError
from .series import ExpSeries

SUITES = ("hopf", "gamma", "nseries")


def random_rational(rng, num=5, den=4):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_unital_series(rng, order, num=5, den=4) -> ExpSeries:
    return ExpSeries((1,) + tuple(random_rational(rng, num, den) for _ in range(order - 1)))


def random_nseries(rng, N, M, density=0.7, num=4, den=3):
    from .coloured import NSeries, multi_indices

    coeffs = {}
    for nbar in multi_indices(N, 2, M):
        for r in range(1, N + 1):
            if rng.random() < density:
                coeffs[(r, nbar)] = random_rational(rng, num, den)
    return NSeries(N, M, coeffs)


def _hopf(upto):
    from .hopf import antipode, antipode_recursive, check_hopf_axioms, coproduct
    from .partitions import incidence_coproduct

    out = []
    rep = check_hopf_axioms(upto)
    out.append(("hopf axioms on a_2..a_%d" % upto, rep.passed, rep.counterexample))
    bad = [n for n in range(2, upto + 1) if antipode(n) != antipode_recursive(n)]
    out.append(("closed antipode = recursive antipode", not bad, bad or None))
    top = min(upto, cap("incidence"))
    bad = [n for n in range(2, top + 1) if incidence_coproduct(n) != coproduct(n)]
    out.append((f"incidence coproduct = Bell coproduct, n <= {top}", not bad, bad or None))
    return out


def _gamma(upto):
    from .cm import coproduct_delta
    from .words import check_hopf_embedding, gamma_closed, gamma_recursive

    out = []
    bad = [n for n in range(1, upto + 1) if gamma_closed(n) != gamma_recursive(n)]
    out.append(("Gamma closed = recursive", not bad, bad or None))
    top = min(upto, cap("embedding"))
    bad = [n for n in range(1, top + 1) if not check_hopf_embedding(n).passed]
    out.append((f"Hopf embedding, n <= {top}", not bad, bad or None))
    bad = [
        n
        for n in range(1, top + 1)
        if not (coproduct_delta(n, "subst") == coproduct_delta(n, "closed") == coproduct_delta(n, "shuffle"))
    ]
    out.append((f"Delta delta_n routes agree, n <= {top}", not bad, bad or None))
    return out


def _nseries(upto, seed=0):
    from .coloured import NSeries, coloured_convolution, nseries_compose, nseries_revert
    from .series import compose, revert

    rng = random.Random(seed)
    out = []
    bad = []
    for M in range(2, upto + 1):
        for _ in range(5):
            f, g = random_nseries(rng, 2, M), random_nseries(rng, 2, M)
            fg = nseries_compose(f, g)
            if fg != coloured_convolution(g, f):
                bad.append(("compose vs convolution", M))
            inv = nseries_revert(f)
            ident = NSeries.identity(2, M)
            if nseries_compose(f, inv) != ident or nseries_compose(inv, f) != ident:
                bad.append(("revert", M))
            e1, e2 = random_unital_series(rng, M), random_unital_series(rng, M)
            n1, n2 = NSeries.from_exp_series(e1), NSeries.from_exp_series(e2)
            if nseries_compose(n1, n2).to_exp_series() != compose(e1, e2):
                bad.append(("N=1 compose", M))
            if nseries_revert(n1).to_exp_series() != revert(e1):
                bad.append(("N=1 revert", M))
    out.append((f"N-series (N=2, M <= {upto}) compose/convolution/revert", not bad, bad[:5] or None))
    return out


def run_check(suite: str, upto: int) -> dict:
    if suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if upto < 2:
        raise DomainError("--upto must be >= 2")
    results = {"hopf": _hopf, "gamma": _gamma, "nseries": _nseries}[suite](upto)
    return {
        "suite": suite,
        "upto": upto,
        "passed": all(ok for _, ok, _ in results),
        "results": [{"check": name, "passed": ok, "detail": detail} for name, ok, detail in results],
    }

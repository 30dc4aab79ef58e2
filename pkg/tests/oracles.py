"""Independent reference computations used to cross-check the library.

None of these use Bell polynomials, type vectors or the library's partition
enumerator; they work from power-series arithmetic or brute force.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb, factorial

from faadibruno.poly import Polynomial, TensorElement, a


def partitions_by_insertion(n):
    """Set partitions of {1..n}: insert n into each block of a partition of n-1, or alone."""
    if n == 0:
        return [[]]
    out = []
    for p in partitions_by_insertion(n - 1):
        for i in range(len(p)):
            out.append(p[:i] + [p[i] + [n]] + p[i + 1 :])
        out.append(p + [[n]])
    return out


def type_counts(n):
    """Counter of block-size type vectors over all partitions of {1..n}."""
    c = Counter()
    for p in partitions_by_insertion(n):
        sizes = Counter(len(b) for b in p)
        c[tuple(sizes[i] for i in range(1, n + 1))] += 1
    return c


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [x + y for x, y in zip([0] + row, row + [0])]
    return row


def bell_triangle(M):
    """Bell numbers B_0..B_M from the Aitken array."""
    bells, row = [1], [1]
    for _ in range(M):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        bells.append(row[0])
    return bells


def stirling2_explicit(n, k):
    return sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1)) // factorial(k)


# ---- truncated ordinary power series over a commutative coefficient ring ----


def _mul(p, q, N, zero):
    out = [zero] * (N + 1)
    for i, x in enumerate(p):
        if not x:
            continue
        for j in range(N + 1 - i):
            if q[j]:
                out[i + j] = out[i + j] + x * q[j]
    return out


def compose_ordinary(outer, inner, N, zero, one):
    """Coefficients 0..N of outer(inner(t)); inner has zero constant term."""
    result = [zero] * (N + 1)
    power = [one] + [zero] * N
    for k in range(N + 1):
        if outer[k]:
            result = [r + outer[k] * c for r, c in zip(result, power)]
        power = _mul(power, inner, N, zero)
    return result


def exp_to_ord(coeffs):
    """(f_1..f_N) in exponential normalization -> ordinary list indexed 0..N."""
    return [Fraction(0)] + [Fraction(c) / factorial(n) for n, c in enumerate(coeffs, 1)]


def ord_to_exp(seq):
    return tuple(Fraction(c) * factorial(n) for n, c in enumerate(seq) if n >= 1)


def compose_exp(f, g):
    """Exponential coefficients of f(g(t)) by plain substitution."""
    N = len(f)
    return ord_to_exp(compose_ordinary(exp_to_ord(f), exp_to_ord(g), N, Fraction(0), Fraction(1)))


def revert_fixed_point(f):
    """Compositional inverse by g <- g - (f o g - id), starting from id."""
    N = len(f)
    ident = (Fraction(1),) + (Fraction(0),) * (N - 1)
    g = ident
    for _ in range(N + 1):
        fg = compose_exp(f, g)
        g = tuple(gi - (h - e) for gi, h, e in zip(g, fg, ident))
    return g


def symbolic_coproduct(n):
    """Delta a_n read off from g(f(t)) with f_k = a_k (x) 1 and g_k = 1 (x) a_k."""
    one = TensorElement.one()
    zero = TensorElement()
    inner = [zero] + [a(k).tensor(Polynomial.one()) * Fraction(1, factorial(k)) for k in range(1, n + 1)]
    outer = [zero] + [Polynomial.one().tensor(a(k)) * Fraction(1, factorial(k)) for k in range(1, n + 1)]
    h = compose_ordinary(outer, inner, n, zero, one)
    return h[n] * factorial(n)


def delta_via_log(n):
    """delta_n = n! [t^n] log f'(t) for f = t + sum a_m t^m / m!."""
    zero, one = Polynomial.zero(), Polynomial.one()
    u = [zero] + [a(m + 1) * Fraction(1, factorial(m)) for m in range(1, n + 1)]
    log1p = [zero] + [one * Fraction((-1) ** (k - 1), k) for k in range(1, n + 1)]
    return compose_ordinary(log1p, u, n, zero, one)[n] * factorial(n)


# ---- multivariate truncated substitution for N-series ----


def _mi_add(x, y):
    return tuple(i + j for i, j in zip(x, y))


def _mv_mul(p, q, M):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _mi_add(m1, m2)
            if sum(m) <= M:
                out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def nseries_components(f):
    """Each component as {multi-index: ordinary coefficient}, including the linear part."""
    N, M = f.N, f.M
    comps = []
    for r in range(1, N + 1):
        unit = tuple(int(i == r - 1) for i in range(N))
        comp = {unit: Fraction(1)}
        for nbar in product(range(M + 1), repeat=N):
            if 2 <= sum(nbar) <= M:
                c = f.coeff(r, nbar)
                if c:
                    denom = 1
                    for k in nbar:
                        denom *= factorial(k)
                    comp[nbar] = Fraction(c) / denom
        comps.append(comp)
    return comps


def nseries_substitute(f, g):
    """Exponential coefficients of f(g(x)) as {(r, nbar): value}, via polynomial substitution."""
    N, M = f.N, f.M
    fc, gc = nseries_components(f), nseries_components(g)
    out = {}
    for r in range(N):
        total = {}
        for mono, c in fc[r].items():
            term = {(0,) * N: c}
            for var, e in enumerate(mono):
                for _ in range(e):
                    term = _mv_mul(term, gc[var], M)
            for m, v in term.items():
                total[m] = total.get(m, 0) + v
        for m, v in total.items():
            if sum(m) >= 2 and v:
                scale = 1
                for k in m:
                    scale *= factorial(k)
                out[(r + 1, m)] = v * scale
    return out


def nseries_to_dict(f):
    return {(r, tuple(nbar)): Fraction(c) for (r, nbar), c in f.coeffs.items() if c}

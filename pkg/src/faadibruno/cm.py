"""Connes-Moscovici coordinates delta_n = [log f'(t)]^{(n)}(0).

Conversions between the delta_n and the a_n, and the coproduct of delta_n
by three independent routes:

``subst``   rewrite delta_n in the a_n, apply the coproduct, rewrite both legs back;
``closed``  the closed formula with the coefficients K (segment sums below);
``shuffle`` deconcatenate Gamma_n in the shuffle algebra and pull back along
            the injective Hopf map delta_m -> Gamma_m.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arith import binomial, factorial
from .config import check_cap
from .errors import DomainError
from .hopf import coproduct_poly
from .partitions import bell_partial
from .poly import Generator, Polynomial, TensorElement, a, delta, mono_degree

ROUTES = ("subst", "closed", "shuffle")


def delta_in_a(n: int) -> Polynomial:
    """delta_n = sum_k (-1)^{k-1} (k-1)! B_{n,k}(a_2, ..., a_{n+2-k})."""
    if n < 1:
        raise DomainError(f"delta_{n}: index must be >= 1")
    return _delta_in_a(n)


@lru_cache(maxsize=None)
def _delta_in_a(n):
    args = [a(i + 1) for i in range(1, n + 1)]
    total = Polynomial()
    for k in range(1, n + 1):
        total = total + bell_partial(n, k, args) * ((-1) ** (k - 1) * factorial(k - 1))
    return total


def a_in_delta(n: int) -> Polynomial:
    """a_{n+1} = sum_k B_{n,k}(delta_1, ..., delta_{n+1-k})."""
    if n < 1:
        raise DomainError(f"a_{n + 1}: n must be >= 1")
    return _a_in_delta(n)


@lru_cache(maxsize=None)
def _a_in_delta(n):
    args = [delta(i) for i in range(1, n + 1)]
    return sum((bell_partial(n, k, args) for k in range(1, n + 1)), Polynomial())


def delta_to_a(p) -> Polynomial:
    """Rewrite a polynomial in the delta_n as a polynomial in the a_n."""
    return Polynomial.coerce(p).substitute(lambda g: _delta_in_a(_expect(g, "delta").index))


def a_to_delta(p) -> Polynomial:
    return Polynomial.coerce(p).substitute(lambda g: _a_in_delta(_expect(g, "a").index - 1))


def _expect(g: Generator, family):
    if g.family != family:
        raise DomainError(f"expected a {family}-generator, got {g}")
    return g


def coproduct_delta(n: int, route: str = "subst") -> TensorElement:
    if n < 1:
        raise DomainError(f"delta_{n}: index must be >= 1")
    check_cap("delta", n)
    if route == "subst":
        return _coproduct_delta_subst(n)
    if route == "closed":
        return _coproduct_delta_closed(n)
    if route == "shuffle":
        from .words import coproduct_delta_shuffle

        return coproduct_delta_shuffle(n)
    raise DomainError(f"unknown route {route!r}; choose from {', '.join(ROUTES)}")


@lru_cache(maxsize=None)
def _coproduct_delta_subst(n):
    def back(m):
        return a_to_delta(Polynomial.monomial(m))

    return coproduct_poly(_delta_in_a(n)).map_legs(back, back)


def bilinear_part(n: int) -> TensorElement:
    """sum_{i=1}^{n-1} C(n, i-1) delta_{n-i} (x) delta_i."""
    if n < 2:
        return TensorElement()
    total = TensorElement()
    for i in range(1, n):
        total = total + delta(n - i).tensor(delta(i)) * binomial(n, i - 1)
    return total


def compositions(n: int, min_parts: int = 1):
    """All compositions of n (ordered tuples of positive parts), lexicographic."""
    if n == 0:
        return [()] if min_parts <= 0 else []
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first, 0):
            if 1 + len(rest) >= min_parts:
                out.append((first,) + rest)
    return out


def _segmentations(seq):
    # ordered splits of seq into consecutive nonempty segments
    if not seq:
        yield ()
        return
    for i in range(1, len(seq) + 1):
        for rest in _segmentations(seq[i:]):
            yield (seq[:i],) + rest


def k_coefficient(nbar) -> Fraction:
    """K_{n_r}^{n_1,...,n_{r-1}} for the composition vector nbar = (n_1, ..., n_r).

    Sum over splits of (n_1, ..., n_{r-1}) into k consecutive segments of
    C(n_r, k) / prod(len(seg)!) * prod 1/(1 + sum(seg)).
    """
    nbar = tuple(nbar)
    if len(nbar) < 2 or any(v < 1 for v in nbar):
        raise DomainError(f"K needs a composition vector with r >= 2 positive entries, got {nbar}")
    head, last = nbar[:-1], nbar[-1]
    total = Fraction(0)
    for segs in _segmentations(head):
        k = len(segs)
        c = binomial(last, k)
        if not c:
            continue
        term = Fraction(c)
        for seg in segs:
            term /= factorial(len(seg)) * (1 + sum(seg))
        total += term
    return total


def coproduct_delta_closed(n: int) -> TensorElement:
    return coproduct_delta(n, "closed")


@lru_cache(maxsize=None)
def _coproduct_delta_closed(n):
    total = delta(n).tensor(1) + Polynomial.one().tensor(delta(n))
    for nbar in compositions(n, 2):
        coeff = Fraction(factorial(n))
        for v in nbar:
            coeff /= factorial(v)
        coeff *= k_coefficient(nbar)
        if not coeff:
            continue
        left = Polynomial.one()
        for v in nbar[:-1]:
            left = left * delta(v)
        total = total + left.tensor(delta(nbar[-1])) * coeff
    return total


def generator_bilinear_component(t: TensorElement) -> TensorElement:
    """Terms whose legs are both single generators to the first power."""
    return TensorElement(
        {(l, r): c for (l, r), c in t.items() if len(l) == 1 and l[0][1] == 1 and len(r) == 1 and r[0][1] == 1}
    )


def right_legs_are_generators(t: TensorElement) -> bool:
    """Every right leg is 1 or a single delta_j."""
    return all(not r or (len(r) == 1 and r[0][1] == 1) for (_, r), _ in t.items())


def degree_compatible(n: int) -> bool:
    """Each monomial of delta_n written in the a_n has degree n."""
    return all(mono_degree(m) == n for m, _ in delta_in_a(n).items())

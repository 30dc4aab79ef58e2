"""N-series, coloured partitions and the coloured Hopf algebras F(N).

An N-series has components t_r + sum_{|n|>1} f^r_n t^n / n!, with the
multi-index n in N^N. Its coefficients are the values of a character of
F(N) on the generators Pi^r_n. Colours and components are numbered 1..N.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod

from .arith import factorial, format_rational, parse_rational
from .config import check_cap
from .errors import DomainError, ShapeMismatchError
from .partitions import iter_partitions
from .poly import Generator, Polynomial, TensorElement, pi
from .series import ExpSeries


def weight(nbar) -> int:
    return sum(nbar)


def mfactorial(nbar) -> int:
    return prod(factorial(v) for v in nbar)


def unit_vector(N, s):
    return tuple(1 if i == s else 0 for i in range(1, N + 1))


def multi_indices(N: int, lo: int, hi: int) -> list:
    """All n in N^N with lo <= |n| <= hi, ordered by weight then lexicographically."""
    out = [n for n in product(range(hi + 1), repeat=N) if lo <= sum(n) <= hi]
    return sorted(out, key=lambda n: (sum(n), n))


def _check_shape(N, nbar):
    if not 1 <= N:
        raise DomainError(f"number of colours must be >= 1, got {N}")
    check_cap("colours", N)
    if len(nbar) != N or any(v < 0 for v in nbar):
        raise DomainError(f"multi-index {nbar} does not lie in N^{N}")
    if weight(nbar) < 1:
        raise DomainError(f"multi-index {nbar} has weight 0")
    check_cap("coloured", weight(nbar))


def ground_colours(nbar) -> tuple:
    """Canonical coloured set: elements 1..|n| coloured in non-decreasing order."""
    return tuple(c for c, k in enumerate(nbar, 1) for _ in range(k))


@dataclass(frozen=True)
class ColouredPartition:
    colours: tuple  # colour of element i is colours[i-1]
    blocks: tuple
    block_colours: tuple

    def __post_init__(self):
        for b, c in zip(self.blocks, self.block_colours):
            if len(b) == 1 and self.colours[b[0] - 1] != c:
                raise DomainError(f"singleton block {b} must keep its element's colour")

    @property
    def N(self):
        return max(self.colours + self.block_colours)

    def block_count(self, b, N) -> tuple:
        c = Counter(self.colours[e - 1] for e in b)
        return tuple(c[i] for i in range(1, N + 1))

    def type_vector(self, N) -> tuple:
        """|pi|: how many blocks carry each colour."""
        c = Counter(self.block_colours)
        return tuple(c[i] for i in range(1, N + 1))

    def to_json(self):
        return {"blocks": [list(b) for b in self.blocks], "colours": list(self.block_colours)}


def enumerate_coloured_partitions(nbar, r: int) -> list:
    """All coloured partitions of the canonical set with colour counts nbar.

    Non-singleton blocks take every colour in 1..N; singletons keep theirs.
    ``r`` is the colour of the whole set (it only labels the poset).
    """
    nbar = tuple(nbar)
    N = len(nbar)
    _check_shape(N, nbar)
    if not 1 <= r <= N:
        raise DomainError(f"colour {r} outside 1..{N}")
    cols = ground_colours(nbar)
    out = []
    for blocks in iter_partitions(len(cols)):
        choices = [(cols[b[0] - 1],) if len(b) == 1 else tuple(range(1, N + 1)) for b in blocks]
        for bc in product(*choices):
            out.append(ColouredPartition(cols, blocks, bc))
    return out


def coloured_coproduct(r: int, nbar) -> TensorElement:
    """Delta Pi^r_n = sum_pi (prod_B Pi^{theta(B)}_{|B|}) (x) Pi^r_{|pi|}."""
    nbar = tuple(nbar)
    N = len(nbar)
    _check_shape(N, nbar)
    if not 1 <= r <= N:
        raise DomainError(f"colour {r} outside 1..{N}")
    return _coloured_coproduct(r, nbar)


@lru_cache(maxsize=None)
def _coloured_coproduct(r, nbar):
    N = len(nbar)
    cols = ground_colours(nbar)
    tally = Counter()
    for blocks in iter_partitions(len(cols)):
        singles = Counter(cols[b[0] - 1] for b in blocks if len(b) == 1)
        big = []
        for b in blocks:
            if len(b) > 1:
                c = Counter(cols[e - 1] for e in b)
                big.append(tuple(c[i] for i in range(1, N + 1)))
        for bc in product(range(1, N + 1), repeat=len(big)):
            left = tuple(sorted(Counter(zip(bc, big)).items()))
            top = Counter(bc) + singles
            tally[(left, tuple(top[i] for i in range(1, N + 1)))] += 1
    total = TensorElement()
    for (left, top), c in tally.items():
        right = pi(r, top)
        if not right:
            continue
        mono = tuple(sorted((Generator("Pi", (s, m)), e) for (s, m), e in left))
        total = total + Polynomial.monomial(mono).tensor(right) * c
    return total


@dataclass(frozen=True)
class NSeries:
    """N-series with identity linear part, truncated at total degree M.

    ``coeffs`` maps (r, nbar) with 2 <= |nbar| <= M to f^r_nbar; absent
    entries are zero.
    """

    N: int
    M: int
    coeffs: dict = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        if self.N < 1 or self.M < 1:
            raise DomainError("N-series needs N >= 1 and M >= 1")
        clean = {}
        for (r, nbar), v in self.coeffs.items():
            nbar = tuple(int(x) for x in nbar)
            v = Fraction(v)
            if len(nbar) != self.N or any(x < 0 for x in nbar) or not 1 <= r <= self.N:
                raise DomainError(f"bad coefficient index component={r}, index={list(nbar)} for N={self.N}")
            w = sum(nbar)
            if w == 1:
                if v != (1 if nbar[r - 1] == 1 else 0):
                    raise DomainError(f"non-identity linear part: coefficient of component {r} at {list(nbar)} is {v}")
                continue
            if w < 1 or w > self.M:
                raise DomainError(f"index {list(nbar)} outside 2 <= |n| <= {self.M}")
            if v:
                clean[(int(r), nbar)] = v
        object.__setattr__(self, "coeffs", clean)

    def __eq__(self, other):
        if not isinstance(other, NSeries):
            return NotImplemented
        return (self.N, self.M, self.coeffs) == (other.N, other.M, other.coeffs)

    def __hash__(self):
        return hash((self.N, self.M, frozenset(self.coeffs.items())))

    @classmethod
    def identity(cls, N, M):
        return cls(N, M, {})

    def coeff(self, r, nbar) -> Fraction:
        nbar = tuple(nbar)
        if sum(nbar) == 1:
            return Fraction(1 if nbar[r - 1] == 1 else 0)
        return self.coeffs.get((r, nbar), Fraction(0))

    def __call__(self, p) -> Fraction:
        """Value of the corresponding character of F(N) on a Pi-polynomial."""
        def value(g):
            if g.family != "Pi":
                raise DomainError(f"N-series characters act on Pi-generators, got {g}")
            r, nbar = g.index
            if sum(nbar) > self.M:
                raise DomainError(f"{g} lies beyond the truncation order {self.M}")
            return self.coeff(r, nbar)

        return Polynomial.coerce(p).evaluate(value)

    @classmethod
    def from_exp_series(cls, f: ExpSeries):
        if not f.unital:
            raise DomainError("N-series need an identity linear part (f_1 = 1)")
        return cls(1, f.order, {(1, (n,)): f[n] for n in range(2, f.order + 1)})

    def to_exp_series(self) -> ExpSeries:
        if self.N != 1:
            raise ShapeMismatchError("only 1-variable N-series convert to ExpSeries")
        return ExpSeries((1,) + tuple(self.coeff(1, (n,)) for n in range(2, self.M + 1)))

    def __str__(self):
        body = ", ".join(f"f^{r}_{list(n)}={format_rational(v)}" for (r, n), v in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0][1]), kv[0])))
        return f"NSeries(N={self.N}, M={self.M}; {body})"

    def to_json(self):
        items = sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0][1]), kv[0][1], kv[0][0]))
        return {
            "N": self.N,
            "M": self.M,
            "coeffs": [{"component": r, "index": list(n), "value": format_rational(v)} for (r, n), v in items],
        }

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise DomainError("N-series JSON must be an object with fields 'N', 'M', 'coeffs'")
        for fld in ("N", "M", "coeffs"):
            if fld not in data:
                raise DomainError(f"N-series JSON: missing field {fld!r}")
        coeffs = {}
        for i, item in enumerate(data["coeffs"]):
            for fld in ("component", "index", "value"):
                if fld not in item:
                    raise DomainError(f"N-series JSON: coeffs[{i}] missing field {fld!r}")
            try:
                v = parse_rational(str(item["value"]))
            except DomainError as exc:
                raise DomainError(f"N-series JSON: coeffs[{i}].value: {exc}") from None
            key = (item["component"], tuple(item["index"]))
            coeffs[key] = coeffs.get(key, 0) + v
        return cls(data["N"], data["M"], coeffs)


def _check_pair(f, g):
    if (f.N, f.M) != (g.N, g.M):
        raise ShapeMismatchError(f"N-series shapes differ: (N={f.N}, M={f.M}) vs (N={g.N}, M={g.M})")


def nseries_compose(f: NSeries, g: NSeries) -> NSeries:
    """f o g, coefficientwise by the multivariate Faa di Bruno sum.

    For target index n, sum over multiplicities lambda_{i,m} >= 0 with
    sum lambda_{i,m} m = n, setting k_i = sum_m lambda_{i,m}:
        f^r_k n! prod (g^i_m)^lambda / (prod lambda! prod (m!)^lambda).
    """
    _check_pair(f, g)
    N, M = f.N, f.M
    out = {}
    for nbar in multi_indices(N, 2, M):
        parts = [
            (i, m)
            for m in multi_indices(N, 1, sum(nbar))
            if all(a <= b for a, b in zip(m, nbar))
            for i in range(1, N + 1)
            if g.coeff(i, m)
        ]
        sums = {r: Fraction(0) for r in range(1, N + 1)}
        for lam in _multiplicities(parts, nbar):
            kvec = [0] * N
            weight_term = Fraction(mfactorial(nbar))
            for (i, m), l in lam:
                kvec[i - 1] += l
                weight_term *= g.coeff(i, m) ** l / (factorial(l) * mfactorial(m) ** l)
            kvec = tuple(kvec)
            for r in range(1, N + 1):
                fk = f.coeff(r, kvec)
                if fk:
                    sums[r] += fk * weight_term
        for r, v in sums.items():
            if v:
                out[(r, nbar)] = v
    return NSeries(N, M, out)


def _multiplicities(parts, target):
    """Yield lists ((part, lambda), ...) with sum lambda * m = target, lambda >= 1."""
    def rec(j, rem, acc):
        if not any(rem):
            yield list(acc)
            return
        if j == len(parts):
            return
        i, m = parts[j]
        yield from rec(j + 1, rem, acc)
        l, r2 = 0, rem
        while True:
            r2 = tuple(a - b for a, b in zip(r2, m))
            if any(v < 0 for v in r2):
                break
            l += 1
            acc.append(((i, m), l))
            yield from rec(j + 1, r2, acc)
            acc.pop()

    yield from rec(0, tuple(target), [])


def coloured_convolution(g: NSeries, f: NSeries) -> NSeries:
    """(g * f)(Pi^r_n) = sum_pi f^r_{|pi|} prod_B g^{theta(B)}_{|B|}; the series f o g."""
    _check_pair(f, g)
    out = {}
    for nbar in multi_indices(f.N, 2, f.M):
        for r in range(1, f.N + 1):
            v = _coloured_coproduct(r, nbar).contract(
                lambda l: g(Polynomial.monomial(l)), lambda rr: f(Polynomial.monomial(rr))
            )
            if v:
                out[(r, nbar)] = v
    return NSeries(f.N, f.M, out)


def coloured_antipode(r: int, nbar) -> Polynomial:
    """S(Pi^r_n) = -Pi^r_n - sum S(x') x'' over proper coproduct terms."""
    nbar = tuple(nbar)
    _check_shape(len(nbar), nbar)
    return _coloured_antipode(r, nbar)


@lru_cache(maxsize=None)
def _coloured_antipode(r, nbar):
    gen = pi(r, nbar)
    if sum(nbar) == 1:
        return gen
    total = -gen
    for (l, rr), c in _coloured_coproduct(r, nbar).items():
        if not l or not rr:
            continue
        s_left = Polynomial.one()
        for g, e in l:
            s_left = s_left * _coloured_antipode(*g.index) ** e
        total = total - s_left * Polynomial.monomial(rr) * c
    return total


def nseries_revert(f: NSeries) -> NSeries:
    """Compositional inverse: the character f o S, via the antipode of F(N)."""
    out = {}
    for nbar in multi_indices(f.N, 2, f.M):
        check_cap("coloured", sum(nbar))
        for r in range(1, f.N + 1):
            v = f(_coloured_antipode(r, nbar))
            if v:
                out[(r, nbar)] = v
    return NSeries(f.N, f.M, out)

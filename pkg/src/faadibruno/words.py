"""Shuffle and concatenation Hopf algebras on words of positive integers,
and the embedding delta_n -> Gamma_n of F into the shuffle algebra.

Words are plain tuples of positive ints; ``()`` is the unit.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .arith import binomial, factorial, format_rational
from .config import check_cap
from .errors import DomainError, FdbError
from .linalg import solve
from .poly import Generator, Polynomial, TensorElement

GAMMA_ROUTES = ("closed", "recursive")


def word(letters) -> tuple:
    w = tuple(int(v) for v in letters)
    if any(v < 1 for v in w):
        raise DomainError(f"word letters must be positive, got {w}")
    return w


def word_str(w) -> str:
    if not w:
        return "∅"
    if len(w) == 1:
        return str(w[0])
    return "(" + ",".join(map(str, w)) + ")"


class WordElement:
    """Finite Q-combination of words (the basis u^w, or X_w on the dual side)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for w, c in (coeffs or {}).items():
            w = tuple(w)
            clean[w] = clean.get(w, 0) + Fraction(c)
        self._coeffs = {w: c for w, c in clean.items() if c}

    @classmethod
    def of(cls, w, c=1):
        return cls({word(w): c})

    @classmethod
    def one(cls):
        return cls({(): 1})

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, w):
        return self._coeffs.get(tuple(w), Fraction(0))

    def __len__(self):
        return len(self._coeffs)

    def support(self):
        return set(self._coeffs)

    def __add__(self, other):
        out = dict(self._coeffs)
        for w, c in other._coeffs.items():
            out[w] = out.get(w, 0) + c
        return WordElement(out)

    def __neg__(self):
        return WordElement({w: -c for w, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Scalar multiple, or shuffle product with another WordElement."""
        if isinstance(other, (int, Fraction)):
            return WordElement({w: c * other for w, c in self._coeffs.items()})
        if not isinstance(other, WordElement):
            return NotImplemented
        out = {}
        for u, cu in self._coeffs.items():
            for v, cv in other._coeffs.items():
                for w, s in _shuffle(u, v).items():
                    out[w] = out.get(w, 0) + cu * cv * s
        return WordElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, WordElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for w in sorted(self._coeffs, key=lambda w: (len(w), w)):
            c = self._coeffs[w]
            coeff = "" if c == 1 else ("-" if c == -1 else format_rational(c))
            parts.append(f"{coeff}u^{word_str(w)}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self):
        return [{"word": list(w), "coeff": format_rational(c)} for w, c in sorted(self._coeffs.items(), key=lambda wc: (len(wc[0]), wc[0]))]


class WordTensor:
    """Finite Q-combination of word pairs u (x) v."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for (u, v), c in (coeffs or {}).items():
            k = (tuple(u), tuple(v))
            clean[k] = clean.get(k, 0) + Fraction(c)
        self._coeffs = {k: c for k, c in clean.items() if c}

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, key):
        u, v = key
        return self._coeffs.get((tuple(u), tuple(v)), Fraction(0))

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return WordTensor(out)

    def __mul__(self, c):
        return WordTensor({k: v * c for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WordTensor):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for (u, v) in sorted(self._coeffs, key=lambda k: (len(k[0]) + len(k[1]), k)):
            c = self._coeffs[(u, v)]
            coeff = "" if c == 1 else format_rational(c)
            parts.append(f"{coeff}{word_str(u)}⊗{word_str(v)}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


@lru_cache(maxsize=None)
def _shuffle(u, v):
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}
    for w, c in _shuffle(u[1:], v).items():
        k = (u[0],) + w
        out[k] = out.get(k, 0) + c
    for w, c in _shuffle(u, v[1:]).items():
        k = (v[0],) + w
        out[k] = out.get(k, 0) + c
    return out


def shuffle_product(u, v) -> WordElement:
    """u^u * u^v = sum over interleavings, with multiplicity."""
    return WordElement(_shuffle(word(u), word(v)))


def deconcatenation(u) -> WordTensor:
    """Delta u^w = sum over prefix (x) suffix splits, empty parts included."""
    u = word(u)
    return WordTensor({(u[:i], u[i:]): 1 for i in range(len(u) + 1)})


def deconcatenate(elem: WordElement) -> WordTensor:
    out = WordTensor()
    for w, c in elem.items():
        out = out + deconcatenation(w) * c
    return out


def concat_coproduct(u) -> WordTensor:
    """Coproduct of X_w with every letter primitive: sum over position subsets."""
    u = word(u)
    n = len(u)
    out = {}
    for size in range(n + 1):
        for pos in combinations(range(n), size):
            chosen = set(pos)
            k = (tuple(u[i] for i in pos), tuple(u[i] for i in range(n) if i not in chosen))
            out[k] = out.get(k, 0) + 1
    return WordTensor(out)


def compositions_of(n: int):
    """Words of weight n (the index set N_n), lexicographic."""
    if n == 0:
        return [()]
    return [(first,) + rest for first in range(1, n + 1) for rest in compositions_of(n - first)]


def c_coefficient(w) -> int:
    """C^w = (n_r + 1) * prod_{i=2}^{r} (n_i + ... + n_r)."""
    w = word(w)
    c = w[-1] + 1
    for i in range(1, len(w)):
        c *= sum(w[i:])
    return c


def gamma_closed(n: int) -> WordElement:
    """Gamma_n = n! sum_{w in N_n} C^w u^w."""
    _check_gamma(n)
    return _gamma_closed(n)


@lru_cache(maxsize=None)
def _gamma_closed(n):
    f = factorial(n)
    return WordElement({w: f * c_coefficient(w) for w in compositions_of(n)})


@lru_cache(maxsize=None)
def gamma_coefficient(m: int, w: tuple) -> int:
    """<delta_m, b'_{n_1} ... b'_{n_r}> by peeling off the first letter.

    Only delta_{n_1} (x) delta_{m-n_1} in the bilinear part pairs with
    b'_{n_1} (x) (b'_{n_2} ... b'_{n_r}), with coefficient C(m, n_1 + 1);
    <b'_n, delta_n> = (n+1)!.
    """
    if not w:
        return 0
    if len(w) == 1:
        return factorial(m + 1) if w[0] == m else 0
    n1 = w[0]
    if n1 >= m:
        return 0
    return binomial(m, n1 + 1) * factorial(n1 + 1) * gamma_coefficient(m - n1, w[1:])


def gamma_recursive(n: int) -> WordElement:
    _check_gamma(n)
    return WordElement({w: gamma_coefficient(n, w) for w in compositions_of(n)})


def gamma(n: int, route: str = "closed") -> WordElement:
    if route == "closed":
        return gamma_closed(n)
    if route == "recursive":
        return gamma_recursive(n)
    raise DomainError(f"unknown route {route!r}; choose from {', '.join(GAMMA_ROUTES)}")


def _check_gamma(n):
    if n < 1:
        raise DomainError(f"Gamma_{n}: n must be >= 1")
    check_cap("gamma", n)


def rho_t(p) -> WordElement:
    """Image of a delta-polynomial in the shuffle algebra (delta_m -> Gamma_m)."""
    total = WordElement()
    for m, c in Polynomial.coerce(p).items():
        total = total + _rho_mono(m) * c
    return total


@lru_cache(maxsize=None)
def _rho_mono(m):
    out = WordElement.one()
    for g, e in m:
        if g.family != "delta":
            raise DomainError(f"rho_t is defined on delta-polynomials, got {g}")
        for _ in range(e):
            out = out * _gamma_closed(g.index)
    return out


def rho_t_tensor(t: TensorElement) -> WordTensor:
    out = {}
    for (l, r), c in t.items():
        for u, cu in _rho_mono(l).items():
            for v, cv in _rho_mono(r).items():
                out[(u, v)] = out.get((u, v), 0) + c * cu * cv
    return WordTensor(out)


@dataclass
class EmbeddingReport:
    n: int
    passed: bool
    mismatches: list

    def to_json(self):
        return {"n": self.n, "passed": self.passed, "mismatches": self.mismatches}


def check_hopf_embedding(n: int) -> EmbeddingReport:
    """Compare deconcatenation(Gamma_n) with (rho_t (x) rho_t)(Delta delta_n)."""
    from .cm import coproduct_delta

    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    check_cap("embedding", n)
    lhs = deconcatenate(gamma_closed(n))
    rhs = rho_t_tensor(coproduct_delta(n, "subst"))
    keys = set(k for k, _ in lhs.items()) | set(k for k, _ in rhs.items())
    bad = [
        {"left": list(u), "right": list(v), "deconcatenation": format_rational(lhs[(u, v)]), "pullback": format_rational(rhs[(u, v)])}
        for (u, v) in sorted(keys)
        if lhs[(u, v)] != rhs[(u, v)]
    ]
    return EmbeddingReport(n, not bad, bad[:5])


def delta_monomials_of_degree(d: int) -> list:
    out = []

    def rec(rem, largest, acc):
        if rem == 0:
            counts = {}
            for p in acc:
                counts[p] = counts.get(p, 0) + 1
            out.append(tuple(sorted((Generator("delta", p), e) for p, e in counts.items())))
            return
        for p in range(min(rem, largest), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(d, d, [])
    return out


def coproduct_delta_shuffle(n: int) -> TensorElement:
    """Delta delta_n recovered from deconcatenation of Gamma_n.

    For each bidegree (i, n-i) the deconcatenation component is expanded in
    the images rho_t(L) (x) rho_t(R) of delta-monomials, by exact linear solve;
    injectivity of rho_t makes the expansion unique.
    """
    check_cap("gamma", n)
    lhs = deconcatenate(_gamma_closed(n))
    terms = {}
    for i in range(n + 1):
        target = {(u, v): c for (u, v), c in lhs.items() if sum(u) == i}
        lefts = delta_monomials_of_degree(i) if i else [()]
        rights = delta_monomials_of_degree(n - i) if n - i else [()]
        cols = [(l, r) for l in lefts for r in rights]
        images = []
        for l, r in cols:
            img = {}
            for u, cu in _rho_mono(l).items():
                for v, cv in _rho_mono(r).items():
                    img[(u, v)] = cu * cv
            images.append(img)
        rows_keys = sorted(set(target) | {k for img in images for k in img})
        rows = [[img.get(k, 0) for img in images] for k in rows_keys]
        rhs = [target.get(k, 0) for k in rows_keys]
        sol = solve(rows, rhs, len(cols))
        if sol is None:
            raise FdbError(f"deconcatenation of Gamma_{n} is not in the image at bidegree ({i}, {n - i})")
        for (l, r), c in zip(cols, sol):
            if c:
                terms[(l, r)] = c
    return TensorElement(terms)

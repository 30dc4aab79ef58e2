"""The Faa di Bruno Hopf algebra on the generators a_2, a_3, ... (a_1 = 1).

Coproduct, counit and antipode, a Hopf-axiom checker, characters with
their convolution, and an exact solver for the primitive subspace.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import _type_vectors, fdb_multinomial, format_rational
from .config import check_cap
from .errors import DomainError, ShapeMismatchError
from .linalg import nullspace, rref
from .partitions import bell_partial
from .poly import Generator, Polynomial, TensorElement, a, mono_degree
from .series import ExpSeries


def _check_index(n):
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"a_{n}: index must be >= 2 (a_1 = 1 is not a generator)")
    check_cap("coproduct", n)


def coproduct(n: int) -> TensorElement:
    """Delta a_n = sum_k sum_lambda <n; lambda; k> a_1^l1 ... a_n^ln (x) a_k."""
    _check_index(n)
    return _coproduct(n)


@lru_cache(maxsize=None)
def _coproduct(n):
    terms = {}
    for k in range(1, n + 1):
        right = ((Generator("a", k), 1),) if k > 1 else ()
        for tv in _type_vectors(n, k):
            left = tuple((Generator("a", i), lam) for i, lam in enumerate(tv.entries, 1) if lam and i > 1)
            terms[(left, right)] = fdb_multinomial(tv)
    return TensorElement(terms)


@lru_cache(maxsize=None)
def _coproduct_monomial(m):
    result = TensorElement.one()
    for g, e in m:
        if g.family != "a":
            raise DomainError(f"coproduct is defined on the a-family, got {g}")
        result = result * _coproduct(g.index) ** e
    return result


def coproduct_poly(p, coproduct_fn=None) -> TensorElement:
    """Multiplicative extension of the coproduct to any polynomial in the a_n."""
    p = Polynomial.coerce(p)
    total = TensorElement()
    for m, c in p.items():
        if coproduct_fn is None:
            t = _coproduct_monomial(m)
        else:
            t = TensorElement.one()
            for g, e in m:
                t = t * coproduct_fn(g.index) ** e
        total = total + t * c
    return total


def counit(p) -> Fraction:
    return Polynomial.coerce(p).constant_term()


def antipode(n: int) -> Polynomial:
    """S(a_n) = sum_{k=1}^{n-1} (-1)^k B_{n-1+k,k}(0, a_2, a_3, ...)."""
    _check_index(n)
    return _antipode_closed(n)


@lru_cache(maxsize=None)
def _antipode_closed(n):
    args = [Polynomial.zero()] + [a(i) for i in range(2, n + 1)]
    total = Polynomial()
    for k in range(1, n):
        total = total + bell_partial(n - 1 + k, k, args) * (-1) ** k
    return total


def antipode_recursive(n: int) -> Polynomial:
    """S(a_n) = -a_n - sum S(x') x'' over the proper terms of Delta a_n."""
    _check_index(n)
    return _antipode_rec(n)


@lru_cache(maxsize=None)
def _antipode_rec(n):
    total = -a(n)
    for (l, r), c in _coproduct(n).items():
        if not l or not r:
            continue
        total = total - _antipode_mono(l, _antipode_rec) * Polynomial.monomial(r) * c
    return total


def _antipode_mono(m, s_gen):
    out = Polynomial.one()
    for g, e in m:
        out = out * s_gen(g.index) ** e
    return out


def antipode_poly(p, antipode_fn=None) -> Polynomial:
    """S extended as an algebra morphism (F is commutative)."""
    s_gen = antipode_fn or _antipode_closed
    total = Polynomial()
    for m, c in Polynomial.coerce(p).items():
        total = total + _antipode_mono(m, s_gen) * c
    return total


@dataclass
class HopfReport:
    passed: bool
    checked: list = field(default_factory=list)
    counterexample: dict | None = None

    def to_json(self):
        return {"passed": self.passed, "checked": self.checked, "counterexample": self.counterexample}


def _triple_left(t, cop):
    # (Delta (x) id) applied to a TensorElement; triples keyed (l1, l2, r)
    out = {}
    for (l, r), c in t.items():
        for (l1, l2), c2 in _coproduct_via(l, cop).items():
            k = (l1, l2, r)
            out[k] = out.get(k, 0) + c * c2
    return {k: v for k, v in out.items() if v}


def _triple_right(t, cop):
    out = {}
    for (l, r), c in t.items():
        for (r1, r2), c2 in _coproduct_via(r, cop).items():
            k = (l, r1, r2)
            out[k] = out.get(k, 0) + c * c2
    return {k: v for k, v in out.items() if v}


def _coproduct_via(m, cop):
    t = TensorElement.one()
    for g, e in m:
        t = t * cop(g.index) ** e
    return t


def check_hopf_axioms(N: int, coproduct_fn=None, antipode_fn=None) -> HopfReport:
    """Check coassociativity, counit laws and both antipode laws on a_2..a_N.

    ``coproduct_fn``/``antipode_fn`` replace the built-in maps (n -> value),
    which is how negative controls are run.
    """
    cop = coproduct_fn or _coproduct
    sfn = antipode_fn or _antipode_closed
    report = HopfReport(True)
    for n in range(2, N + 1):
        check_cap("coproduct", n)
        d = cop(n)
        gen = a(n)
        checks = [
            ("coassociativity", lambda: _triple_left(d, cop) == _triple_right(d, cop)),
            ("left counit", lambda: _leg_sum(d, lambda l: Polynomial.monomial(l).constant_term(), right=True) == gen),
            ("right counit", lambda: _leg_sum(d, lambda r: Polynomial.monomial(r).constant_term(), right=False) == gen),
            ("left antipode", lambda: _mult(d, lambda l: _antipode_mono(l, sfn), None) == 0),
            ("right antipode", lambda: _mult(d, None, lambda r: _antipode_mono(r, sfn)) == 0),
        ]
        for name, test in checks:
            ok = test()
            report.checked.append({"axiom": name, "n": n, "passed": ok})
            if not ok and report.passed:
                report.passed = False
                report.counterexample = {"axiom": name, "n": n, "coproduct": str(d)}
    return report


def _leg_sum(t, eps, right):
    # (eps (x) id) when right=True keeps the right leg, else (id (x) eps)
    total = Polynomial()
    for (l, r), c in t.items():
        if right:
            total = total + Polynomial.monomial(r) * (c * eps(l))
        else:
            total = total + Polynomial.monomial(l) * (c * eps(r))
    return total


def _mult(t, left_fn, right_fn):
    total = Polynomial()
    for (l, r), c in t.items():
        lp = left_fn(l) if left_fn else Polynomial.monomial(l)
        rp = right_fn(r) if right_fn else Polynomial.monomial(r)
        total = total + lp * rp * c
    return total


@dataclass(frozen=True)
class Character:
    """Algebra morphism F -> Q, given by its values f_n on a_2, ..., a_N.

    Matches the unital exponential series t + sum f_n t^n/n! of order N.
    """

    order: int
    values: tuple  # (f_2, ..., f_N)

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.order - 1:
            raise ShapeMismatchError(f"character of order {self.order} needs {self.order - 1} values")
        object.__setattr__(self, "values", vals)

    @classmethod
    def identity(cls, order):
        return cls(order, (0,) * (order - 1))

    @classmethod
    def from_series(cls, f: ExpSeries):
        if not f.unital:
            raise DomainError("characters correspond to series with f_1 = 1")
        return cls(f.order, f.coeffs[1:])

    def to_series(self) -> ExpSeries:
        return ExpSeries((1,) + self.values)

    def value(self, n):
        if n == 1:
            return Fraction(1)
        if not 2 <= n <= self.order:
            raise DomainError(f"character of order {self.order} has no value on a_{n}")
        return self.values[n - 2]

    def __call__(self, p) -> Fraction:
        return Polynomial.coerce(p).evaluate(lambda g: self.value(g.index))

    def inverse(self) -> "Character":
        """f o S, the convolution inverse."""
        return Character(self.order, tuple(self(_antipode_closed(n)) for n in range(2, self.order + 1)))

    def __str__(self):
        return f"Character({', '.join(format_rational(v) for v in self.values)})"


def convolve(f: Character, g: Character) -> Character:
    """(f * g)(a_n) = m(f (x) g) Delta a_n; equals the coefficients of g o f."""
    if f.order != g.order:
        raise ShapeMismatchError(f"character orders differ: {f.order} vs {g.order}")
    vals = []
    for n in range(2, f.order + 1):
        d = _coproduct(n)
        vals.append(d.contract(lambda l: f(Polynomial.monomial(l)), lambda r: g(Polynomial.monomial(r))))
    return Character(f.order, tuple(vals))


def monomials_of_degree(d: int) -> list:
    """All a-monomials of degree d (integer partitions of d, part p <-> a_{p+1})."""
    out = []

    def rec(rem, largest, acc):
        if rem == 0:
            counts = {}
            for p in acc:
                counts[p] = counts.get(p, 0) + 1
            out.append(tuple(sorted((Generator("a", p + 1), e) for p, e in counts.items())))
            return
        for p in range(min(rem, largest), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(d, d, [])
    return out


def primitive_space(d: int) -> list:
    """Basis of homogeneous degree-d primitives, found by exact linear algebra.

    The basis is in reduced echelon form with monomials having fewer factors
    first, so e.g. degree 2 gives ``[a_3 - (3/2)a_2^2]``.
    """
    if d < 1:
        raise DomainError(f"degree must be >= 1, got {d}")
    check_cap("primitives", d)
    monos = sorted(monomials_of_degree(d), key=lambda m: (sum(e for _, e in m), m))
    defects = []
    for m in monos:
        p = Polynomial.monomial(m)
        defects.append(coproduct_poly(p) - p.tensor(1) - Polynomial.one().tensor(p))
    keys = sorted({k for t in defects for k, _ in t.items()})
    rows = [[t.terms.get(k, 0) for t in defects] for k in keys]
    basis = nullspace(rows, len(monos)) if rows else [[Fraction(int(i == j)) for i in range(len(monos))] for j in range(len(monos))]
    if not basis:
        return []
    red, _ = rref(basis, len(monos))
    return [Polynomial({m: c for m, c in zip(monos, v)}) for v in red]


def is_primitive(p) -> bool:
    p = Polynomial.coerce(p)
    return coproduct_poly(p) == p.tensor(1) + Polynomial.one().tensor(p)


def grading_respected(t: TensorElement, d: int) -> bool:
    return all(mono_degree(l) + mono_degree(r) == d for (l, r), _ in t.items())

"""The graded dual of F: functionals on monomials in the a_n.

A :class:`DualFunctional` is a finite combination of dual-basis elements
``(a_{m_1} ... a_{m_r})'``, keyed by the sorted index tuple ``(m_1, ..., m_r)``.
Functionals multiply by the duality recipe <phi psi, p> = <phi (x) psi, Delta p>.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import binomial, factorial, format_rational
from .config import check_cap
from .errors import DomainError, FamilyMismatchError
from .hopf import _coproduct_monomial, monomials_of_degree
from .poly import Generator, Polynomial


def key_of(m) -> tuple:
    """Sorted a-index tuple of an a-monomial, e.g. a_2^2 a_3 -> (2, 2, 3)."""
    return tuple(sorted(g.index for g, e in m for _ in range(e)))


def key_degree(key) -> int:
    return sum(i - 1 for i in key)


def _key_to_mono(key):
    counts = {}
    for i in key:
        counts[i] = counts.get(i, 0) + 1
    return tuple(sorted((Generator("a", i), e) for i, e in counts.items()))


class DualFunctional:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for key, c in (coeffs or {}).items():
            key = tuple(sorted(key))
            if any(i < 2 for i in key):
                raise DomainError(f"dual basis key {key}: a-indices must be >= 2")
            clean[key] = clean.get(key, 0) + Fraction(c)
        self._coeffs = {k: c for k, c in clean.items() if c}

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, key):
        return self._coeffs.get(tuple(sorted(key)), Fraction(0))

    def __bool__(self):
        return bool(self._coeffs)

    def degrees(self):
        return sorted({key_degree(k) for k in self._coeffs})

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return DualFunctional(out)

    def __neg__(self):
        return DualFunctional({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return DualFunctional({k: c * other for k, c in self._coeffs.items()})
        if not isinstance(other, DualFunctional):
            return NotImplemented
        return _product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, DualFunctional):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs, key=lambda k: (key_degree(k), len(k), k)):
            c = self._coeffs[k]
            name = "1'" if not k else (f"a'_{k[0]}" if len(k) == 1 else "(" + "".join(f"a_{i}" for i in k) + ")'")
            coeff = "" if c == 1 else ("-" if c == -1 else format_rational(c))
            parts.append(f"{coeff}{name}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self):
        keys = sorted(self._coeffs, key=lambda k: (key_degree(k), len(k), k))
        return [{"dual_of": list(k), "coeff": format_rational(self._coeffs[k])} for k in keys]


def counit_functional():
    return DualFunctional({(): 1})


def a_prime(n: int) -> DualFunctional:
    """Primitive functional with <a'_n, a_m> = [n == m], zero on products."""
    if n < 2:
        raise DomainError(f"a'_{n}: index must be >= 2")
    return DualFunctional({(n,): 1})


def monomial_dual(*indices) -> DualFunctional:
    return DualFunctional({tuple(indices): 1})


def b_prime(n: int) -> DualFunctional:
    """b'_n = (n+1)! a'_{n+1}."""
    if n < 1:
        raise DomainError(f"b'_{n}: index must be >= 1")
    return a_prime(n + 1) * factorial(n + 1)


def _by_degree(phi):
    out = {}
    for k, c in phi.items():
        out.setdefault(key_degree(k), {})[k] = c
    return out


def _product(phi, psi):
    left, right = _by_degree(phi), _by_degree(psi)
    out = {}
    for d1, lc in left.items():
        for d2, rc in right.items():
            d = d1 + d2
            check_cap("dual_grade", d)
            monos = monomials_of_degree(d) if d else [()]
            for m in monos:
                val = Fraction(0)
                for (l, r), c in _coproduct_monomial(m).items():
                    lv = lc.get(key_of(l))
                    if lv:
                        rv = rc.get(key_of(r))
                        if rv:
                            val += c * lv * rv
                if val:
                    k = key_of(m)
                    out[k] = out.get(k, 0) + val
    return DualFunctional(out)


def pair(phi: DualFunctional, p) -> Fraction:
    """<phi, p>; polynomials in the delta_n are first rewritten in the a_n."""
    p = Polynomial.coerce(p)
    if p.family == "delta":
        from .cm import delta_to_a

        p = delta_to_a(p)
    elif p.family not in (None, "a"):
        raise FamilyMismatchError(f"dual functionals pair with a- or delta-polynomials, got family {p.family!r}")
    return sum((c * phi[key_of(m)] for m, c in p.items()), Fraction(0))


def dual_product(n: int, m: int) -> DualFunctional:
    """a'_n a'_m computed from the coproduct."""
    return a_prime(n) * a_prime(m)


def dual_product_formula(n: int, m: int) -> DualFunctional:
    """C(m-1+n, n) a'_{n+m-1} + (1 + [n == m]) (a_n a_m)'."""
    return a_prime(n + m - 1) * binomial(m - 1 + n, n) + monomial_dual(n, m) * (2 if n == m else 1)


def bracket(phi: DualFunctional, psi: DualFunctional) -> DualFunctional:
    return phi * psi - psi * phi


def b_bracket(n: int, m: int) -> DualFunctional:
    """[b'_n, b'_m] from the duality recipe."""
    return bracket(b_prime(n), b_prime(m))


def dual_basis_element(key) -> DualFunctional:
    return DualFunctional({tuple(key): 1})


def functional_from_monomials(pairs) -> DualFunctional:
    """Build from (a-monomial, coefficient) pairs."""
    return DualFunctional({key_of(m): c for m, c in pairs})


def monomial_of_key(key):
    return Polynomial.monomial(_key_to_mono(key))

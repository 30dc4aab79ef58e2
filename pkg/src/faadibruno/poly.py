"""Sparse polynomials over Q in graded generator families, and their tensors.

Four generator families are used:

* ``a``     -- the coordinates a_n (n >= 2; a_1 is identified with 1), degree n-1
* ``delta`` -- the Connes-Moscovici coordinates delta_n (n >= 1), degree n
* ``Pi``    -- the coloured generators Pi^r_{nbar} (|nbar| >= 2), degree |nbar|-1
* ``x``     -- abstract Bell-polynomial arguments x_n (n >= 1), weight n

A monomial is a sorted tuple of ``(Generator, exponent)`` pairs, all from one
family; the empty tuple is the unit monomial, shared by every family.
"""
from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import NamedTuple

from .arith import format_rational, parse_rational
from .errors import DomainError, FamilyMismatchError, MissingImageError

FAMILIES = ("a", "delta", "Pi", "x")
_DISPLAY = {"a": "a", "delta": "δ", "Pi": "Π", "x": "x"}


class Generator(NamedTuple):
    family: str
    index: object

    def __str__(self):
        if self.family == "Pi":
            r, nbar = self.index
            return f"Π^{r}_({','.join(map(str, nbar))})"
        return f"{_DISPLAY[self.family]}_{self.index}"


def make_generator(family, index) -> Generator:
    if family == "a":
        if not isinstance(index, int) or index < 2:
            raise DomainError(f"a_{index}: index must be >= 2 (a_1 is identified with 1)")
    elif family in ("delta", "x"):
        if not isinstance(index, int) or index < 1:
            raise DomainError(f"{family}_{index}: index must be >= 1")
    elif family == "Pi":
        r, nbar = index
        nbar = tuple(int(v) for v in nbar)
        if r < 1 or r > len(nbar) or any(v < 0 for v in nbar):
            raise DomainError(f"Pi^{r}_{nbar}: bad colour or multi-index")
        if sum(nbar) < 2:
            raise DomainError(f"Pi^{r}_{nbar}: weight-1 generators are constants")
        index = (int(r), nbar)
    else:
        raise DomainError(f"unknown generator family {family!r}")
    return Generator(family, index)


def gen_degree(g: Generator) -> int:
    if g.family == "a":
        return g.index - 1
    if g.family == "Pi":
        return sum(g.index[1]) - 1
    return g.index


def mono_degree(m) -> int:
    return sum(gen_degree(g) * e for g, e in m)


def mono_family(m):
    return m[0][0].family if m else None


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for g, e in m2:
        d[g] = d.get(g, 0) + e
    return tuple(sorted(d.items()))


def mono_str(m) -> str:
    if not m:
        return "1"
    return "".join(str(g) if e == 1 else f"{g}^{e}" for g, e in m)


def _mono_key(m):
    return (mono_degree(m), sum(e for _, e in m), tuple((g.index, e) for g, e in m))


def _coerce_scalar(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    return None


class Polynomial:
    """Immutable sparse polynomial: a map monomial -> nonzero Fraction."""

    __slots__ = ("_terms", "_family", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            m = tuple(m)
            clean[m] = clean.get(m, 0) + c
        self._terms = {m: c for m, c in clean.items() if c != 0}
        families = set()
        for m in self._terms:
            if m:
                fams = {g.family for g, _ in m}
                if len(fams) > 1:
                    raise FamilyMismatchError(f"monomial {mono_str(m)} mixes families")
                families |= fams
        if len(families) > 1:
            raise FamilyMismatchError(f"polynomial mixes generator families {sorted(families)}")
        self._family = families.pop() if families else None
        self._hash = None

    # constructors

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def monomial(cls, m, c=1):
        return cls({tuple(m): c})

    @classmethod
    def gen(cls, family, index):
        return cls({((make_generator(family, index), 1),): 1})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Polynomial):
            return value
        c = _coerce_scalar(value)
        if c is None:
            raise TypeError(f"cannot coerce {value!r} to a polynomial")
        return cls.const(c)

    # inspection

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def family(self):
        return self._family

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return all(not m for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def coeff(self, m) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def generators(self):
        return sorted({g for m in self._terms for g, _ in m})

    def degrees(self):
        return sorted({mono_degree(m) for m in self._terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def homogeneous_component(self, d):
        return Polynomial({m: c for m, c in self._terms.items() if mono_degree(m) == d})

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: _mono_key(mc[0]))

    # arithmetic

    def _check_family(self, other):
        if self._family and other._family and self._family != other._family:
            raise FamilyMismatchError(f"cannot combine families {self._family!r} and {other._family!r}")

    def __add__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        self._check_family(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = _coerce_scalar(other)
        if c is not None:
            return Polynomial({m: c * v for m, v in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_family(other)
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"bad exponent {e!r}")
        result = Polynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        c = _coerce_scalar(other)
        if c is not None:
            return self._terms == ({(): c} if c else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # morphisms

    def substitute(self, images):
        """Apply the ring morphism sending each generator g to ``images[g]``.

        ``images`` is a mapping or a callable; images may be polynomials or
        scalars.
        """
        lookup = images if callable(images) else _mapping_lookup(images)
        cache = {}

        def power(g, e):
            key = (g, e)
            if key not in cache:
                if e == 1:
                    cache[key] = Polynomial.coerce(lookup(g))
                else:
                    cache[key] = power(g, e - 1) * power(g, 1)
            return cache[key]

        total = Polynomial()
        for m, c in self._terms.items():
            term = Polynomial.const(c)
            for g, e in m:
                term = term * power(g, e)
            total = total + term
        return total

    def evaluate(self, values) -> Fraction:
        """Scalar value under generator -> scalar assignment (a character)."""
        lookup = values if callable(values) else _mapping_lookup(values)
        cache = {}
        total = Fraction(0)
        for m, c in self._terms.items():
            for g, e in m:
                if g not in cache:
                    cache[g] = Fraction(lookup(g))
                c *= cache[g] ** e
            total += c
        return total

    def tensor(self, other) -> "TensorElement":
        other = Polynomial.coerce(other)
        return TensorElement(
            {(m1, m2): c1 * c2 for m1, c1 in self._terms.items() for m2, c2 in other._terms.items()}
        )

    # rendering

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not m:
                body = format_rational(mag)
            elif mag == 1:
                body = mono_str(m)
            elif mag.denominator == 1:
                body = f"{mag.numerator}{mono_str(m)}"
            else:
                body = f"({format_rational(mag)}){mono_str(m)}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"

    def to_json(self):
        return [{"coeff": format_rational(c), "mono": mono_to_json(m)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data):
        terms = {}
        for i, item in enumerate(data):
            try:
                m = mono_from_json(item["mono"])
                c = parse_rational(str(item["coeff"]))
            except KeyError as exc:
                raise DomainError(f"polynomial term {i}: missing field {exc.args[0]!r}") from None
            terms[m] = terms.get(m, 0) + c
        return cls(terms)


def _mapping_lookup(mapping):
    def lookup(g):
        try:
            return mapping[g]
        except KeyError:
            raise MissingImageError(f"no image given for generator {g}") from None

    return lookup


def mono_to_json(m):
    out = []
    for g, e in m:
        index = [g.index[0], list(g.index[1])] if g.family == "Pi" else g.index
        out.append([g.family, index, e])
    return out


def mono_from_json(data):
    d = {}
    for entry in data:
        family, index, e = entry
        if family == "Pi":
            index = (index[0], tuple(index[1]))
        g = make_generator(family, index)
        if not isinstance(e, int) or e < 1:
            raise DomainError(f"bad exponent {e!r} for {g}")
        d[g] = d.get(g, 0) + e
    return tuple(sorted(d.items()))


# convenience constructors


def a(n):
    """Polynomial a_n; a_1 is the constant 1."""
    if n == 1:
        return Polynomial.one()
    return Polynomial.gen("a", n)


def delta(n):
    return Polynomial.gen("delta", n)


def x(n):
    return Polynomial.gen("x", n)


def pi(r, nbar):
    """Pi^r_{nbar}; weight-one generators collapse to the constant [r == s]."""
    nbar = tuple(nbar)
    if sum(nbar) == 1:
        return Polynomial.const(1 if nbar[r - 1] == 1 else 0)
    return Polynomial.gen("Pi", (r, nbar))


_FACTOR = re.compile(r"(a|δ|d|x)_\{?(\d+)\}?(?:\^\{?(\d+)\}?)?")
_COEFF = re.compile(r"\(?(\d+)(?:/(\d+))?\)?")
_FAMILY_OF = {"a": "a", "δ": "delta", "d": "delta", "x": "x"}


def parse_poly(text: str) -> Polynomial:
    """Parse strings like ``"a_5 - 3a_3^2 - 4a_2a_4 + (3/2)a_2^2"``."""
    s = text.replace(" ", "").replace("*", "").replace("−", "-")
    if not s:
        raise DomainError("empty polynomial")
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start:
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    total = Polynomial()
    for t in terms:
        sign = -1 if t.startswith("-") else 1
        t = t.lstrip("+-")
        coeff = Fraction(sign)
        cm = _COEFF.match(t)
        if cm and cm.group(0):
            coeff *= Fraction(int(cm.group(1)), int(cm.group(2) or 1))
            t = t[cm.end():]
        term = Polynomial.const(coeff)
        pos = 0
        for fm in _FACTOR.finditer(t):
            if fm.start() != pos:
                break
            fam = _FAMILY_OF[fm.group(1)]
            n = int(fm.group(2))
            g = a(n) if fam == "a" else Polynomial.gen(fam, n)
            term = term * g ** int(fm.group(3) or 1)
            pos = fm.end()
        if pos != len(t):
            raise DomainError(f"cannot parse term {t!r} in {text!r}")
        total = total + term
    return total


class TensorElement:
    """Immutable element of F (x) F: a map (left monomial, right monomial) -> Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for (l, r), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = (tuple(l), tuple(r))
                clean[key] = clean.get(key, 0) + c
        self._terms = {k: c for k, c in clean.items() if c != 0}
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({((), ()): 1})

    @classmethod
    def from_pairs(cls, pairs):
        """Sum of ``left (x) right`` (times an optional third coefficient)."""
        total = cls()
        for pair in pairs:
            left, right = Polynomial.coerce(_maybe_parse(pair[0])), Polynomial.coerce(_maybe_parse(pair[1]))
            t = left.tensor(right)
            if len(pair) > 2:
                t = t * pair[2]
            total = total + t
        return total

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(out)

    def __neg__(self):
        return TensorElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        c = _coerce_scalar(other)
        if c is not None:
            return TensorElement({k: c * v for k, v in self._terms.items()})
        if not isinstance(other, TensorElement):
            return NotImplemented
        out = {}
        for (l1, r1), c1 in self._terms.items():
            for (l2, r2), c2 in other._terms.items():
                k = (mono_mul(l1, l2), mono_mul(r1, r2))
                out[k] = out.get(k, 0) + c1 * c2
        return TensorElement(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = TensorElement.one()
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_legs(self, left_fn, right_fn):
        """Apply monomial -> Polynomial maps to each leg and re-expand."""
        lcache, rcache = {}, {}
        total = TensorElement()
        for (l, r), c in self._terms.items():
            if l not in lcache:
                lcache[l] = left_fn(l)
            if r not in rcache:
                rcache[r] = right_fn(r)
            total = total + lcache[l].tensor(rcache[r]) * c
        return total

    def contract(self, left_fn, right_fn) -> Fraction:
        """Sum of c * left_fn(l) * right_fn(r) over all terms."""
        return sum((c * left_fn(l) * right_fn(r) for (l, r), c in self._terms.items()), Fraction(0))

    def bidegree_component(self, i, j):
        return TensorElement(
            {(l, r): c for (l, r), c in self._terms.items() if mono_degree(l) == i and mono_degree(r) == j}
        )

    def right_grouped(self):
        """{right monomial: left Polynomial} -- the form used in displayed coproducts."""
        groups = {}
        for (l, r), c in self._terms.items():
            groups.setdefault(r, {})[l] = c
        return {r: Polynomial(ls) for r, ls in groups.items()}

    def __str__(self):
        if not self._terms:
            return "0"
        groups = self.right_grouped()
        order = sorted(groups, key=lambda r: (r != (), -mono_degree(r), _mono_key(r)))
        parts = []
        for r in order:
            left = groups[r]
            ls = str(left)
            if len(left) > 1:
                ls = f"({ls})"
            parts.append(f"{ls}⊗{mono_str(r)}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"TensorElement({self})"

    def to_json(self):
        items = sorted(self._terms.items(), key=lambda kc: (_mono_key(kc[0][0]), _mono_key(kc[0][1])))
        return [{"left": mono_to_json(l), "right": mono_to_json(r), "coeff": format_rational(c)} for (l, r), c in items]

    @classmethod
    def from_json(cls, data):
        terms = {}
        for i, item in enumerate(data):
            try:
                k = (mono_from_json(item["left"]), mono_from_json(item["right"]))
                c = parse_rational(str(item["coeff"]))
            except KeyError as exc:
                raise DomainError(f"tensor term {i}: missing field {exc.args[0]!r}") from None
            terms[k] = terms.get(k, 0) + c
        return cls(terms)


def _maybe_parse(v):
    return parse_poly(v) if isinstance(v, str) else v

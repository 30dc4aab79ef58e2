"""Exact scalars and the combinatorial coefficients used everywhere else.

Scalars are :class:`fractions.Fraction` throughout; this module adds the
factorial/binomial helpers, partition *type vectors* and the Faa di Bruno
multinomial counting set partitions of a given type.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

Rational = Fraction


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            den = int(den)
            if den <= 0:
                raise ValueError
            return Fraction(int(num), den)
        return Fraction(int(text))
    except ValueError:
        raise DomainError(f"malformed rational {text!r}, expected 'p' or 'p/q' with q > 0") from None


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """n choose k, and 0 whenever k < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class TypeVector:
    """Block-size census ``(lambda_1, ..., lambda_n)`` of a partition of an n-set.

    ``entries[i-1]`` counts blocks of size ``i``; the full length-n vector is
    stored, trailing zeros included.
    """

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise DomainError("type vector must have positive length")
        if any(e < 0 for e in entries):
            raise DomainError(f"negative entry in type vector {entries}")
        if sum(i * e for i, e in enumerate(entries, 1)) != len(entries):
            raise DomainError(f"type vector {entries} does not satisfy sum i*lambda_i = n")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def k(self) -> int:
        return sum(self.entries)

    def __getitem__(self, i):
        """``tv[i]`` is lambda_i (1-based); 0 past the end."""
        if 1 <= i <= len(self.entries):
            return self.entries[i - 1]
        return 0

    def trimmed(self) -> tuple:
        e = list(self.entries)
        while e and e[-1] == 0:
            e.pop()
        return tuple(e)

    def __str__(self):
        return "(" + ",".join(map(str, self.trimmed())) + ")"

    def to_json(self):
        return list(self.entries)

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data))

    @classmethod
    def from_block_sizes(cls, sizes, n=None):
        n = sum(sizes) if n is None else n
        entries = [0] * n
        for s in sizes:
            entries[s - 1] += 1
        return cls(tuple(entries))


def fdb_multinomial(tv: TypeVector) -> int:
    """n! / (prod lambda_i! * prod (i!)^lambda_i): set partitions of type tv."""
    return _fdb_multinomial(tv.entries)


@lru_cache(maxsize=None)
def _fdb_multinomial(entries):
    den = 1
    for i, lam in enumerate(entries, 1):
        den *= math.factorial(lam) * math.factorial(i) ** lam
    num = math.factorial(len(entries))
    q, r = divmod(num, den)
    assert r == 0, entries
    return q


def _partitions_into(n, k, largest):
    # integer partitions of n into exactly k parts, each <= largest, non-increasing
    if k == 0:
        if n == 0:
            yield ()
        return
    if n < k:
        return
    for first in range(min(largest, n - k + 1), 0, -1):
        if first * k < n:
            break
        for rest in _partitions_into(n - first, k - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _type_vectors(n, k):
    out = []
    for parts in _partitions_into(n, k, n):
        entries = [0] * n
        for p in parts:
            entries[p - 1] += 1
        out.append(tuple(entries))
    out.sort()
    return tuple(TypeVector(e) for e in out)


def enumerate_type_vectors(n: int, k: int | None = None) -> list:
    """All type vectors of an n-set, optionally with exactly k blocks.

    Ordered lexicographically on the vector (by block count first when k is
    omitted).
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if k is None:
        return [tv for kk in range(1, n + 1) for tv in _type_vectors(n, kk)]
    if k < 1 or k > n:
        return []
    return list(_type_vectors(n, k))

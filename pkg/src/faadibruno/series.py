"""Truncated exponential power series f(t) = sum_{n>=1} f_n t^n / n!.

Coefficients are stored in exponential normalization, i.e. f_n is the n-th
derivative at 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import as_rational, factorial, format_rational, parse_rational
from .errors import DomainError, NotUnitalError, ShapeMismatchError
from .partitions import bell_partial


@dataclass(frozen=True)
class ExpSeries:
    coeffs: tuple  # (f_1, ..., f_N)

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if not coeffs:
            raise DomainError("series order must be positive")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def unital(self) -> bool:
        return self.coeffs[0] == 1

    def __getitem__(self, n):
        """f_n, 1-based."""
        if not 1 <= n <= self.order:
            raise IndexError(n)
        return self.coeffs[n - 1]

    @classmethod
    def identity(cls, order):
        return cls((1,) + (0,) * (order - 1))

    @classmethod
    def from_ordinary(cls, coeffs):
        """From ordinary coefficients c_n of t^n (n = 1..N)."""
        return cls(tuple(Fraction(c) * factorial(n) for n, c in enumerate(coeffs, 1)))

    def ordinary(self):
        return tuple(c / factorial(n) for n, c in enumerate(self.coeffs, 1))

    def truncate(self, order):
        return ExpSeries(self.coeffs[:order])

    def __str__(self):
        return "ExpSeries(" + ", ".join(format_rational(c) for c in self.coeffs) + ")"

    def to_json(self):
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise DomainError("series JSON must be an object with fields 'order' and 'coeffs'")
        for field in ("order", "coeffs"):
            if field not in data:
                raise DomainError(f"series JSON: missing field {field!r}")
        if not isinstance(data["coeffs"], list):
            raise DomainError("series JSON: field 'coeffs' must be a list")
        try:
            coeffs = tuple(parse_rational(str(c)) for c in data["coeffs"])
        except DomainError as exc:
            raise DomainError(f"series JSON: field 'coeffs': {exc}") from None
        if data["order"] != len(coeffs):
            raise DomainError(f"series JSON: field 'order' is {data['order']} but 'coeffs' has {len(coeffs)} entries")
        return cls(coeffs)


def _check_orders(f, g):
    if f.order != g.order:
        raise ShapeMismatchError(f"series orders differ: {f.order} vs {g.order}")


def compose(f: ExpSeries, g: ExpSeries) -> ExpSeries:
    """f o g via h_n = sum_k f_k B_{n,k}(g_1, ..., g_{n+1-k})."""
    _check_orders(f, g)
    N = f.order
    h = []
    for n in range(1, N + 1):
        h.append(sum((f[k] * bell_partial(n, k, g.coeffs) for k in range(1, n + 1) if f[k]), Fraction(0)))
    return ExpSeries(tuple(h))


def _cauchy(p, q, N):
    # ordinary coefficient lists indexed from t^0, truncated at t^N
    out = [Fraction(0)] * (N + 1)
    for i, pi in enumerate(p):
        if pi:
            for j in range(N + 1 - i):
                out[i + j] += pi * q[j]
    return out


def compose_oracle(f: ExpSeries, g: ExpSeries) -> ExpSeries:
    """f o g by plain truncated substitution and Cauchy products (no Bell polynomials)."""
    _check_orders(f, g)
    N = f.order
    gt = [Fraction(0)] + list(g.ordinary())
    power = [Fraction(1)] + [Fraction(0)] * N
    total = [Fraction(0)] * (N + 1)
    for k in range(1, N + 1):
        power = _cauchy(power, gt, N)
        ck = f[k] / factorial(k)
        if ck:
            total = [s + ck * p for s, p in zip(total, power)]
    return ExpSeries.from_ordinary(total[1:])


def revert(f: ExpSeries) -> ExpSeries:
    """Compositional inverse by Lagrange reversion:
    g_n = sum_{k=1}^{n-1} (-1)^k B_{n-1+k,k}(0, f_2, f_3, ...).
    """
    if not f.unital:
        raise NotUnitalError(f"reversion needs f_1 = 1, got f_1 = {format_rational(f[1])}")
    args = (Fraction(0),) + f.coeffs[1:]
    g = [Fraction(1)]
    for n in range(2, f.order + 1):
        g.append(sum(((-1) ** k * bell_partial(n - 1 + k, k, args) for k in range(1, n)), Fraction(0)))
    return ExpSeries(tuple(g))


def majorant_bound(A, B, C, D, n: int) -> Fraction:
    """E n! / F^n with E = AC/(A+D), F = BD/(A+D).

    Bounds |h_n| for h = f o g when |g_m| <= A m!/B^m and |f_k| <= C k!/D^k.
    """
    A, B, C, D = (as_rational(v) for v in (A, B, C, D))
    if min(A, B, C, D) <= 0:
        raise DomainError("majorant constants must be positive")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    E = A * C / (A + D)
    F = B * D / (A + D)
    return E * factorial(n) / F**n

"""Set partitions, partial Bell polynomials and Stirling numbers.

This is the combinatorial ground truth: the Faa di Bruno coproduct is
recomputed here straight from partition enumeration (``incidence_coproduct``)
without touching the Bell-polynomial formulas.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from .arith import TypeVector, _type_vectors, as_rational, factorial, fdb_multinomial, format_rational
from .config import check_cap
from .errors import DomainError
from .poly import Generator, Polynomial, TensorElement, x


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..n}; blocks sorted internally and ordered by minimum."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(not b for b in blocks):
            raise DomainError("empty block in set partition")
        flat = sorted(e for b in blocks for e in b)
        if flat != list(range(1, self.n + 1)):
            raise DomainError(f"blocks {blocks} do not partition 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    def __len__(self):
        return len(self.blocks)

    def refines(self, other: "SetPartition") -> bool:
        if self.n != other.n:
            return False
        owner = {e: i for i, b in enumerate(other.blocks) for e in b}
        return all(len({owner[e] for e in b}) == 1 for b in self.blocks)

    def __str__(self):
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    def to_json(self):
        return [list(b) for b in self.blocks]

    @classmethod
    def from_json(cls, data):
        blocks = [tuple(b) for b in data]
        return cls(sum(len(b) for b in blocks), tuple(blocks))


def iter_restricted_growth(n):
    """Restricted growth strings of length n, in lexicographic order."""
    if n == 0:
        yield ()
        return
    word = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(word)
            return
        for v in range(top + 2):
            word[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def iter_partitions(n):
    """All partitions of {1..n} as tuples of blocks (no cap)."""
    for rgs in iter_restricted_growth(n):
        blocks = [[] for _ in range(max(rgs) + 1)]
        for e, b in enumerate(rgs, 1):
            blocks[b].append(e)
        yield tuple(tuple(b) for b in blocks)


def enumerate_partitions(n: int) -> list:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    check_cap("partitions", n)
    return [SetPartition(n, blocks) for blocks in iter_partitions(n)]


def partition_type(p: SetPartition) -> TypeVector:
    return TypeVector.from_block_sizes([len(b) for b in p.blocks], p.n)


def bell_partial(n: int, k: int, args=None):
    """Partial exponential Bell polynomial B_{n,k}.

    With ``args=None`` the result is symbolic in x_1..x_{n+1-k}. Otherwise
    ``args`` supplies x_1, x_2, ... (at least n+1-k values); polynomial
    arguments give a Polynomial, scalar arguments a Fraction.
    """
    if n < 1 or k < 1 or k > n:
        raise DomainError(f"B_{{{n},{k}}} requires 1 <= k <= n")
    need = n + 1 - k
    if args is None:
        args = [x(i) for i in range(1, need + 1)]
    args = list(args)
    if len(args) < need:
        raise DomainError(f"B_{{{n},{k}}} needs {need} arguments, got {len(args)}")
    args = args[:need]
    symbolic = any(isinstance(v, Polynomial) for v in args)
    if not symbolic:
        vals = [as_rational(v) for v in args]
        total = Fraction(0)
        for tv in _type_vectors(n, k):
            term = Fraction(fdb_multinomial(tv))
            for i, lam in enumerate(tv.entries[:need]):
                if lam:
                    term *= vals[i] ** lam
                    if not term:
                        break
            total += term
        return total

    vals = [Polynomial.coerce(v) for v in args]
    powers = {}

    def power(i, lam):
        if (i, lam) not in powers:
            powers[(i, lam)] = vals[i] ** lam
        return powers[(i, lam)]

    total = Polynomial()
    for tv in _type_vectors(n, k):
        if any(lam and not vals[i] for i, lam in enumerate(tv.entries[:need])):
            continue
        term = Polynomial.const(fdb_multinomial(tv))
        for i, lam in enumerate(tv.entries[:need]):
            if lam:
                term = term * power(i, lam)
        total = total + term
    return total


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, by the usual recurrence."""
    if n < 0 or k < 0:
        raise DomainError(f"stirling2({n}, {k}) needs non-negative arguments")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell_number(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def groupoid_cardinality(M: int) -> Fraction:
    """Partial sum up to n = M of sum_k B_{n,k}(1,...,1)/n!  (tends to e^(e-1))."""
    if M < 0:
        raise DomainError(f"M must be >= 0, got {M}")
    total = Fraction(1)
    for n in range(1, M + 1):
        count = sum(bell_partial(n, k, [1] * (n + 1 - k)) for k in range(1, n + 1))
        total += Fraction(count, factorial(n))
    return total


def exp_e_minus_one(digits=40) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 5
        e = Decimal(1).exp()
        return +(e - 1).exp()


def cardinality_report(M: int, digits=30) -> dict:
    s = groupoid_cardinality(M)
    with localcontext() as ctx:
        ctx.prec = digits
        dec = Decimal(s.numerator) / Decimal(s.denominator)
        target = +exp_e_minus_one(digits)
        err = abs(target - dec)
    return {
        "upto": M,
        "partial_sum": format_rational(s),
        "decimal": str(dec),
        "target": str(target),
        "abs_error": f"{err:.6e}",
    }


def refinement_interval_vector(pi: SetPartition, tau: SetPartition) -> TypeVector:
    """Type of the interval [pi, tau]: lambda_i tau-blocks are unions of i pi-blocks."""
    if not pi.refines(tau):
        raise DomainError(f"{pi} does not refine {tau}")
    owner = {e: j for j, b in enumerate(tau.blocks) for e in b}
    counts = Counter(owner[b[0]] for b in pi.blocks)
    return TypeVector.from_block_sizes(list(counts.values()), len(pi.blocks))


def incidence_coproduct(n: int) -> TensorElement:
    """Coproduct of the interval class Pi_n, summed over all partitions of an n-set.

    Rendered in the a-coordinates (Pi_m <-> a_m, Pi_1 = a_1 = 1).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    check_cap("incidence", n)
    counts = Counter()
    for blocks in iter_partitions(n):
        sizes = tuple(sorted(len(b) for b in blocks if len(b) > 1))
        counts[(sizes, len(blocks))] += 1
    terms = {}
    for (sizes, nblocks), c in counts.items():
        left = tuple(sorted(Counter(Generator("a", s) for s in sizes).items()))
        right = ((Generator("a", nblocks), 1),) if nblocks > 1 else ()
        terms[(left, right)] = c
    return TensorElement(terms)

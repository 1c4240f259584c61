"""Exact EGF arithmetic on count sequences.

A series ``S(x) = sum C_n x^n / n!`` is stored as its integer counts
``C_0..C_N``.  Products of EGFs become binomial convolutions of counts, so
every operation here stays in the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Sequence


class OrderMismatch(ValueError):
    pass


class ConstantTermError(ValueError):
    """Raised when Seq/Set/Cyc is applied to a class with a degree-0 object."""


@dataclass(frozen=True)
class CountSeq:
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        if not counts:
            raise ValueError("a count sequence needs at least C_0")
        for c in counts:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"counts must be integers, got {c!r}")
            if c < 0:
                raise ValueError(f"counts must be non-negative, got {c}")
        object.__setattr__(self, "counts", counts)

    @property
    def order(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n):
        return self.counts[n]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    @classmethod
    def of(cls, values: Iterable[int]) -> CountSeq:
        return cls(tuple(values))

    @classmethod
    def zero(cls, order: int) -> CountSeq:
        return cls((0,) * (order + 1))

    @classmethod
    def unit(cls, order: int) -> CountSeq:
        """The class holding only the empty object."""
        return cls((1,) + (0,) * order)

    @classmethod
    def atom(cls, order: int) -> CountSeq:
        """The singleton class X: one object of degree 1."""
        return cls(tuple(1 if n == 1 else 0 for n in range(order + 1)))

    @classmethod
    def sets(cls, order: int) -> CountSeq:
        """Set(X), one object per degree (EGF e^x)."""
        return cls((1,) * (order + 1))

    def positive(self) -> CountSeq:
        """Drop the degree-0 objects."""
        return CountSeq((0,) + self.counts[1:])

    def truncate(self, order: int) -> CountSeq:
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return CountSeq(self.counts[: order + 1])

    def to_json(self) -> list[str]:
        return [str(c) for c in self.counts]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> CountSeq:
        return cls(tuple(int(x) for x in data))


def _check_orders(a: CountSeq, b: CountSeq):
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} != {b.order}")


def _check_no_constant(a: CountSeq, what: str):
    if a.counts[0] != 0:
        raise ConstantTermError(
            f"{what} needs a class without degree-0 objects (C_0 = {a.counts[0]})"
        )


def egf_add(a: CountSeq, b: CountSeq) -> CountSeq:
    _check_orders(a, b)
    return CountSeq(tuple(x + y for x, y in zip(a.counts, b.counts)))


def egf_mul(a: CountSeq, b: CountSeq) -> CountSeq:
    """Labelled product: ``C_n = sum_k binom(n, k) a_k b_{n-k}``."""
    _check_orders(a, b)
    A, B = a.counts, b.counts
    return CountSeq(
        tuple(
            sum(comb(n, k) * A[k] * B[n - k] for k in range(n + 1))
            for n in range(len(A))
        )
    )


def point(a: CountSeq) -> CountSeq:
    """Product with the one-element degree-1 class (x * S(x))."""
    A = a.counts
    return CountSeq((0,) + tuple(n * A[n - 1] for n in range(1, len(A))))


def egf_seq(a: CountSeq) -> CountSeq:
    """Seq construction, 1 / (1 - S)."""
    _check_no_constant(a, "Seq")
    A = a.counts
    B = [1]
    for n in range(1, len(A)):
        B.append(sum(comb(n, k) * A[k] * B[n - k] for k in range(1, n + 1)))
    return CountSeq(tuple(B))


def egf_exp(a: CountSeq) -> CountSeq:
    """Set construction, exp(S), via ``B' = A' B``."""
    _check_no_constant(a, "Set")
    A = a.counts
    B = [1]
    for n in range(1, len(A)):
        B.append(sum(comb(n - 1, k - 1) * A[k] * B[n - k] for k in range(1, n + 1)))
    return CountSeq(tuple(B))


def egf_log(a: CountSeq) -> CountSeq:
    """Cyc construction, log(1 / (1 - S)).

    Solves ``exp(L) = Seq(a)`` for L with the same recurrence egf_exp uses,
    read backwards; no series division is needed.
    """
    _check_no_constant(a, "Cyc")
    B = egf_seq(a).counts
    L = [0]
    for n in range(1, len(B)):
        rest = sum(comb(n - 1, k - 1) * L[k] * B[n - k] for k in range(1, n))
        L.append(B[n] - rest)
    return CountSeq(tuple(L))


def solve_catalan_class(order: int) -> CountSeq:
    """Counts of plane trees with labelled non-root nodes, from ``R = Seq(R*)``."""
    s = CountSeq.unit(order)
    for _ in range(order + 1):
        s = egf_seq(point(s))
    return s


def solve_windmill(order: int) -> CountSeq:
    """Counts of windmills, fixed point of ``W = x (Cyc(W) + 1)``."""
    s = CountSeq.zero(order)
    one = CountSeq.unit(order)
    for _ in range(order + 1):
        s = point(egf_add(egf_log(s), one))
    return s


def solve_npt(order: int) -> CountSeq:
    """Counts of nested discs, fixed point of ``S = x exp(S)``."""
    s = CountSeq.zero(order)
    for _ in range(order + 1):
        s = point(egf_exp(s))
    return s


@dataclass(frozen=True)
class Stirling1Table:
    """Unsigned Stirling numbers of the first kind, ``values[n][k]`` for k <= n."""

    n_max: int
    values: tuple[tuple[int, ...], ...]

    def __call__(self, n: int, k: int) -> int:
        if n > self.n_max:
            raise IndexError(f"table only holds rows up to {self.n_max}")
        if k < 0 or k > n:
            return 0
        return self.values[n][k]


def stirling1(n_max: int) -> Stirling1Table:
    rows = [(1,)]
    for n in range(n_max):
        prev = rows[-1] + (0,)
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            row[k] = prev[k - 1] + n * prev[k]
        rows.append(tuple(row))
    return Stirling1Table(n_max, tuple(rows))


def windmill_stirling(n: int, table: Stirling1Table | None = None) -> int:
    """Windmill count as ``sum_i i! binom(n, i) s(n-1, i)``."""
    if n < 1:
        raise ValueError("windmill_stirling is defined for n >= 1")
    if table is None:
        table = stirling1(n - 1)
    if table.n_max < n - 1:
        raise ValueError(f"table has n_max={table.n_max}, need {n - 1}")
    return sum(factorial(i) * comb(n, i) * table(n - 1, i) for i in range(n + 1))

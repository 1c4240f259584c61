"""Lyndon words and the Chen-Fox-Lyndon factorization.

Words are any finite sequences (``str``, ``list``, ``tuple``).  Letters are
compared through an optional ``key`` giving the total order on the alphabet;
by default the letters' own ordering is used.
"""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar

from .partitions import CyclicPartition, OrderedPartition, SetOfCycles

W = TypeVar("W", bound=Sequence)


def _keys(w: Sequence, key: Callable | None) -> list:
    return [key(a) for a in w] if key is not None else list(w)


def is_lyndon(w: Sequence, key: Callable | None = None) -> bool:
    """True iff ``w`` is strictly smaller than each of its proper rotations."""
    if len(w) == 0:
        raise ValueError("the empty word has no Lyndon status")
    k = _keys(w, key)
    return all(k < k[i:] + k[:i] for i in range(1, len(k)))


def cfl_factorize(w: W, key: Callable | None = None) -> list[W]:
    """Factor ``w`` into a weakly decreasing product of Lyndon words.

    Duval's algorithm: linear time, constant extra state.  Factors come back
    as slices of ``w``, so a ``str`` input gives ``str`` factors.
    """
    k = _keys(w, key)
    n = len(k)
    factors = []
    i = 0
    while i < n:
        j, m = i + 1, i
        while j < n and k[m] <= k[j]:
            m = i if k[m] < k[j] else m + 1
            j += 1
        period = j - m
        while i <= m:
            factors.append(w[i : i + period])
            i += period
    return factors


def ltos_via_lyndon(ell: OrderedPartition) -> SetOfCycles:
    """ltos computed by factorizing the word of block minima.

    Labels are distinct, so each block is identified with its minimum; every
    Lyndon factor of the minima word becomes one necklace, and the minima are
    then replaced by their blocks.
    """
    by_min = {min(b): b for b in ell.blocks}
    factors = cfl_factorize(ell.minima())
    return SetOfCycles(
        tuple(CyclicPartition(tuple(by_min[m] for m in f)) for f in factors)
    )

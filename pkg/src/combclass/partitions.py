"""Set, ordered and cyclic partitions of {1..n} and the stol/ltos bijection.

Blocks are ``frozenset[int]``.  Cyclic partitions are stored rotated so the
block holding the smallest label comes first; sets of cycles are sorted by
ascending minimum.  Both canonicalizations happen on construction, so
structural equality is object equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence


def _as_block(labels: Iterable[int]) -> frozenset[int]:
    block = frozenset(labels)
    if not block:
        raise ValueError("blocks must be nonempty")
    for x in block:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"labels must be positive integers, got {x!r}")
    return block


def _check_disjoint(blocks: Sequence[frozenset[int]]) -> frozenset[int]:
    seen: set[int] = set()
    for b in blocks:
        if seen & b:
            raise ValueError(f"blocks overlap on {sorted(seen & b)}")
        seen |= b
    return frozenset(seen)


def _check_standard(support: frozenset[int]):
    if support != frozenset(range(1, len(support) + 1)):
        raise ValueError(f"labels {sorted(support)} are not exactly 1..{len(support)}")


def rotate_to_min(items: Sequence, key) -> tuple:
    """Rotate ``items`` so the element with the smallest ``key`` is first."""
    if not items:
        return ()
    i = min(range(len(items)), key=lambda j: key(items[j]))
    return tuple(items[i:]) + tuple(items[:i])


@dataclass(frozen=True)
class OrderedPartition:
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(_as_block(b) for b in self.blocks)
        _check_standard(_check_disjoint(blocks))
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> OrderedPartition:
        return cls(tuple(frozenset(b) for b in blocks))

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def minima(self) -> list[int]:
        return [min(b) for b in self.blocks]


@dataclass(frozen=True)
class CyclicPartition:
    """A necklace of disjoint blocks; the labels need not be 1..n."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(_as_block(b) for b in self.blocks)
        if not blocks:
            raise ValueError("a cyclic partition needs at least one block")
        _check_disjoint(blocks)
        object.__setattr__(self, "blocks", rotate_to_min(blocks, min))

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> CyclicPartition:
        return cls(tuple(frozenset(b) for b in blocks))

    @property
    def support(self) -> frozenset[int]:
        return frozenset().union(*self.blocks)

    @property
    def minimum(self) -> int:
        return min(self.blocks[0])

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


@dataclass(frozen=True)
class SetOfCycles:
    cycles: tuple[CyclicPartition, ...]

    def __post_init__(self):
        cycles = tuple(
            c if isinstance(c, CyclicPartition) else CyclicPartition(tuple(c))
            for c in self.cycles
        )
        _check_standard(_check_disjoint([c.support for c in cycles]))
        object.__setattr__(
            self, "cycles", tuple(sorted(cycles, key=lambda c: c.minimum))
        )

    @classmethod
    def of(cls, *cycles: Sequence[Iterable[int]]) -> SetOfCycles:
        return cls(tuple(CyclicPartition(tuple(frozenset(b) for b in c)) for c in cycles))

    @property
    def size(self) -> int:
        return sum(len(c.support) for c in self.cycles)

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


def stol(c: SetOfCycles) -> OrderedPartition:
    """Concatenate the cycles, each read from its minimum block, by decreasing minimum."""
    out: list[frozenset[int]] = []
    for cycle in sorted(c.cycles, key=lambda cy: cy.minimum, reverse=True):
        out.extend(cycle.blocks)
    return OrderedPartition(tuple(out))


def factor_indices(minima: Sequence[int] | OrderedPartition) -> list[int]:
    """1-based start positions of the factors, followed by ``k + 1``.

    A factor starts at every block whose minimum is smaller than all the
    labels to its left.  This is the maximal chain of cut positions where
    everything before the next cut has a larger minimum than everything
    from the current cut onward.
    """
    if isinstance(minima, OrderedPartition):
        minima = minima.minima()
    starts = []
    best = None
    for i, m in enumerate(minima, start=1):
        if best is None or m < best:
            starts.append(i)
            best = m
    if not starts:
        starts.append(1)
    starts.append(len(minima) + 1)
    return starts


def split_at_indices(items: Sequence, indices: Sequence[int]) -> list[tuple]:
    """Cut ``items`` into the segments ``[i_j, i_{j+1})`` (1-based)."""
    return [tuple(items[a - 1 : b - 1]) for a, b in zip(indices, indices[1:])]


def ltos(ell: OrderedPartition) -> SetOfCycles:
    segments = split_at_indices(ell.blocks, factor_indices(ell))
    return SetOfCycles(tuple(CyclicPartition(seg) for seg in segments if seg))


# --- enumeration -----------------------------------------------------------


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All RGS of length n in lexicographic order (the empty one for n = 0)."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(a)
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    a[0] = 0
    yield from rec(1, 0)


def _blocks_of_rgs(rgs: Sequence[int], labels: Sequence[int]) -> list[frozenset[int]]:
    k = max(rgs) + 1 if rgs else 0
    groups: list[list[int]] = [[] for _ in range(k)]
    for v, x in zip(rgs, labels):
        groups[v].append(x)
    return [frozenset(g) for g in groups]


def set_partitions_of(labels: Sequence[int]) -> Iterator[list[frozenset[int]]]:
    """Set partitions of ``labels`` as block lists sorted by minimum."""
    labels = sorted(labels)
    for rgs in restricted_growth_strings(len(labels)):
        yield _blocks_of_rgs(rgs, labels)


def cyclic_partitions_of(labels: Sequence[int]) -> Iterator[CyclicPartition]:
    for blocks in set_partitions_of(labels):
        first, rest = blocks[0], blocks[1:]
        for perm in permutations(rest):
            yield CyclicPartition((first,) + perm)


def enumerate_set_partitions(n: int) -> Iterator[tuple[frozenset[int], ...]]:
    """Set partitions of {1..n} by restricted growth string, lexicographically."""
    for blocks in set_partitions_of(range(1, n + 1)):
        yield tuple(blocks)


def enumerate_ordered_partitions(n: int) -> Iterator[OrderedPartition]:
    """For each set partition (RGS order), every block order (lexicographic)."""
    for blocks in set_partitions_of(range(1, n + 1)):
        for perm in permutations(blocks):
            yield OrderedPartition(perm)


def enumerate_cyclic_partitions(n: int) -> Iterator[CyclicPartition]:
    if n == 0:
        return
    yield from cyclic_partitions_of(range(1, n + 1))


def _sets_of_cycles_on(labels: tuple[int, ...]) -> Iterator[tuple[CyclicPartition, ...]]:
    if not labels:
        yield ()
        return
    head, tail = labels[0], labels[1:]
    # choose the support of the cycle holding the smallest remaining label
    for mask in _subset_masks(len(tail)):
        support = (head,) + tuple(x for x, bit in zip(tail, mask) if bit)
        remaining = tuple(x for x, bit in zip(tail, mask) if not bit)
        for cycle in cyclic_partitions_of(support):
            for rest in _sets_of_cycles_on(remaining):
                yield (cycle,) + rest


def _subset_masks(m: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for rest in _subset_masks(m - 1):
        yield (0,) + rest
    for rest in _subset_masks(m - 1):
        yield (1,) + rest


def enumerate_sets_of_cycles(n: int) -> Iterator[SetOfCycles]:
    for cycles in _sets_of_cycles_on(tuple(range(1, n + 1))):
        yield SetOfCycles(cycles)

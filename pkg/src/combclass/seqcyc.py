"""Generic labelled atoms and the Set(Cyc(C+)) <-> Seq(C+) bijection.

Any object exposing ``labels`` (a nonempty ``frozenset[int]``) and
``relabel(mapping)`` can serve as an atom, so the maps below work for any
labelled class.  Only label sets are inspected; payloads are carried along
untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Protocol, Sequence

from .partitions import (
    CyclicPartition,
    OrderedPartition,
    SetOfCycles,
    factor_indices,
    rotate_to_min,
    split_at_indices,
    stol,
)


class Atom(Protocol):
    @property
    def labels(self) -> frozenset[int]: ...

    def relabel(self, mapping: Mapping[int, int]) -> "Atom": ...


@dataclass(frozen=True)
class LabelledAtom:
    """An element of some labelled class: an opaque payload plus its labels."""

    payload: Any
    labels: frozenset[int]

    def __post_init__(self):
        labels = frozenset(self.labels)
        if not labels:
            raise ValueError("an atom carries at least one label")
        if any(not isinstance(x, int) or x < 1 for x in labels):
            raise ValueError(f"labels must be positive integers: {sorted(labels)}")
        object.__setattr__(self, "labels", labels)

    @property
    def degree(self) -> int:
        return len(self.labels)

    def relabel(self, mapping: Mapping[int, int]) -> LabelledAtom:
        return LabelledAtom(self.payload, frozenset(mapping[x] for x in self.labels))


def _min_label(atom: Atom) -> int:
    return min(atom.labels)


def _support(atoms: Iterable[Atom]) -> frozenset[int]:
    seen: set[int] = set()
    for a in atoms:
        if not a.labels:
            raise ValueError("atoms must carry at least one label")
        if seen & a.labels:
            raise ValueError(f"atoms share labels {sorted(seen & a.labels)}")
        seen |= a.labels
    return frozenset(seen)


def _check_standard(support: frozenset[int]):
    if support != frozenset(range(1, len(support) + 1)):
        raise ValueError(f"labels {sorted(support)} are not exactly 1..{len(support)}")


@dataclass(frozen=True)
class AtomSequence:
    atoms: tuple[Any, ...]

    def __post_init__(self):
        atoms = tuple(self.atoms)
        _check_standard(_support(atoms))
        object.__setattr__(self, "atoms", atoms)

    @property
    def size(self) -> int:
        return sum(len(a.labels) for a in self.atoms)

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)


@dataclass(frozen=True)
class AtomNecklace:
    atoms: tuple[Any, ...]

    def __post_init__(self):
        atoms = tuple(self.atoms)
        if not atoms:
            raise ValueError("a necklace holds at least one atom")
        _support(atoms)
        object.__setattr__(self, "atoms", rotate_to_min(atoms, _min_label))

    @property
    def support(self) -> frozenset[int]:
        return frozenset().union(*(a.labels for a in self.atoms))

    @property
    def minimum(self) -> int:
        return _min_label(self.atoms[0])

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)


@dataclass(frozen=True)
class AtomJewellery:
    necklaces: tuple[AtomNecklace, ...]

    def __post_init__(self):
        necklaces = tuple(
            nk if isinstance(nk, AtomNecklace) else AtomNecklace(tuple(nk))
            for nk in self.necklaces
        )
        _check_standard(_support(a for nk in necklaces for a in nk.atoms))
        object.__setattr__(
            self, "necklaces", tuple(sorted(necklaces, key=lambda nk: nk.minimum))
        )

    @property
    def size(self) -> int:
        return sum(len(nk.support) for nk in self.necklaces)

    def __len__(self):
        return len(self.necklaces)

    def __iter__(self):
        return iter(self.necklaces)


def standardize(atoms: Sequence[Atom]) -> tuple:
    """Relabel onto {1..n} by the unique order-preserving bijection."""
    used: list[int] = []
    for a in atoms:
        used.extend(a.labels)
    if len(used) != len(set(used)):
        dup = sorted({x for x in used if used.count(x) > 1})
        raise ValueError(f"duplicate labels {dup}")
    mapping = {x: i for i, x in enumerate(sorted(used), start=1)}
    return tuple(a.relabel(mapping) for a in atoms)


def label_partition(s: AtomSequence | Sequence[Atom]) -> OrderedPartition:
    """The ordered partition of labels induced by a sequence of atoms."""
    return OrderedPartition(tuple(a.labels for a in s))


def jtoset(j: AtomJewellery) -> SetOfCycles:
    return SetOfCycles(
        tuple(CyclicPartition(tuple(a.labels for a in nk.atoms)) for nk in j.necklaces)
    )


def jtoseq(j: AtomJewellery) -> AtomSequence:
    """Arrange the atoms of ``j`` so their label partition is stol(jtoset(j))."""
    by_labels = {a.labels: a for nk in j.necklaces for a in nk.atoms}
    return AtomSequence(tuple(by_labels[b] for b in stol(jtoset(j)).blocks))


def seqtoj(s: AtomSequence) -> AtomJewellery:
    """Cut the sequence where ltos cuts its label partition."""
    segments = split_at_indices(s.atoms, factor_indices(label_partition(s)))
    return AtomJewellery(tuple(AtomNecklace(seg) for seg in segments if seg))

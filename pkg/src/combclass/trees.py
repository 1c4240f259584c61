"""Labelled tree families and the jewellery / forest / tree bijections.

* ``PlaneTreeR``: plane tree with an unlabelled root; the non-root nodes carry
  the labels 1..n.  Degree = number of non-root nodes.
* ``RootedTreeRr``: plane tree with every node labelled (weight counts the root).
* ``Forest``: sequence of ``RootedTreeRr`` covering 1..n.
* necklaces and jewellery boxes of trees are ``AtomNecklace`` / ``AtomJewellery``
  with ``RootedTreeRr`` atoms.
* ``Windmill``: every node's subtrees form a cyclic sequence.
* ``NestedDiscs``: every node's subtrees form a set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Mapping, Sequence

from .partitions import (
    enumerate_cyclic_partitions,
    enumerate_ordered_partitions,
    enumerate_sets_of_cycles,
    rotate_to_min,
    set_partitions_of,
)
from .seqcyc import AtomJewellery, AtomNecklace, AtomSequence, jtoseq, seqtoj


def _union_disjoint(own: Sequence[int], children) -> frozenset[int]:
    labels = set(own)
    total = len(labels)
    for c in children:
        labels |= c.labels
        total += len(c.labels)
    if len(labels) != total:
        raise ValueError("tree labels must be distinct")
    return frozenset(labels)


def _check_standard(labels: frozenset[int]):
    if labels != frozenset(range(1, len(labels) + 1)):
        raise ValueError(f"labels {sorted(labels)} are not exactly 1..{len(labels)}")


@dataclass(frozen=True)
class RootedTreeRr:
    label: int
    children: tuple[RootedTreeRr, ...] = ()
    labels: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        children = tuple(self.children)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "labels", _union_disjoint((self.label,), children))

    @property
    def weight(self) -> int:
        return len(self.labels)

    def relabel(self, mapping: Mapping[int, int]) -> RootedTreeRr:
        return RootedTreeRr(
            mapping[self.label], tuple(c.relabel(mapping) for c in self.children)
        )


@dataclass(frozen=True)
class PlaneTreeR:
    children: tuple[RootedTreeRr, ...] = ()
    labels: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        children = tuple(self.children)
        labels = _union_disjoint((), children)
        _check_standard(labels)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "labels", labels)

    @property
    def degree(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Forest:
    trees: tuple[RootedTreeRr, ...] = ()

    def __post_init__(self):
        trees = tuple(self.trees)
        _check_standard(_union_disjoint((), trees))
        object.__setattr__(self, "trees", trees)

    @property
    def size(self) -> int:
        return sum(t.weight for t in self.trees)

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)


def _min_of(t) -> int:
    return min(t.labels)


@dataclass(frozen=True)
class Windmill:
    """Children form a necklace, stored from the child holding the smallest label."""

    label: int
    children: tuple[Windmill, ...] = ()
    labels: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        children = rotate_to_min(tuple(self.children), _min_of)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "labels", _union_disjoint((self.label,), children))

    @property
    def weight(self) -> int:
        return len(self.labels)

    def relabel(self, mapping: Mapping[int, int]) -> Windmill:
        return Windmill(mapping[self.label], tuple(c.relabel(mapping) for c in self.children))


@dataclass(frozen=True)
class NestedDiscs:
    """Children form a set, stored by ascending smallest label."""

    label: int
    children: tuple[NestedDiscs, ...] = ()
    labels: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        children = tuple(sorted(self.children, key=_min_of))
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "labels", _union_disjoint((self.label,), children))

    @property
    def weight(self) -> int:
        return len(self.labels)

    def relabel(self, mapping: Mapping[int, int]) -> NestedDiscs:
        return NestedDiscs(mapping[self.label], tuple(c.relabel(mapping) for c in self.children))


# --- bijections --------------------------------------------------------------


def rtof(t: PlaneTreeR) -> Forest:
    return Forest(t.children)


def ftor(f: Forest) -> PlaneTreeR:
    return PlaneTreeR(f.trees)


def jtof(j: AtomJewellery) -> Forest:
    return Forest(jtoseq(j).atoms)


def ftoj(f: Forest) -> AtomJewellery:
    return seqtoj(AtomSequence(f.trees))


def relabel_root_insert(t: PlaneTreeR, r: int) -> RootedTreeRr:
    """Label the root of ``t`` with ``r``, shifting labels >= r up by one."""
    n = t.degree
    if not 1 <= r <= n + 1:
        raise ValueError(f"root label must lie in 1..{n + 1}, got {r}")
    mapping = {x: x + 1 if x >= r else x for x in t.labels}
    return RootedTreeRr(r, tuple(c.relabel(mapping) for c in t.children))


# --- enumeration -------------------------------------------------------------

Shape = tuple  # a plane tree shape is the tuple of its subtree shapes


def _preorder_degrees(shape: Shape) -> list[int]:
    out = [len(shape)]
    for child in shape:
        out.extend(_preorder_degrees(child))
    return out


@lru_cache(maxsize=None)
def plane_tree_shapes(n: int) -> tuple[Shape, ...]:
    """Unlabelled plane trees with n non-root nodes.

    Ordered lexicographically by their preorder child-count sequence.
    """
    if n == 0:
        return ((),)
    shapes = [s for s in _forests(n)]
    return tuple(sorted(shapes, key=_preorder_degrees))


@lru_cache(maxsize=None)
def _forests(n: int) -> tuple[Shape, ...]:
    # sequences of subtrees whose node counts sum to n
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for head in plane_tree_shapes(first - 1):
            for tail in _forests(n - first):
                out.append((head,) + tail)
    return tuple(out)


def _label_children(shape: Shape, labels: Iterator[int]) -> tuple[RootedTreeRr, ...]:
    out = []
    for child in shape:
        lab = next(labels)
        out.append(RootedTreeRr(lab, _label_children(child, labels)))
    return tuple(out)


def enumerate_R(n: int) -> Iterator[PlaneTreeR]:
    """Shapes (see plane_tree_shapes) times labellings of the non-root nodes.

    Labels are assigned in preorder from each permutation of 1..n, in
    lexicographic permutation order.
    """
    for shape in plane_tree_shapes(n):
        for perm in permutations(range(1, n + 1)):
            yield PlaneTreeR(_label_children(shape, iter(perm)))


def enumerate_Rr(n: int) -> Iterator[RootedTreeRr]:
    """Fully labelled plane trees with n nodes, in the same order as enumerate_R."""
    if n < 1:
        return
    for shape in plane_tree_shapes(n - 1):
        for perm in permutations(range(1, n + 1)):
            it = iter(perm)
            root = next(it)
            yield RootedTreeRr(root, _label_children(shape, it))


@lru_cache(maxsize=None)
def _standard_Rr(n: int) -> tuple[RootedTreeRr, ...]:
    return tuple(enumerate_Rr(n))


def rooted_trees_on(labels) -> Iterator[RootedTreeRr]:
    """All fully labelled plane trees whose label set is ``labels``."""
    labels = sorted(labels)
    mapping = dict(enumerate(labels, start=1))
    for t in _standard_Rr(len(labels)):
        yield t.relabel(mapping)


def enumerate_forest(n: int) -> Iterator[Forest]:
    for ell in enumerate_ordered_partitions(n):
        for trees in product(*(rooted_trees_on(b) for b in ell.blocks)):
            yield Forest(trees)


def enumerate_necklace(n: int) -> Iterator[AtomNecklace]:
    for cyc in enumerate_cyclic_partitions(n):
        for trees in product(*(rooted_trees_on(b) for b in cyc.blocks)):
            yield AtomNecklace(trees)


def enumerate_jewellery(n: int) -> Iterator[AtomJewellery]:
    for soc in enumerate_sets_of_cycles(n):
        shape = [len(c) for c in soc.cycles]
        blocks = [b for c in soc.cycles for b in c.blocks]
        for trees in product(*(rooted_trees_on(b) for b in blocks)):
            necklaces, i = [], 0
            for k in shape:
                necklaces.append(AtomNecklace(trees[i : i + k]))
                i += k
            yield AtomJewellery(tuple(necklaces))


@lru_cache(maxsize=None)
def _windmills_on(labels: tuple[int, ...]) -> tuple[Windmill, ...]:
    out = []
    for root in labels:
        rest = tuple(x for x in labels if x != root)
        for blocks in set_partitions_of(rest):
            first, others = blocks[0:1], blocks[1:]
            # fixing the block with the smallest label kills the rotations
            for arrangement in permutations(others):
                order = tuple(first) + arrangement
                for kids in product(*(_windmills_on(tuple(sorted(b))) for b in order)):
                    out.append(Windmill(root, kids))
    return tuple(out)


def enumerate_windmill(n: int) -> Iterator[Windmill]:
    """By root label, then set partition of the rest, then cyclic order, then subtrees."""
    if n < 1:
        return
    yield from _windmills_on(tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def _nested_on(labels: tuple[int, ...]) -> tuple[NestedDiscs, ...]:
    out = []
    for root in labels:
        rest = tuple(x for x in labels if x != root)
        for blocks in set_partitions_of(rest):
            for kids in product(*(_nested_on(tuple(sorted(b))) for b in blocks)):
                out.append(NestedDiscs(root, kids))
    return tuple(out)


def enumerate_nested(n: int) -> Iterator[NestedDiscs]:
    if n < 1:
        return
    yield from _nested_on(tuple(range(1, n + 1)))

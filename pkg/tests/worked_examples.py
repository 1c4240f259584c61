"""Worked examples shared by the unit and acceptance tests."""

from combclass.partitions import OrderedPartition, SetOfCycles
from combclass.seqcyc import AtomJewellery, AtomNecklace, LabelledAtom
from combclass.trees import Forest, PlaneTreeR, RootedTreeRr


def atom(name, *labels):
    return LabelledAtom(name, frozenset(labels))


# a set of cycles and the ordered partition it corresponds to
SOC = SetOfCycles.of([{11}, {2, 5}, {10}], [{6}, {1, 3, 4}, {7, 9}], [{8, 12}])
OP = OrderedPartition.of({8, 12}, {2, 5}, {10}, {11}, {1, 3, 4}, {7, 9}, {6})
SOC_CANONICAL = SetOfCycles.of([{1, 3, 4}, {7, 9}, {6}], [{2, 5}, {10}, {11}], [{8, 12}])
OP_INDICES = [1, 2, 5, 8]

WORD = "ababbababaaababa"
WORD_FACTORS = ["ababb", "ab", "ab", "aaabab", "a"]
MINIMA_WORD = [8, 2, 10, 11, 1, 7, 6]
MINIMA_FACTORS = [[8], [2, 10, 11], [1, 7, 6]]

# five labelled graphs split across three necklaces
C11 = atom("c1(1)", 3, 7, 5, 20)
C21 = atom("c2(1)", 9, 14, 17, 19, 11)
C12 = atom("c1(2)", 1, 18)
C13 = atom("c1(3)", 2, 8, 13)
C23 = atom("c2(3)", 4, 16, 12, 15, 10, 6)
GRAPHS = AtomJewellery((AtomNecklace((C11, C21)), AtomNecklace((C12,)), AtomNecklace((C13, C23))))
GRAPHS_SET = SetOfCycles.of(
    [{3, 7, 5, 20}, {9, 14, 17, 19, 11}], [{1, 18}], [{2, 8, 13}, {4, 16, 12, 15, 10, 6}]
)
GRAPHS_PI = OrderedPartition.of(
    {3, 7, 5, 20}, {9, 14, 17, 19, 11}, {2, 8, 13}, {4, 16, 12, 15, 10, 6}, {1, 18}
)
GRAPHS_INDICES = [1, 3, 5, 6]

# jewellery <-> forest <-> tree, two rows
T152 = RootedTreeRr(1, (RootedTreeRr(5), RootedTreeRr(2)))
T43 = RootedTreeRr(4, (RootedTreeRr(3),))
T6 = RootedTreeRr(6)
T7 = RootedTreeRr(7)

UPPER_J = AtomJewellery((AtomNecklace((T152,)), AtomNecklace((T43,)), AtomNecklace((T6, T7))))
UPPER_F = Forest((T6, T7, T43, T152))
UPPER_R = PlaneTreeR((T6, T7, T43, T152))

LOWER_J = AtomJewellery(
    (AtomNecklace((T152,)), AtomNecklace((T43,)), AtomNecklace((T6,)), AtomNecklace((T7,)))
)
LOWER_F = Forest((T7, T6, T43, T152))
LOWER_R = PlaneTreeR((T7, T6, T43, T152))

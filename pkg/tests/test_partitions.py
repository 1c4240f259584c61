from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combclass.partitions import (
    CyclicPartition,
    OrderedPartition,
    SetOfCycles,
    enumerate_cyclic_partitions,
    enumerate_ordered_partitions,
    enumerate_set_partitions,
    enumerate_sets_of_cycles,
    factor_indices,
    ltos,
    restricted_growth_strings,
    stol,
)

EXAMPLE_SOC = SetOfCycles.of(
    [{11}, {2, 5}, {10}],
    [{6}, {1, 3, 4}, {7, 9}],
    [{8, 12}],
)
EXAMPLE_OP = OrderedPartition.of({8, 12}, {2, 5}, {10}, {11}, {1, 3, 4}, {7, 9}, {6})


@st.composite
def ordered_partitions(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    labels = draw(st.permutations(range(1, n + 1)))
    cuts = draw(st.sets(st.integers(1, max(n - 1, 1)), max_size=max(n - 1, 0))) if n > 1 else set()
    bounds = [0] + sorted(cuts) + [n]
    return OrderedPartition(tuple(frozenset(labels[a:b]) for a, b in zip(bounds, bounds[1:]) if b > a))


class TestTypes:
    def test_cyclic_partition_canonical_rotation(self):
        c = CyclicPartition.of({11}, {2, 5}, {10})
        assert c.blocks == (frozenset({2, 5}), frozenset({10}), frozenset({11}))
        assert c == CyclicPartition.of({10}, {11}, {2, 5})
        assert CyclicPartition(c.blocks) == c

    def test_set_of_cycles_sorted(self):
        assert [c.minimum for c in EXAMPLE_SOC] == [1, 2, 8]

    def test_invalid(self):
        with pytest.raises(ValueError):
            OrderedPartition.of({1, 2}, {2})
        with pytest.raises(ValueError):
            OrderedPartition.of({1}, {3})
        with pytest.raises(ValueError):
            OrderedPartition.of({1}, set())
        with pytest.raises(ValueError):
            SetOfCycles.of([{1}, {2}], [{2, 3}])


class TestStolLtos:
    def test_worked_example(self):
        assert stol(EXAMPLE_SOC) == EXAMPLE_OP
        assert ltos(EXAMPLE_OP) == SetOfCycles.of(
            [{1, 3, 4}, {7, 9}, {6}], [{2, 5}, {10}, {11}], [{8, 12}]
        )

    def test_factor_indices(self):
        assert factor_indices(EXAMPLE_OP) == [1, 2, 5, 8]
        assert factor_indices(OrderedPartition.of({1, 2, 3})) == [1, 2]
        assert factor_indices(OrderedPartition.of({1}, {2}, {3})) == [1, 4]
        assert factor_indices([8, 2, 10, 11, 1, 7, 6]) == [1, 2, 5, 8]

    def test_factor_indices_brute_force(self):
        # the cut chain stol produces: every segment starts with its own
        # minimum and segment minima strictly decrease; exactly one exists
        for n in range(1, 6):
            for ell in enumerate_ordered_partitions(n):
                k = len(ell)
                mins = ell.minima()
                valid = []
                for r in range(k):
                    for inner in combinations(range(2, k + 1), r):
                        idx = [1, *inner, k + 1]
                        segs = [mins[a - 1 : b - 1] for a, b in zip(idx, idx[1:])]
                        heads = [seg[0] for seg in segs]
                        if all(seg[0] == min(seg) for seg in segs) and all(
                            x > y for x, y in zip(heads, heads[1:])
                        ):
                            valid.append(idx)
                assert valid == [factor_indices(ell)]

    def test_trivial_cases(self):
        whole = OrderedPartition.of(range(1, 6))
        assert stol(SetOfCycles.of([range(1, 6)])) == whole
        assert ltos(whole) == SetOfCycles.of([range(1, 6)])
        singles = SetOfCycles.of([{1}], [{2}], [{3}])
        assert stol(singles) == OrderedPartition.of({3}, {2}, {1})
        assert ltos(OrderedPartition.of({3}, {2}, {1})) == singles

    def test_empty(self):
        assert stol(SetOfCycles(())) == OrderedPartition(())
        assert ltos(OrderedPartition(())) == SetOfCycles(())

    @pytest.mark.parametrize("n", range(7))
    def test_round_trips_exhaustive(self, n):
        assert all(stol(ltos(ell)) == ell for ell in enumerate_ordered_partitions(n))
        assert all(ltos(stol(c)) == c for c in enumerate_sets_of_cycles(n))

    @given(ordered_partitions())
    def test_round_trip_random(self, ell):
        c = ltos(ell)
        assert stol(c) == ell
        assert sorted(map(sorted, ell.blocks)) == sorted(sorted(b) for cy in c for b in cy.blocks)


class TestEnumeration:
    def test_rgs(self):
        assert list(restricted_growth_strings(3)) == [
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)
        ]

    def test_cardinalities(self):
        assert [sum(1 for _ in enumerate_set_partitions(n)) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
        assert [sum(1 for _ in enumerate_ordered_partitions(n)) for n in range(8)] == [1, 1, 3, 13, 75, 541, 4683, 47293]
        assert sum(1 for _ in enumerate_set_partitions(3)) == 5
        assert sum(1 for _ in enumerate_ordered_partitions(3)) == 13

    def test_cyclic_partitions_n2(self):
        assert set(enumerate_cyclic_partitions(2)) == {
            CyclicPartition.of({1, 2}),
            CyclicPartition.of({1}, {2}),
        }

    @pytest.mark.parametrize("n", range(1, 7))
    def test_cyclic_partitions_against_rotation_oracle(self, n):
        # oracle: canonicalize every ordered partition by hand, dedupe
        oracle = set()
        for ell in enumerate_ordered_partitions(n):
            b = list(ell.blocks)
            rotations = [tuple(b[i:] + b[:i]) for i in range(len(b))]
            oracle.add(next(r for r in rotations if 1 in r[0]))
        got = [c.blocks for c in enumerate_cyclic_partitions(n)]
        assert len(got) == len(set(got)) == len(oracle)
        assert set(got) == oracle

    @pytest.mark.parametrize("n", range(8))
    def test_cycles_and_ordered_partitions_equinumerous(self, n):
        assert sum(1 for _ in enumerate_sets_of_cycles(n)) == sum(1 for _ in enumerate_ordered_partitions(n))

    @pytest.mark.parametrize(
        "gen", [enumerate_ordered_partitions, enumerate_cyclic_partitions, enumerate_sets_of_cycles]
    )
    def test_no_duplicates_and_canonical(self, gen):
        items = list(gen(5))
        assert len(items) == len(set(items))
        for x in items:
            assert type(x)(getattr(x, "blocks", getattr(x, "cycles", None))) == x

    def test_deterministic(self):
        assert list(enumerate_sets_of_cycles(4)) == list(enumerate_sets_of_cycles(4))

    def test_ordered_partition_order(self):
        first = [tuple(map(sorted, p.blocks)) for p in enumerate_ordered_partitions(2)]
        assert first == [([1, 2],), ([1], [2]), ([2], [1])]

    def test_every_permutation_block_order(self):
        blocks = (frozenset({1}), frozenset({2, 3}), frozenset({4}))
        got = {p.blocks for p in enumerate_ordered_partitions(4)}
        assert all(perm in got for perm in permutations(blocks))

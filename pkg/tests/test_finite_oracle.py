# -*- coding: utf-8 -*-
"""
finite_oracle：有限划分上的跳跃与可归约性
"""

import itertools

import pytest
from hypothesis import given, strategies as st

from app.core.exception import FiniteOracleError
from app.finite_oracle.partition import (
    FinitePartition, embed_finite, finite_bireducible, finite_jump, finite_oplus, finite_reducible,
    finite_times, is_reduction,
)
from app.kernel.catalog import finite_set_index
from app.relations.presentation import JumpOf
from app.relations.query import query

partitions = st.lists(st.integers(0, 3), max_size=5).map(FinitePartition.of)


class TestFinitePartition:
    def test_canonical_blocks(self):
        assert FinitePartition.of([5, 5, 2]).blocks == (0, 0, 1)
        with pytest.raises(FiniteOracleError):
            FinitePartition((1, 0))

    def test_classes(self):
        P = FinitePartition.of([0, 0, 1, 2, 1])
        assert P.block_count == 3
        assert P.classes() == [frozenset({0, 1}), frozenset({2, 4}), frozenset({3})]
        assert P.related(2, 4) and not P.related(0, 2)
        assert P.to_dict() == {"carrier_size": 5, "blocks": [0, 0, 1, 2, 1]}


class TestFiniteJump:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_jump_of_delta_has_power_set_size(self, n):
        assert finite_jump(FinitePartition.delta(n)).block_count == 2 ** n

    def test_jump_counts_blocks_not_elements(self):
        assert finite_jump(FinitePartition.of([0, 0, 0, 1])).block_count == 4

    def test_jump_limit(self):
        with pytest.raises(FiniteOracleError):
            finite_jump(FinitePartition.delta(13))


class TestReducibility:
    def test_deltas(self):
        up = finite_reducible(FinitePartition.delta(2), FinitePartition.delta(3))
        assert up.reducible and up.exhaustive
        assert is_reduction(FinitePartition.delta(2), FinitePartition.delta(3), up.witness)
        assert not finite_reducible(FinitePartition.delta(3), FinitePartition.delta(2))

    def test_oplus_of_deltas(self):
        doubled = finite_oplus(FinitePartition.delta(2), FinitePartition.delta(2))
        assert doubled.block_count == 4
        assert finite_bireducible(doubled, FinitePartition.delta(4))

    def test_times(self):
        assert finite_times(FinitePartition.delta(2), FinitePartition.delta(3)).block_count == 6
        assert finite_times(FinitePartition.of([0, 0]), FinitePartition.delta(2)).blocks == (0, 1, 0, 1)

    def test_empty_carriers(self):
        empty = FinitePartition(())
        assert finite_reducible(empty, FinitePartition.delta(1)).reducible
        assert not finite_reducible(FinitePartition.delta(1), empty)

    def test_large_carriers_use_block_counts(self):
        big = FinitePartition.of([0, 1, 0, 1, 0, 1, 0, 1])
        result = finite_reducible(big, FinitePartition.delta(2))
        assert result.reducible and not result.exhaustive
        assert is_reduction(big, FinitePartition.delta(2), result.witness)

    @given(partitions, partitions)
    def test_exhaustive_search_matches_block_counts(self, P, Q):
        result = finite_reducible(P, Q)
        if P.carrier_size and Q.carrier_size:
            assert result.reducible == (P.block_count <= Q.block_count)
        if result.reducible:
            assert is_reduction(P, Q, result.witness)


class TestEmbedding:
    def test_decider_agrees_with_partition(self):
        P = FinitePartition.of([0, 0, 1, 2, 1])
        E = embed_finite(P)
        for x in range(7):
            for y in range(7):
                verdict = query(E, x, y, 10_000)
                assert verdict.is_final
                assert verdict.related == P.related(min(x, 4), min(y, 4))

    @pytest.mark.parametrize("blocks", [[0, 1], [0, 0, 1], [0, 1, 2]])
    def test_jump_classes_match_class_families(self, blocks):
        P = FinitePartition.of(blocks)
        J = JumpOf(embed_finite(P))
        carrier = range(P.carrier_size)
        subsets = [s for size in range(P.carrier_size + 1) for s in itertools.combinations(carrier, size)]
        indices = {s: finite_set_index(s) for s in subsets}
        families = set()
        for s in subsets:
            families.add(P.class_family(s))
            for t in subsets:
                verdict = query(J, indices[s], indices[t], 2_000)
                assert verdict.is_final
                assert verdict.related == (P.class_family(s) == P.class_family(t))
        assert len(families) == finite_jump(P).block_count

    def test_empty_partition(self):
        with pytest.raises(FiniteOracleError):
            embed_finite(FinitePartition(()))

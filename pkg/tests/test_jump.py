# -*- coding: utf-8 -*-
"""
jump：序数记号、⊆_E、跳跃查询与迭代
"""

import pytest
from hypothesis import given, settings, strategies as st

from app.core.exception import NotationError
from app.jump.iterate import iterate_jump_finite, iterate_jump_transfinite
from app.jump.jump import jump
from app.jump.notation import (
    Limit, One, Successor, compact, describe, finite_notation, finite_value, from_compact, from_kleene,
    kleene_code, notation_add, notation_lim, succ_chain_sequence, terms,
)
from app.jump.subset import subset_at_stage, subset_certified
from app.kernel.catalog import finite_set_index
from app.kernel.enumeration import lag
from app.kernel.numbering import DIVERGE_INDEX, encode
from app.kernel.pairing import pair
from app.kernel.recursion import IDENT_INDEX, const_index
from app.kernel.sexpr import parse
from app.relations.presentation import JumpOf, LimitIterate, make_delta, make_id
from app.relations.query import query
from app.relations.verdict import Answer, related

DOUBLING = encode(parse("(comp add (pair ident ident))"))
SLOW_DOUBLING = encode(parse("(comp add (pair (comp add (pair ident ident)) 0))"))

notations = st.recursive(
    st.sampled_from([One(), Limit(succ_chain_sequence()), Limit(succ_chain_sequence(2))]),
    lambda inner: inner.map(Successor),
    max_leaves=8,
)


class TestNotation:
    @pytest.mark.parametrize("code, notation", [
        (1, One()),
        (2, Successor(One())),
        (4, Successor(Successor(One()))),
        (3, Limit(0)),
        (75, Limit(2)),
        (8, Successor(Limit(0))),
    ])
    def test_kleene_codes(self, code, notation):
        assert from_kleene(code) == notation
        assert kleene_code(notation) == code

    @pytest.mark.parametrize("code", [0, 6, 9, 10, 45])
    def test_not_notation_codes(self, code):
        with pytest.raises(NotationError):
            from_kleene(code)

    def test_kleene_cap(self):
        assert kleene_code(finite_notation(4)) == 65536
        with pytest.raises(NotationError):
            kleene_code(finite_notation(5))

    @given(st.integers(0, 6), st.integers(0, 10 ** 6), st.booleans())
    def test_compact_codes(self, layers, sequence, limit):
        a = Limit(sequence) if limit else One()
        for _ in range(layers):
            a = Successor(a)
        assert from_compact(compact(a)) == a

    def test_compact_layout(self):
        assert compact(One()) == 0
        assert compact(Successor(One())) == 1 + pair(0, 0)
        assert compact(Limit(9)) == 1 + pair(1, 9)
        with pytest.raises(NotationError):
            from_compact(1 + pair(2, 0))

    @given(st.integers(0, 20), st.integers(0, 20))
    def test_finite_addition(self, m, n):
        total = notation_add(finite_notation(m), finite_notation(n))
        assert finite_value(total) == m + n

    @given(st.integers(0, 10 ** 4))
    def test_adding_one_is_identity(self, sequence):
        a = Successor(Limit(sequence))
        assert notation_add(a, One()) == a

    def test_describe(self):
        assert describe(finite_notation(2)) == "2"
        assert describe(Successor(Limit(5))) == "lim[5]+1"
        with pytest.raises(NotationError):
            finite_value(Limit(5))

    def test_increasing_limit(self):
        sequence = succ_chain_sequence()
        a = notation_lim(sequence, witness="n+1")
        assert a == Limit(sequence)
        assert [finite_value(t) for t in terms(sequence, 4)] == [1, 2, 3, 4]

    def test_rejected_limits(self):
        with pytest.raises(NotationError):
            notation_lim(const_index(compact(finite_notation(1))))
        with pytest.raises(NotationError):
            notation_lim(DIVERGE_INDEX, fuel=1_000)

    def test_machine_addition_matches_host(self):
        a = finite_notation(2)
        total = notation_add(a, Limit(succ_chain_sequence()))
        assert isinstance(total, Limit)
        values = [finite_value(t) for t in terms(total.sequence, 4, fuel=1_000_000)]
        assert values == [3, 4, 5, 6]


class TestSubset:
    def test_partner_found_in_certified_ranges(self):
        verdict = subset_at_stage(const_index(7), finite_set_index([2]), make_delta(3), 1_000)
        assert verdict == related(1_000, True)

    def test_missing_partner_in_certified_range(self):
        verdict = subset_at_stage(finite_set_index([0]), finite_set_index([1, 2]), make_delta(3), 1_000)
        assert verdict.unrelated and verdict.is_final

    def test_lagged_infinite_ranges(self):
        verdict = subset_at_stage(DOUBLING, IDENT_INDEX, make_id(), 10_000, tested_stage=lag(10_000))
        assert verdict.related and not verdict.is_final

    def test_uncertified_gaps_stay_unknown(self):
        verdict = subset_at_stage(IDENT_INDEX, DOUBLING, make_id(), 400, tested_stage=100)
        assert verdict.answer is Answer.UNKNOWN
        assert 1 in verdict.missing

    def test_repeated_stages(self):
        verdicts = subset_certified(const_index(3), finite_set_index([3, 4]), make_id(), [1_000, 4_000])
        assert [v.related for v in verdicts] == [True, True]


class TestJump:
    def test_constant_enumerations(self):
        J = jump(make_delta(3))
        assert query(J, const_index(7), const_index(2), 1_000) == related(1_000, True)
        verdict = query(J, const_index(0), const_index(1), 1_000)
        assert verdict.unrelated and verdict.is_final
        assert query(J, 12345, 12345, 0).related

    def test_same_set_at_different_speeds(self):
        verdict = query(JumpOf(make_id()), DOUBLING, SLOW_DOUBLING, 10_000)
        assert verdict.related and not verdict.is_final

    def test_different_sets_are_not_related(self):
        verdict = query(JumpOf(make_id()), DOUBLING, IDENT_INDEX, 10_000)
        assert verdict.answer is Answer.UNKNOWN


class TestIterate:
    def test_finite_iterates(self):
        E = make_delta(2)
        assert iterate_jump_finite(E, 2) == JumpOf(JumpOf(E))
        with pytest.raises(ValueError):
            iterate_jump_finite(E, 0)

    def test_successor_unfolding(self):
        E = make_delta(2)
        assert iterate_jump_transfinite(E, One()) == E
        assert iterate_jump_transfinite(E, finite_notation(2)) == iterate_jump_finite(E, 2)
        assert iterate_jump_transfinite(E, Successor(Limit(5))) == JumpOf(LimitIterate(E, 5))

    @settings(max_examples=50)
    @given(notations, st.sampled_from([make_delta(2), make_delta(3), make_id()]))
    def test_successor_unfolds_one_jump(self, a, E):
        assert iterate_jump_transfinite(E, Successor(a)) == JumpOf(iterate_jump_transfinite(E, a))

    @settings(max_examples=20)
    @given(st.integers(0, 1), st.sampled_from([0, 1, 2, 3, 7]), st.sampled_from([0, 1, 2, 3, 7]))
    def test_limit_columns_match_finite_iterates(self, column, x, y):
        E = make_delta(3)
        L = iterate_jump_transfinite(E, Limit(succ_chain_sequence()))
        cx, cy = const_index(x), const_index(y)
        component = iterate_jump_finite(E, column + 1)
        assert query(L, pair(column, cx), pair(column, cy), 1_000) == query(component, cx, cy, 1_000)

    def test_limit_columns_are_separate(self):
        L = LimitIterate(make_delta(3), succ_chain_sequence())
        verdict = query(L, pair(0, 5), pair(1, 5), 1_000)
        assert verdict.unrelated and verdict.is_final

# -*- coding: utf-8 -*-
"""
kernel：配对、编号、文本语法、求值、分阶段枚举与递归定理
"""

import pytest
from hypothesis import given, strategies as st

from app.core.exception import ConstructionError, ProgramSyntaxError
from app.kernel.analysis import range_bound
from app.kernel.catalog import ConstantSet, FiniteSet, compile_spec, finite_set_index, list_index, table_index
from app.kernel import enumeration
from app.kernel.enumeration import (
    View, certified_set, clear_streams, discovery_stage, enumerate_W, fuel_at, lag, max_input, set_at, stream,
)
from app.kernel.machine import Halted, OutOfFuel, evaluate, run_program
from app.kernel.numbering import DIVERGE_INDEX, decode, encode, is_canonical, nibbles_to_index
from app.kernel.pairing import decode_list, list_code, pair, tuple_code, unpair, untuple
from app.kernel.recursion import IDENT_INDEX, LEFT_INDEX, const_index, fix, quine, smn, transformer_of
from app.kernel.sexpr import parse, to_text
from app.kernel.syntax import (
    DIVERGE, Add, Clock, Comp, Const, Div, Ident, IfZero, Left, Monus, Opcode, Pair, Right, Succ, Univ, While,
)

naturals = st.integers(min_value=0, max_value=10 ** 6)
small = st.integers(min_value=0, max_value=60)

_leaves = st.sampled_from([Ident(), Succ(), Left(), Right(), Add(), Monus(), Div()]) | \
    st.builds(Const, st.integers(min_value=0, max_value=300))

# 不含 Univ / Clock / Smn：随机编号上的自解释不在这些性质的范围内
programs = st.recursive(
    _leaves,
    lambda inner: st.builds(Pair, inner, inner) | st.builds(Comp, inner, inner)
    | st.builds(IfZero, inner, inner, inner) | st.builds(While, inner, inner),
    max_leaves=8,
)

SUCC_INDEX = encode(Succ())


class TestPairing:
    def test_bijection_on_initial_segment(self):
        for k in range(10_000):
            assert pair(*unpair(k)) == k

    @given(naturals, naturals)
    def test_unpair_inverts_pair(self, m, n):
        assert unpair(pair(m, n)) == (m, n)

    def test_small_values(self):
        assert [pair(0, 0), pair(1, 0), pair(0, 1), pair(2, 0)] == [0, 1, 2, 3]

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            pair(-1, 0)
        with pytest.raises(ValueError):
            unpair(-3)

    @given(st.lists(small, min_size=1, max_size=5))
    def test_tuples(self, items):
        assert untuple(tuple_code(*items), len(items)) == tuple(items)

    @given(st.lists(small, max_size=6))
    def test_list_codes(self, items):
        assert decode_list(list_code(items)) == items


class TestNumbering:
    @given(programs)
    def test_encode_then_decode(self, program):
        index = encode(program)
        assert decode(index) == program
        assert is_canonical(index)

    def test_every_natural_is_an_index(self):
        for k in range(3_000):
            program = decode(k)
            assert is_canonical(encode(program))

    def test_malformed_indices_diverge(self):
        assert decode(0) == DIVERGE
        assert encode(DIVERGE) == DIVERGE_INDEX
        assert not is_canonical(0)

    def test_distinct_programs_distinct_indices(self):
        indices = {encode(p) for p in (Ident(), Succ(), Const(0), Const(1), Pair(Ident(), Ident()))}
        assert len(indices) == 5

    def test_deep_indices_decode(self):
        index = nibbles_to_index([Opcode.PAIR, Opcode.IDENT] * 30_000 + [Opcode.IDENT])
        program = decode(index)
        depth = 0
        while isinstance(program, Pair):
            assert isinstance(program.first, Ident)
            program, depth = program.second, depth + 1
        assert depth == 30_000
        assert encode(decode(index)) == index
        assert to_text(decode(index)).startswith("(pair ident (pair ident")


class TestSurfaceSyntax:
    def test_parse_example(self):
        assert parse("(comp succ (pair (const 3) ident))") == Comp(Succ(), Pair(Const(3), Ident()))

    def test_bare_numbers_are_constants(self):
        assert parse("7") == Const(7)
        assert parse("diverge") == DIVERGE

    @given(programs)
    def test_text_round_trip(self, program):
        assert parse(to_text(program)) == program

    @pytest.mark.parametrize("text", ["", "(comp succ", "(foo 1)", "succ succ", ")", "(const x)"])
    def test_syntax_errors(self, text):
        with pytest.raises(ProgramSyntaxError):
            parse(text)

    def test_prog_embeds_an_index(self):
        assert parse(f"(prog {SUCC_INDEX})") == Succ()


class TestMachine:
    def test_halted_value_and_steps(self):
        e = encode(parse("(comp succ (pair (const 3) ident))"))
        outcome = evaluate(e, 5, 100)
        assert outcome == Halted(pair(3, 5) + 1, 5)

    def test_out_of_fuel(self):
        assert evaluate(DIVERGE_INDEX, 0, 1_000) == OutOfFuel(1_000)
        assert isinstance(evaluate(IDENT_INDEX, 3, 0), OutOfFuel)

    def test_arithmetic(self):
        assert evaluate(encode(Monus()), pair(3, 5), 10).value == 0
        assert evaluate(encode(Monus()), pair(5, 3), 10).value == 2
        assert evaluate(encode(Div()), pair(7, 2), 10).value == 3
        assert evaluate(encode(Div()), pair(7, 0), 10).value == 0

    def test_universal_program(self):
        assert evaluate(encode(Univ()), pair(SUCC_INDEX, 4), 10).value == 5

    def test_clock(self):
        clock = encode(Clock())
        assert evaluate(clock, tuple_code(SUCC_INDEX, 4, 10), 100).value == 6
        assert evaluate(clock, tuple_code(DIVERGE_INDEX, 0, 50), 1_000).value == 0
        assert isinstance(evaluate(clock, tuple_code(DIVERGE_INDEX, 0, 5_000), 100), OutOfFuel)

    def test_while_loop(self):
        countdown = While(Ident(), Comp(Monus(), Pair(Ident(), Const(1))))
        assert run_program(countdown, 5, 200).value == 0

    def test_deep_programs(self):
        e = nibbles_to_index([Opcode.COMP, Opcode.SUCC] * 30_000 + [Opcode.IDENT])
        assert evaluate(e, 5, 100_000) == Halted(30_005, 60_001)
        assert evaluate(e, 5, 1_000) == OutOfFuel(1_000)
        assert range_bound(e) is None

    @given(programs, small, st.integers(min_value=0, max_value=200), st.integers(min_value=0, max_value=200))
    def test_fuel_monotonicity(self, program, x, fuel, extra):
        first = run_program(program, x, fuel)
        if isinstance(first, Halted):
            assert run_program(program, x, fuel + extra) == first

    @given(programs, small, st.integers(min_value=0, max_value=300))
    def test_cached_evaluation_matches_direct(self, program, x, fuel):
        outcome = evaluate(encode(program), x, fuel)
        assert outcome.halted == run_program(program, x, fuel).halted


class TestStages:
    def test_schedule(self):
        assert max_input(0) == -1
        assert max_input(4) == 1
        assert fuel_at(0, 4) == 4
        assert fuel_at(1, 4) == 2
        assert fuel_at(2, 4) == -1
        assert discovery_stage(0, 5) == 5
        assert discovery_stage(3, 2) == 16
        assert lag(10_000) == 2_500

    @given(programs, st.integers(min_value=0, max_value=300), st.integers(min_value=0, max_value=300))
    def test_stage_monotonicity(self, program, s1, s2):
        low, high = sorted((s1, s2))
        e = encode(program)
        assert set_at(e, low) <= set_at(e, high)
        assert set_at(e, low, View.DOMAIN) <= set_at(e, high, View.DOMAIN)

    def test_doubling_range(self):
        doubling = encode(parse("(comp add (pair ident ident))"))
        assert set_at(doubling, 100) == frozenset(range(0, 20, 2))
        assert certified_set(doubling, 100) is None

    def test_domain_view(self):
        assert {d.element for d in enumerate_W(IDENT_INDEX, 100)} == set(range(10))
        assert set_at(DIVERGE_INDEX, 100, View.DOMAIN) == frozenset()

    def test_certified_finite_sets(self):
        e = finite_set_index([5, 1, 3])
        assert certified_set(e, 10_000) == frozenset({1, 3, 5})
        assert certified_set(e, 10_000, View.DOMAIN) is None
        assert certified_set(const_index(7), 100) == frozenset({7})

    def test_list_and_table(self):
        assert set_at(list_index([4, 2, 4]), 10_000) == frozenset({2, 4})
        table = table_index([0, 1, 4, 9])
        assert [evaluate(table, k, 10_000).value for k in range(6)] == [0, 1, 4, 9, 9, 9]

    def test_range_bound(self):
        assert range_bound(const_index(7)) == frozenset({7})
        assert range_bound(IDENT_INDEX) is None

    def test_stream_cache_evicts_least_recent(self, monkeypatch):
        monkeypatch.setattr(enumeration, "STREAM_CACHE_SIZE", 2)
        clear_streams()
        first, second = stream(3), stream(4)
        assert stream(3) is first
        stream(5)
        assert stream(3) is first
        assert stream(4) is not second
        clear_streams()


# φ_f 为全函数的变换
_TRANSFORMERS = {
    "quine": transformer_of(LEFT_INDEX),
    "constant": const_index(SUCC_INDEX),
    "successor": transformer_of(encode(Comp(Succ(), Left()))),
    "shifted": transformer_of(encode(Add())),
    "identity": transformer_of(encode(Right())),
}


class TestRecursion:
    @given(st.sampled_from([IDENT_INDEX, SUCC_INDEX, encode(Add()), encode(Monus()), encode(Left())]),
           small, small, st.integers(min_value=1, max_value=50))
    def test_smn_agreement(self, e, x, y, fuel):
        direct = evaluate(e, pair(x, y), fuel)
        if isinstance(direct, Halted):
            specialised = evaluate(smn(e, x), y, 8 * fuel + 8)
            assert isinstance(specialised, Halted)
            assert specialised.value == direct.value

    def test_smn_non_canonical(self):
        assert evaluate(smn(0, 3), 4, 10_000) == OutOfFuel(10_000)

    @given(small, small)
    def test_smn_injective(self, x, y):
        if x != y:
            assert smn(SUCC_INDEX, x) != smn(SUCC_INDEX, y)

    @pytest.mark.parametrize("name", sorted(_TRANSFORMERS))
    def test_fixed_points(self, name):
        f = _TRANSFORMERS[name]
        n = fix(f)
        image = evaluate(f, n, 10_000)
        assert isinstance(image, Halted)
        for x in range(4):
            mine, theirs = evaluate(n, x, 100_000), evaluate(image.value, x, 100_000)
            assert isinstance(mine, Halted) and isinstance(theirs, Halted)
            assert mine.value == theirs.value

    def test_quine(self):
        q = quine()
        assert evaluate(q, 3, 100_000).value == q

    def test_compiled_specs(self):
        assert compile_spec(ConstantSet(4)) == const_index(4)
        assert compile_spec(FiniteSet((2, 1))) == finite_set_index([1, 2])
        with pytest.raises(ConstructionError) as info:
            compile_spec("not a spec")
        assert info.value.construction == "compile_spec"

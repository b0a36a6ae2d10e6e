# -*- coding: utf-8 -*-
"""
constructions：归约见证、故障注入、目录与各类构造
"""

import pytest

from app.constructions import basic, ceers, hyperarithmetic as hyp, registry
from app.constructions.monotone import monotone_catalog, monotone_finite_witness
from app.constructions.verify import run_item, sample_pairs, verify, verify_membership
from app.constructions.witness import Report, ReductionWitness, swapped_outputs
from app.core.bus.events import EventType
from app.core.exception import ConstructionError, MonotoneWitnessError
from app.kernel.catalog import finite_set_index, list_index
from app.kernel.enumeration import View, set_at
from app.kernel.machine import evaluate
from app.kernel.numbering import DIVERGE_INDEX, encode
from app.kernel.pairing import pair
from app.kernel.recursion import IDENT_INDEX, LEFT_INDEX, const_index, transformer_of
from app.kernel.sexpr import parse
from app.relations.manifest import parse_suite_item
from app.relations.presentation import (
    EA, CeRestriction, Ceer, JumpOf, Product, SetRelation, make_delta, make_e1_ce, make_id, sum_code,
)
from app.relations.query import query

SUCC_INDEX = encode(parse("succ"))
SMALL_EDGES = [(0, 1), (2, 3), (3, 5)]


def _item(witness, **fields):
    return parse_suite_item({"witness": witness, **fields}, "$")


class TestWitness:
    def test_report(self):
        report = Report("w", 3, 10)
        assert report.passed
        assert report.to_dict() == {"witness": "w", "samples": 3, "confirmations": 0, "refutations": [],
                                    "unknowns": 0, "stage": 10, "trend_agreements": 0}
        report.refutations.append({"m": 0, "n": 1})
        assert not report.passed

    def test_swapped_outputs(self):
        w = basic.identity_witness(make_id())
        swapped = swapped_outputs(w)
        assert [swapped.image(x, 1_000) for x in (0, 1, 4, 5)] == [4, 1, 0, 5]
        assert swapped.provenance == "identity+swap(0,4)"

    def test_sample_pairs_follow_cantor_order(self):
        assert sample_pairs(4) == [(0, 0), (1, 0), (0, 1), (2, 0)]


class TestBasic:
    def test_const_into_jump_is_confirmed(self, bus):
        report = verify(basic.const_into_jump(make_delta(3)), samples=15, stage=2_000)
        assert report.passed
        assert report.confirmations == 15

    def test_injected_fault_is_refuted(self, bus):
        refuted = []
        bus.subscribe(EventType.VERIFY_REFUTATION, refuted.append)
        faulty = swapped_outputs(basic.const_into_jump(make_delta(4)))
        report = verify(faulty, stage=2_000, pairs=[(0, 3), (4, 4), (1, 2)])
        assert [(row["m"], row["n"]) for row in report.refutations] == [(0, 3)]
        assert report.confirmations == 2
        assert [e.witness for e in refuted] == [faulty.provenance]

    def test_map_jump_and_composition(self):
        assert evaluate(basic.map_jump_index(SUCC_INDEX, IDENT_INDEX), 3, 1_000).value == 4
        lifted = basic.map_jump(basic.const_into_jump(make_delta(2)))
        assert lifted.source == JumpOf(make_delta(2))
        assert lifted.target == JumpOf(JumpOf(make_delta(2)))
        composed = basic.compose_witnesses(basic.identity_witness(make_delta(2)),
                                           basic.const_into_jump(make_delta(2)))
        assert composed.provenance == "const_into_jump.identity"
        assert composed.image(5, 10_000) == const_index(5)

    def test_oplus_split_and_merge(self):
        e = list_index([sum_code(3, False), sum_code(5, True)])
        left, right = basic.oplus_split(e)
        assert set_at(left, 10_000) == frozenset({3})
        assert set_at(right, 10_000) == frozenset({5})
        merged = basic.product_merge(const_index(3), const_index(5))
        assert set_at(merged, 10_000) == frozenset({sum_code(3, False), sum_code(5, True)})

    def test_idplus_up_columns(self):
        e = const_index(const_index(4))
        assert evaluate(basic.idplus_up(e), pair(2, 0), 10_000).value == pair(2, 4)

    @pytest.mark.slow
    def test_oplus_split_witness(self, bus):
        w = basic.oplus_split_witness(make_delta(2), make_delta(3))
        assert w.target == Product(JumpOf(make_delta(2)), JumpOf(make_delta(3)))
        assert verify(w, samples=100, stage=2_000).passed

    @pytest.mark.slow
    def test_product_merge_witness(self, bus):
        w = basic.product_merge_witness(make_delta(2), make_delta(3))
        assert w.source == Product(JumpOf(make_delta(2)), JumpOf(make_delta(3)))
        report = verify(w, samples=100, stage=2_000)
        assert report.passed
        assert report.samples == 100

    @pytest.mark.slow
    @pytest.mark.parametrize("witness", [basic.idplus_up_witness, basic.idplus_down_witness])
    def test_idplus_witnesses(self, bus, witness):
        report = verify(witness(), samples=15, stage=1_000)
        assert report.passed
        assert report.notes


class TestCeers:
    def test_reference_columns(self):
        assert ceers.aux_columns_reference(range(12), [], 3) == [(0,), (0, 1), (0, 1, 2)]
        assert ceers.aux_columns_reference(range(12), SMALL_EDGES, 4) == \
            [(0,), (0, 1, 2), (0, 1, 2, 3, 4), (0, 1, 2, 3, 4, 5, 6)]

    def test_columns_are_initial_intervals(self):
        E = Ceer(list_index([pair(a, b) for a, b in SMALL_EDGES]))
        reference = ceers.aux_columns_reference(range(12), SMALL_EDGES, 4)
        assert set_at(ceers.aux_column_index(E, 0), 4_000) == frozenset({0})
        for n in range(4):
            observed = set_at(ceers.aux_column_index(E, n), 4_000)
            assert 0 in observed
            assert observed <= set(reference[n])

    def test_aux_set_witness_shape(self):
        E = Ceer(list_index([]))
        _, witness = ceers.aux_set_A(E)
        assert witness.source == make_id()
        assert witness.target == JumpOf(E)
        assert witness.notes

    @pytest.mark.slow
    def test_aux_set_witness_on_small_pairs(self, bus):
        E = Ceer(list_index([pair(a, b) for a, b in SMALL_EDGES]))
        _, witness = ceers.aux_set_A(E)
        report = verify(witness, stage=2_000, pairs=[(m, n) for m in range(8) for n in range(8)])
        assert report.passed
        # 只有对角线上的两侧都是 final
        assert report.confirmations == 8

    def test_upperbound_target(self):
        w = ceers.upperbound_reduction(Ceer(list_index([pair(0, 1)])))
        assert w.source == JumpOf(Ceer(list_index([pair(0, 1)])))
        assert w.describe()["provenance"] == "upperbound"

    def test_nonhhs_union_of_family(self):
        below_three = encode(parse("(ifz (comp monus (pair ident 2)) 0 diverge)"))
        a = finite_set_index([1])
        w = ceers.nonhhs_high_reduction(transformer_of(LEFT_INDEX), a, samples=4, stage=1_000)
        assert w.source == CeRestriction(SetRelation.EQUALITY, View.DOMAIN)
        assert w.target == JumpOf(EA(a))
        assert set_at(w.image(below_three, 10_000), 10_000) == frozenset({0, 1, 2})
        with pytest.raises(ConstructionError):
            ceers.nonhhs_high_reduction(const_index(const_index(0)), a, samples=2, stage=1_000)

    def test_full_columns_index(self):
        W = set_at(ceers.full_columns_index([0, 3], tail_from=5), 4_000, View.DOMAIN)
        assert {pair(0, 2), pair(3, 1), pair(6, 0)} <= W
        assert not {pair(1, 0), pair(4, 0), pair(2, 3)} & W

    def test_e1ce_partner_copies_columns(self):
        e, e2, _ = ceers.e1ce_sample_checks()[0]
        source = pair(IDENT_INDEX, 1)
        x = evaluate(ceers.e1ce_index(e), source, 1_000).value
        [partner] = ceers.e1ce_hint(3)(source, x)
        assert partner == pair(x, 3)
        y = evaluate(ceers.e1ce_index(e2), partner, 1_000).value
        seen = set_at(x, 4_000)
        assert {pair(0, 1), pair(3, 0)} <= seen
        assert not {pair(1, 0), pair(4, 0)} & seen
        assert query(CeRestriction(SetRelation.EQUALITY, View.RANGE), x, y, 4_000).related

    @pytest.mark.slow
    def test_e1ce_column_check(self):
        (e, same_tail, _), (_, other_tail, _) = ceers.e1ce_sample_checks()
        verdict = ceers.e1ce_column_check(e, same_tail, 8_000)
        assert verdict.related and not verdict.is_final
        assert not ceers.e1ce_column_check(e, other_tail, 8_000).related

    @pytest.mark.slow
    def test_e1ce_item(self, bus, manifest):
        report = run_item(_item("e1ce", stage=8_000), manifest, 100, 100, 1)
        assert report.passed
        assert report.trend_agreements == 1
        assert [row["expected"] for row in report.extra["column_checks"]] == ["related", "unrelated"]


class TestHyperarithmetic:
    def test_pi04_truth(self, manifest):
        assert hyp.pi04_truth(manifest.program("halts_always"), 0, fuel=500)
        assert not hyp.pi04_truth(manifest.program("halts_never"), 0, fuel=500)
        n_zero = manifest.program("halts_when_n_zero")
        assert hyp.pi04_truth(n_zero, 0, fuel=500)
        assert not hyp.pi04_truth(n_zero, 1, fuel=500)

    def test_counterexample_window(self):
        assert hyp.counterexample_intersections([1], [1, 2], 4) == [frozenset({0, 4, 5})]

    @pytest.mark.slow
    def test_machine_scan_matches_prediction(self):
        e, e0 = hyp.counterexample_pair(finite_set_index([1]), finite_set_index([1, 2]))
        rows = hyp.counterexample_machine_scan(e, e0, [1], [1, 2], 3, 4_000)
        assert [row["W"] for row in rows if row["predicted"]] == [[0, 4, 5]]
        assert len(rows) == 8
        assert all(row["agrees"] for row in rows)
        assert [row["answer"] for row in rows if row["predicted"]] == ["related"]

    def test_counterexample_needs_containment(self):
        with pytest.raises(ConstructionError):
            hyp.counterexample_pair(list_index([1, 2]), list_index([1]))

    def test_leaf_membership(self):
        code = hyp.leaf_code(hyp.EVENS)
        assert hyp.window_membership(code, 4, 1_000)
        assert not hyp.window_membership(code, 3, 1_000)

    def test_threshold_membership(self, manifest):
        leaves = hyp.threshold_leaves(hyp.EVENS, manifest.program("empty"))
        code = hyp.depth_one_code(leaves, (3, 3))
        # 每个 p 都有 q ≥ p 落在窗口内
        assert hyp.window_membership(code, 2, 1_000)
        assert not hyp.window_membership(code, 1, 1_000)

    @pytest.mark.slow
    def test_pi04_item_has_no_refutations(self, bus, manifest):
        item = _item("pi04", params={"i0": "halts_always", "ns": [0, 1]}, stage=400)
        report = run_item(item, manifest, 400, 400, 4)
        assert report.passed
        assert report.extra["side_condition"]["unrelated"] == 0

    @pytest.mark.slow
    @pytest.mark.parametrize("name, truths", [
        ("halts_always", [True, True]),
        ("halts_never", [False, False]),
        ("halts_when_n_zero", [True, False]),
    ])
    def test_pi04_catalog_against_window_truth(self, bus, manifest, name, truths):
        i0 = manifest.program(name)

        def truth(n):
            return hyp.pi04_truth(i0, n, window=8)

        assert [truth(n) for n in (0, 1)] == truths
        report = verify_membership(hyp.pi04_reduction(i0), truth, (0, 1), [10_000], bus)
        assert report.passed
        assert report.extra["side_condition"]["unrelated"] == 0
        assert report.confirmations + report.trend_agreements + report.unknowns == 2


class TestMonotone:
    def test_union_with_seven(self):
        witness = monotone_finite_witness(monotone_catalog()["union-7"], DIVERGE_INDEX, 7)
        check = witness.check(1_000)
        assert check["subset"] and check["contains_x"] and check["finite"]
        assert check["domain"] == []

    def test_uncertified_point(self):
        with pytest.raises(MonotoneWitnessError):
            monotone_finite_witness(IDENT_INDEX, DIVERGE_INDEX, 3, fuel=1_000)

    def test_catalog(self):
        assert sorted(monotone_catalog()) == ["identity", "prepend-0", "shift", "union-7"]


class TestRegistry:
    def test_names_and_summaries(self):
        names = registry.construction_names()
        assert {"const_into_jump", "aux_set_A", "pi04", "monotone", "counterexample"} <= set(names)
        assert list(registry.summaries()) == names

    def test_unknown_construction(self, manifest):
        with pytest.raises(ConstructionError):
            registry.get_construction("nope")
        with pytest.raises(ConstructionError):
            run_item(_item("nope"), manifest, 100, 100, 1)

    def test_build_from_manifest(self, manifest):
        built = registry.build("const_into_jump", {"E": "delta3"}, manifest)
        assert isinstance(built, ReductionWitness)
        assert built.target == JumpOf(make_delta(3))

    @pytest.mark.parametrize("name, params", [
        ("ea_shrink", {}),
        ("ea_shrink", {"b_elem": -1, "c": "is_two", "a": "one_two", "b": "one_only"}),
        ("embedding", {"c": 6, "a": "two"}),
        ("aux_set_A", {"E": "delta3"}),
        ("pi04", {"i0": [1]}),
    ])
    def test_parameter_errors(self, manifest, name, params):
        with pytest.raises(ConstructionError):
            registry.build(name, params, manifest)

    def test_embedding_targets(self, manifest):
        built = registry.build("embedding", {"c": "one", "a": "two"}, manifest)
        assert built.source == JumpOf(JumpOf(make_id()))
        assert built.target == JumpOf(JumpOf(JumpOf(make_id())))

    def test_light_high_and_closed_pair(self, manifest):
        light = registry.build("light_high", {}, manifest)
        assert light.source == CeRestriction(SetRelation.EQUALITY, View.DOMAIN)
        assert light.target == JumpOf(make_id())
        closed = registry.build("closed_pair", {}, manifest)
        assert closed.source == Product(make_id(), make_id())
        assert closed.target == JumpOf(JumpOf(make_id()))

    def test_e1ce_case(self, manifest):
        built = registry.build("e1ce", {}, manifest)
        assert isinstance(built, registry.E1CeCase)
        assert built.witness.source == make_e1_ce()
        assert [expected for _, _, expected in built.checks] == [True, False]
        assert built.describe()["threshold"] == 3

    def test_fault_injection_item(self, bus, manifest):
        item = _item("const_into_jump", params={"E": "delta4"}, stage=2_000, inject_fault=True,
                     pairs=[[0, 3], [1, 2]])
        report = run_item(item, manifest, 100, 100, 1)
        assert [(row["m"], row["n"]) for row in report.refutations] == [(0, 3)]

    def test_monotone_item(self, bus, manifest):
        item = _item("monotone", params={"f": "identity", "e": "even_list", "x": 2}, stage=1_000)
        report = run_item(item, manifest, 1_000, 100_000, 1)
        assert report.passed
        assert report.confirmations == 3

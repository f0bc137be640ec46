"""Benchmark evaluators, closed-form fronts, and structure predicates.

Frozen literal values below were produced by the independent brute-force
oracles in emoabench.oracle and by hand evaluation of the definitions, then
pinned.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from emoabench.benchmarks import (
    ProblemInstance,
    eval_lotz,
    eval_mojzj,
    eval_momm,
    eval_oneminmax,
    incomparable_family,
    incomparable_family_instance,
    inner_level,
    is_inner_pareto_optimum,
    is_pareto_optimal,
    jump,
    jump_value,
    parse_problem,
)
from emoabench.core import BitString, incomparable


class TestJump:
    def test_plateau_and_valley(self):
        # n'=6, k=2: fitness k+|y| outside the valley, n'-|y| inside
        assert jump_value(0, 6, 2) == 2
        assert jump_value(4, 6, 2) == 6
        assert jump_value(5, 6, 2) == 1  # valley
        assert jump_value(6, 6, 2) == 8  # optimum

    def test_jump_on_bitstring(self):
        assert jump(BitString.from_string("111111"), 2) == 8
        assert jump(BitString.from_string("111110"), 2) == 1

    def test_bad_gap(self):
        with pytest.raises(ValueError):
            jump(BitString.from_string("1111"), 0)


class TestInstanceValidation:
    def test_bad_kind(self):
        with pytest.raises(ValueError):
            ProblemInstance("nope", 8, 2)

    def test_block_divisibility(self):
        with pytest.raises(ValueError):
            ProblemInstance.mojzj(9, 4, 2)

    def test_gap_range(self):
        with pytest.raises(ValueError):
            ProblemInstance.mojzj(8, 4, 3)  # k > n'/2 = 2

    def test_k_only_for_jump_variant(self):
        with pytest.raises(ValueError):
            ProblemInstance("omm", 8, 2, 1)

    def test_biobjective_kinds_fix_m(self):
        with pytest.raises(ValueError):
            ProblemInstance("lotz", 8, 4)

    def test_nprime(self):
        assert ProblemInstance.mojzj(8, 4, 2).nprime == 4
        assert ProblemInstance.oneminmax(10).nprime == 10


class TestEvaluators:
    def test_mojzj_frozen_values(self):
        inst = ProblemInstance.mojzj(8, 4, 2)
        # blocks read left to right; first block drives the first pair
        assert eval_mojzj(BitString.from_string("11110000"), inst) == (6, 2, 2, 6)
        assert eval_mojzj(BitString.from_string("11001100"), inst) == (4, 4, 4, 4)
        assert eval_mojzj(BitString.from_string("11100100"), inst) == (1, 3, 3, 1)

    def test_momm_counts_zeros_then_ones_per_block(self):
        inst = ProblemInstance.momm(8, 4)
        assert eval_momm(BitString.from_string("11110000"), inst) == (0, 4, 4, 0)
        assert eval_momm(BitString.from_string("11001100"), inst) == (2, 2, 2, 2)

    def test_momm_equals_gap_one_jump_with_pair_swap(self):
        # per objective pair (a, b): jump variant at k=1 gives (b+1, a+1)
        momm = ProblemInstance.momm(12, 4)
        jz = ProblemInstance.mojzj(12, 4, 1)
        for mask in range(0, 1 << 12, 7):
            x = BitString(12, mask)
            mm = eval_momm(x, momm)
            jj = eval_mojzj(x, jz)
            for pair in range(2):
                assert mm[2 * pair] == jj[2 * pair + 1] - 1
                assert mm[2 * pair + 1] == jj[2 * pair] - 1

    def test_oneminmax(self):
        assert eval_oneminmax(BitString.from_string("0110")) == (2, 2)
        assert eval_oneminmax(BitString.zeros(5)) == (5, 0)

    def test_lotz(self):
        assert eval_lotz(BitString.from_string("11010")) == (2, 1)
        assert eval_lotz(BitString.from_string("01101")) == (0, 0)
        assert eval_lotz(BitString.ones(4)) == (4, 0)
        assert eval_lotz(BitString.zeros(4)) == (0, 4)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            ProblemInstance.oneminmax(5).evaluate(BitString.zeros(4))

    @given(st.integers(min_value=0, max_value=(1 << 12) - 1))
    def test_mask_fast_path_matches_bitstring_path(self, mask):
        for inst in (
            ProblemInstance.mojzj(12, 4, 2),
            ProblemInstance.momm(12, 6),
            ProblemInstance.oneminmax(12),
            ProblemInstance.lotz(12),
        ):
            assert inst.evaluate_mask(mask) == inst.evaluate(BitString(12, mask))

    @given(st.integers(min_value=0, max_value=(1 << 12) - 1))
    def test_lotz_matches_definition(self, mask):
        x = BitString(12, mask)
        bits = x.bits
        leading = 0
        for b in bits:
            if b != 1:
                break
            leading += 1
        trailing = 0
        for b in reversed(bits):
            if b != 0:
                break
            trailing += 1
        assert eval_lotz(x) == (leading, trailing)


class TestFronts:
    def test_mojzj_front_size_formula(self):
        inst = ProblemInstance.mojzj(8, 4, 2)
        front = inst.pareto_front()
        assert front.size == 9  # (n' - 2k + 3)^(m/2) with n'=4, k=2
        assert (6, 2, 2, 6) in front.points
        assert (4, 4, 4, 4) in front.points

    def test_front_values_per_pair(self):
        # n'=6, k=2: attainable first coordinates {2} + [4..6] + {8}
        inst = ProblemInstance.mojzj(6, 2, 2)
        assert inst.pareto_front().points == {
            (2, 8), (4, 6), (5, 5), (6, 4), (8, 2)
        }

    def test_biobjective_fronts(self):
        assert ProblemInstance.oneminmax(6).pareto_front().size == 7
        assert ProblemInstance.lotz(5).pareto_front().points == {
            (i, 5 - i) for i in range(6)
        }

    def test_momm_front_is_full_value_grid(self):
        inst = ProblemInstance.momm(8, 4)
        assert inst.pareto_front().size == 25  # (n'+1)^(m/2)


class TestParetoPredicates:
    def test_extreme_and_interior_blocks_are_optimal(self):
        inst = ProblemInstance.mojzj(8, 4, 2)
        assert is_pareto_optimal(BitString.from_string("11110000"), inst)
        assert is_pareto_optimal(BitString.from_string("11001100"), inst)
        assert not is_pareto_optimal(BitString.from_string("11100100"), inst)

    def test_inner_optimum_excludes_extreme_blocks(self):
        inst = ProblemInstance.mojzj(8, 4, 2)
        assert is_inner_pareto_optimum(BitString.from_string("11001100"), inst)
        assert not is_inner_pareto_optimum(BitString.from_string("11110000"), inst)

    def test_inner_level_counts_interior_blocks(self):
        inst = ProblemInstance.mojzj(8, 4, 2)
        assert inner_level(BitString.from_string("11001100"), inst) == 2
        assert inner_level(BitString.from_string("11110000"), inst) == 0
        assert inner_level(BitString.from_string("11110011"), inst) == 1

    def test_predicates_require_jump_variant(self):
        with pytest.raises(ValueError):
            is_pareto_optimal(BitString.zeros(4), ProblemInstance.oneminmax(4))


class TestIncomparableFamily:
    def test_objective_values(self):
        inst = incomparable_family_instance(8)
        assert inst == ProblemInstance.mojzj(16, 4, 4)
        family = incomparable_family(8, 3)
        values = [inst.evaluate(x) for x in family]
        assert values == [(5, 1, 3, 7), (6, 2, 2, 6), (7, 3, 1, 5)]

    def test_pairwise_incomparable(self):
        inst = incomparable_family_instance(10)
        vals = [inst.evaluate(x) for x in incomparable_family(10, 4)]
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                assert incomparable(vals[i], vals[j])

    def test_count_bounds(self):
        with pytest.raises(ValueError):
            incomparable_family(8, 4)  # at most k-1 = 3 members
        with pytest.raises(ValueError):
            incomparable_family(7, 1)  # odd block length


class TestParseProblem:
    def test_round_trip(self):
        for spec in ("mojzj:n=8,m=4,k=2", "momm:n=8,m=4", "omm:n=20", "lotz:n=20"):
            assert str(parse_problem(spec)) == spec

    def test_rejects_bad_specs(self):
        for bad in ("nope:n=4", "mojzj:n=8,m=4", "omm:n=20,m=2", "omm:n=x", "omm:n=20,n=20"):
            with pytest.raises(ValueError):
                parse_problem(bad)

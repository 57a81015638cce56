import pytest

from src.core.matching import Matching
from src.core.problem import Objective, Regime
from src.core.verify import check_solution, is_perfect, matching_size, objective_value, verify_solution
from src.errors import BudgetExceeded, InvalidMatching, RegimeViolation, ValueMismatch
from src.reductions.gadgets import variable_gadget

from .conftest import make_problem


def test_sizes(pair):
    assert matching_size(Matching.empty(2)) == 0
    assert not is_perfect(pair, Matching.empty(2))
    m = pair.matching([(1, 2)])
    assert matching_size(m) == 1
    assert is_perfect(pair, m)


def test_variable_gadget_matching_is_perfect():
    gadget = variable_gadget()
    assert matching_size(gadget.matchings["M1"]) == 4
    assert is_perfect(gadget.instance, gadget.matchings["M1"])


def test_empty_deviator_set_accepts_empty_matching(ordered_cycle):
    p = make_problem(ordered_cycle, budget=0)
    assert verify_solution(p, Matching.empty(3))
    assert check_solution(p, Matching.empty(3)) == 0


def test_deviator_pair_exceeds_zero_budget(ordered_cycle):
    p = make_problem(ordered_cycle, deviators={1, 2, 3}, budget=0)
    m = ordered_cycle.matching([(1, 2)])
    assert not verify_solution(p, m)
    with pytest.raises(BudgetExceeded):
        check_solution(p, m)
    assert objective_value(p, m) == 1
    assert objective_value(p.with_objective(Objective.BLOCKING_AGENTS), m) == 2


def test_claimed_value_must_match(ordered_cycle):
    p = make_problem(ordered_cycle, deviators={1, 2, 3})
    m = ordered_cycle.matching([(1, 2)])
    with pytest.raises(ValueMismatch) as info:
        check_solution(p, m, claimed=0)
    assert (info.value.claimed, info.value.actual) == (0, 1)
    assert verify_solution(p, m, claimed=1)


def test_perfect_regime_with_odd_agent_count(ordered_cycle):
    p = make_problem(ordered_cycle, regime=Regime.PERFECT)
    with pytest.raises(RegimeViolation):
        check_solution(p, ordered_cycle.matching([(1, 2)]))


def test_perfect_regime_needs_everyone_matched(pair):
    p = make_problem(pair, regime=Regime.PERFECT)
    with pytest.raises(RegimeViolation):
        check_solution(p, Matching.empty(2))
    assert check_solution(p, pair.matching([(1, 2)])) == 0


def test_max_regime_compares_against_maximum_cardinality(ordered_cycle):
    p = make_problem(ordered_cycle, regime=Regime.MAX_CARDINALITY)
    assert not verify_solution(p, Matching.empty(3))
    assert verify_solution(p, ordered_cycle.matching([(2, 3)]))


def test_matching_for_another_instance_is_rejected(pair):
    with pytest.raises(InvalidMatching):
        check_solution(make_problem(pair), Matching.empty(3))

import pytest

from src.core.blocking import deviator_cost
from src.core.instance import Instance
from src.core.problem import Objective, Regime
from src.errors import ListTooLong, RegimeUnsupported
from src.generators import GenSpec, Model, generate
from src.oracle import oracle_solve
from src.shortlist.algorithms import (OddCycleCase, ordered_orientation, solve_shortlist, solve_shortlist_any,
                                      solve_shortlist_max, treat_odd_cycle)
from src.shortlist.components import decompose

from .conftest import make_problem

PATH3 = Instance(prefs=((2,), (1, 3), (2,)))


def test_decompose_path():
    decomposition = decompose(PATH3)
    assert decomposition.paths == ((1, 2, 3),)
    assert decomposition.odd_cycles == ()


def test_decompose_cycle(ordered_cycle):
    assert decompose(ordered_cycle).odd_cycles == ((1, 2, 3),)


def test_decompose_disjoint_union():
    inst = Instance(prefs=((2,), (1, 3), (2,), (5, 6), (6, 4), (4, 5)))
    decomposition = decompose(inst)
    assert decomposition.paths == ((1, 2, 3),)
    assert decomposition.odd_cycles == ((4, 5, 6),)
    assert list(decomposition.cycles()) == [(4, 5, 6)]


def test_decompose_rejects_long_lists():
    inst = Instance(prefs=((2, 3, 4), (1,), (1,), (1,)))
    with pytest.raises(ListTooLong):
        decompose(inst)


def test_two_agent_path_is_stable(pair):
    outcome = solve_shortlist(make_problem(pair, deviators={1, 2}))
    assert outcome.value == 0
    assert outcome.matching.pairs == ((1, 2),)


@pytest.mark.parametrize("objective, value", [(Objective.BLOCKING_AGENTS, 2), (Objective.BLOCKING_PAIRS, 1)])
def test_ordered_cycle_all_deviators(ordered_cycle, objective, value):
    outcome = solve_shortlist_any(make_problem(ordered_cycle, deviators={1, 2, 3}, objective=objective))
    assert outcome.value == value


@pytest.mark.parametrize("objective", list(Objective))
def test_ordered_cycle_with_one_deviator(ordered_cycle, objective):
    outcome = solve_shortlist_any(make_problem(ordered_cycle, deviators={1}, objective=objective))
    assert outcome.value == 0
    assert not outcome.matching.is_matched(3)


def test_odd_cycle_cases(ordered_cycle, solvable_triangle):
    assert ordered_orientation(ordered_cycle, (1, 3, 2)) == (1, 2, 3)
    assert ordered_orientation(solvable_triangle, (1, 2, 3)) is None
    assert treat_odd_cycle(solvable_triangle, (1, 2, 3), {1, 2, 3}).case == OddCycleCase.STABLE
    assert treat_odd_cycle(ordered_cycle, (1, 2, 3), {1}).case == OddCycleCase.CONFORMIST_PAIR
    treatment = treat_odd_cycle(ordered_cycle, (1, 2, 3), {2, 3})
    assert treatment.case == OddCycleCase.CONFORMIST_BEFORE_DEVIATOR
    assert treatment.unmatched == 2
    assert treatment.pairs == ((1, 3),)
    assert treat_odd_cycle(ordered_cycle, (1, 2, 3), {1, 2, 3}).case == OddCycleCase.ALL_DEVIATORS


@pytest.mark.parametrize("deviators, pairs, agents", [
    (set(), 0, 0),
    ({1}, 0, 0),
    ({2, 4, 5}, 1, 1),
    ({1, 2, 3, 4, 5}, 1, 2),
])
def test_odd_cycle_costs(deviators, pairs, agents):
    # a five-agent ordered cycle
    inst = Instance(prefs=((2, 5), (3, 1), (4, 2), (5, 3), (1, 4)))
    treatment = treat_odd_cycle(inst, (1, 2, 3, 4, 5), deviators)
    mate = inst.matching(treatment.pairs).mate
    assert deviator_cost(inst, mate, deviators, Objective.BLOCKING_PAIRS) == pairs
    assert deviator_cost(inst, mate, deviators, Objective.BLOCKING_AGENTS) == agents


def test_even_path_max_matching_is_forced():
    inst = Instance(prefs=((2,), (1, 3), (2, 4), (3,)))
    for deviators in (set(), {2}, {1, 2, 3, 4}):
        outcome = solve_shortlist_max(make_problem(inst, deviators=deviators, regime=Regime.MAX_CARDINALITY))
        assert outcome.matching.pairs == ((1, 2), (3, 4))


def test_odd_path_max_matching_keeps_deviator_happy():
    outcome = solve_shortlist_max(make_problem(PATH3, deviators={2}, regime=Regime.MAX_CARDINALITY))
    assert outcome.matching.pairs == ((1, 2),)
    assert outcome.value == 0


@pytest.mark.parametrize("objective, value", [(Objective.BLOCKING_PAIRS, 1), (Objective.BLOCKING_AGENTS, 2)])
def test_ordered_cycle_max(ordered_cycle, objective, value):
    outcome = solve_shortlist_max(make_problem(ordered_cycle, deviators={1, 2, 3}, objective=objective,
                                               regime=Regime.MAX_CARDINALITY))
    assert outcome.matching.size == 1
    assert outcome.value == value


def test_perfect_regime_on_odd_path_is_infeasible():
    assert not solve_shortlist(make_problem(PATH3, regime=Regime.PERFECT)).is_solution


def test_budget_below_optimum_is_infeasible(ordered_cycle):
    outcome = solve_shortlist(make_problem(ordered_cycle, deviators={1, 2, 3}, budget=0))
    assert not outcome.is_solution


def test_any_algorithm_rejects_other_regimes(ordered_cycle):
    with pytest.raises(RegimeUnsupported):
        solve_shortlist_any(make_problem(ordered_cycle, regime=Regime.MAX_CARDINALITY))
    with pytest.raises(RegimeUnsupported):
        solve_shortlist_max(make_problem(ordered_cycle))


@pytest.mark.parametrize("seed", range(500))
def test_matches_oracle(seed):
    n = 1 + seed % 12
    problem = generate(GenSpec(n=n, model=Model.PATH_CYCLE_ONLY, list_cap=2, num_deviators=seed % (n + 1), seed=seed))
    for regime in Regime:
        for objective in Objective:
            p = problem.with_regime(regime).with_objective(objective)
            optimum = oracle_solve(p).optimum(objective)
            outcome = solve_shortlist(p)
            if optimum is None:
                assert not outcome.is_solution
            else:
                assert outcome.value == optimum


def test_total_is_sum_over_components():
    # ordered 3-cycle next to another ordered 3-cycle
    inst = Instance(prefs=((2, 3), (3, 1), (1, 2), (5, 6), (6, 4), (4, 5)))
    outcome = solve_shortlist_any(make_problem(inst, deviators=set(inst.agents)))
    assert outcome.value == 2

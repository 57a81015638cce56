import pytest

from src.config import Settings
from src.core.instance import Instance
from src.core.outcome import SolveOutcome
from src.core.problem import Objective, Regime
from src.dispatch import Engine, SolveDispatcher
from src.generators import GenSpec, Model, generate
from src.oracle import oracle_solve

from .conftest import make_problem

K4 = Instance(prefs=((2, 3, 4), (3, 4, 1), (4, 1, 2), (1, 2, 3)))
K33 = Instance(prefs=((4, 5, 6), (5, 6, 4), (6, 4, 5), (1, 2, 3), (2, 3, 1), (3, 1, 2)), sides=(0, 0, 0, 1, 1, 1))


@pytest.fixture
def dispatcher() -> SolveDispatcher:
    return SolveDispatcher(Settings(oracle_cap=0))


def assert_agrees_with_optimum(outcome: SolveOutcome, optimum: int | None, budget: int | None):
    if optimum is None or (budget is not None and optimum > budget):
        assert not outcome.is_solution
    elif budget is None:
        assert outcome.is_solution and outcome.value == optimum
    else:
        assert outcome.is_solution and outcome.value <= budget


@pytest.mark.parametrize("seed", range(20))
def test_short_lists_go_to_shortlist(dispatcher, seed):
    problem = generate(GenSpec(n=3 + seed, model=Model.PATH_CYCLE_ONLY, list_cap=2, seed=seed))
    for regime in Regime:
        assert dispatcher.choose(problem.with_regime(regime)) == Engine.SHORTLIST


def test_bipartite_restriction_is_chosen_for_marriage_instances(dispatcher):
    p = make_problem(K33, deviators={1, 4})
    assert p.instance.d_max > 2
    assert dispatcher.choose(p) == Engine.BIPARTITE
    assert dispatcher.choose(p.with_budget(0)) == Engine.BIPARTITE


def test_bipartite_restriction_is_chosen_for_a_lone_deviator(dispatcher):
    # the deviator edges of K4 with one deviator form a star
    assert dispatcher.choose(make_problem(K4, deviators={1})) == Engine.BIPARTITE


def test_fpt_is_chosen_otherwise(dispatcher):
    assert dispatcher.choose(make_problem(K4, deviators={1, 2, 3, 4})) == Engine.FPT
    assert dispatcher.choose(make_problem(K33, deviators={1, 4}, budget=2)) == Engine.FPT
    assert dispatcher.choose(make_problem(K33, deviators={1, 4}, regime=Regime.MAX_CARDINALITY)) == Engine.FPT
    assert dispatcher.choose(make_problem(K4, deviators={1}, regime=Regime.PERFECT)) == Engine.FPT


def test_auto_reports_the_engine_it_used(dispatcher):
    assert dispatcher.solve(make_problem(K4, deviators={1, 2, 3, 4})).engine == Engine.FPT
    dispatch = dispatcher.solve(make_problem(K33, deviators={1, 4}))
    assert dispatch.engine == Engine.BIPARTITE
    assert dispatch.outcome.value == 0


@pytest.mark.parametrize("seed", range(200))
def test_every_engine_matches_oracle(dispatcher, seed):
    n = 2 + seed % 6
    problem = generate(GenSpec(n=n, list_cap=1 + seed % 3, num_deviators=min(seed % 4, n), density=0.6, seed=seed))
    for regime in Regime:
        for objective in Objective:
            p = problem.with_regime(regime).with_objective(objective)
            optimum = oracle_solve(p).optimum(objective)
            for budget in (None, 0, 1):
                for engine in (Engine.AUTO, Engine.FPT, Engine.ORACLE):
                    dispatch = dispatcher.solve(p.with_budget(budget), engine)
                    assert_agrees_with_optimum(dispatch.outcome, optimum, budget)


@pytest.mark.parametrize("seed", range(200))
def test_shortlist_engine_matches_oracle(dispatcher, seed):
    n = 1 + seed % 12
    problem = generate(GenSpec(n=n, model=Model.PATH_CYCLE_ONLY, list_cap=2, num_deviators=seed % (n + 1), seed=seed))
    for regime in Regime:
        for objective in Objective:
            p = problem.with_regime(regime).with_objective(objective)
            optimum = oracle_solve(p).optimum(objective)
            for budget in (None, 0):
                for engine in (Engine.AUTO, Engine.SHORTLIST):
                    dispatch = dispatcher.solve(p.with_budget(budget), engine)
                    assert_agrees_with_optimum(dispatch.outcome, optimum, budget)


@pytest.mark.parametrize("seed", range(200))
def test_bipartite_engine_matches_oracle(dispatcher, seed):
    n = 2 + seed % 9
    model = (Model.SMI_UNIFORM, Model.BIPARTITE_CORE)[seed % 2]
    problem = generate(GenSpec(n=n, model=model, list_cap=1 + seed % 4, num_deviators=min(1 + seed % 3, n),
                               density=0.6, seed=seed))
    for objective in Objective:
        p = problem.with_objective(objective)
        assert oracle_solve(p).optimum(objective) == 0
        for budget in (None, 0):
            dispatch = dispatcher.solve(p.with_budget(budget), Engine.BIPARTITE)
            assert dispatch.outcome.is_solution
            assert dispatch.outcome.value == 0


def test_bipartite_engine_declines_size_regimes(dispatcher):
    p = make_problem(K33, deviators={1, 4}, regime=Regime.MAX_CARDINALITY)
    assert not dispatcher.solve(p, Engine.BIPARTITE).outcome.is_solution

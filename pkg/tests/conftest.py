import pytest

from src.core.instance import Instance
from src.core.problem import DeviatorProblem, Objective, Regime
from src.reductions.cnf import CnfFormula


def make_problem(inst: Instance, deviators=(), objective=Objective.BLOCKING_PAIRS, regime=Regime.ANY,
                 budget=None) -> DeviatorProblem:
    return DeviatorProblem(instance=inst, deviators=frozenset(deviators), objective=objective,
                           regime=regime, budget=budget)


@pytest.fixture
def pair() -> Instance:
    return Instance(prefs=((2,), (1,)))


@pytest.fixture
def ordered_cycle() -> Instance:
    # every agent prefers its successor 1 -> 2 -> 3 -> 1
    return Instance(prefs=((2, 3), (3, 1), (1, 2)))


@pytest.fixture
def solvable_triangle() -> Instance:
    return Instance(prefs=((2, 3), (1, 3), (1, 2)))


@pytest.fixture
def small_smi() -> Instance:
    # m1=1, m2=2, w1=3, w2=4
    return Instance(prefs=((3, 4), (3,), (2, 1), (1,)), sides=(0, 0, 1, 1))


@pytest.fixture
def formula_b() -> CnfFormula:
    return CnfFormula(num_vars=3, clauses=((1, 2, 3), (-1, -2, -3), (1, -2, 3), (-1, 2, -3)))


FORMULA_B_DIMACS = """c satisfied by V1 true, V2 and V3 false
p cnf 3 4
1 2 3 0
-1 -2 -3 0
1 -2 3 0
-1 2 -3 0
"""

import statistics
import time

import numpy as np
import pytest

from src.core.problem import Regime
from src.fpt.solver import solve_fpt
from src.generators import GenSpec, Model, generate
from src.shortlist.algorithms import solve_shortlist

pytestmark = pytest.mark.slow

SIZES = (1000, 2000, 4000)


def _seconds(fn, repeats: int = 3) -> float:
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def _slope(seconds: list[float]) -> float:
    return float(np.polyfit(np.log(SIZES), np.log(seconds), 1)[0])


def test_fpt_three_deviators_under_a_second():
    problem = generate(GenSpec(n=200, list_cap=4, num_deviators=3, seed=11)).with_budget(0)
    assert problem.instance.d_max <= 4
    assert _seconds(lambda: solve_fpt(problem), repeats=5) < 1.0


def test_shortlist_any_is_linear():
    problems = [generate(GenSpec(n=n, model=Model.PATH_CYCLE_ONLY, list_cap=2, seed=n)) for n in SIZES]
    seconds = [_seconds(lambda p=p: solve_shortlist(p)) for p in problems]
    assert _slope(seconds) <= 1.3


def test_shortlist_max_is_at_most_quadratic():
    problems = [generate(GenSpec(n=n, model=Model.PATH_CYCLE_ONLY, list_cap=2, seed=n)).with_regime(Regime.MAX_CARDINALITY)
                for n in SIZES]
    seconds = [_seconds(lambda p=p: solve_shortlist(p)) for p in problems]
    assert _slope(seconds) <= 2.3

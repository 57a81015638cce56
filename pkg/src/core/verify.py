import logging

from ..classic.weighted_matching import max_cardinality_matching
from ..errors import BudgetExceeded, InvalidMatching, RegimeViolation, ValueMismatch, VerificationError
from .blocking import deviator_cost
from .instance import Instance
from .matching import Matching
from .problem import DeviatorProblem, Regime

logger = logging.getLogger(__name__)


def matching_size(m: Matching) -> int:
    return len(m.pairs)


def is_perfect(inst: Instance, m: Matching) -> bool:
    return 2 * len(m.pairs) == inst.num_agents


def objective_value(p: DeviatorProblem, m: Matching) -> int:
    # every deviator blocking pair has a deviator end, so scanning from D is exact
    return deviator_cost(p.instance, m.mate, p.deviators, p.objective, agents=p.deviators)


def check_solution(p: DeviatorProblem, m: Matching, claimed: int | None = None) -> int:
    """Check ``m`` against the problem and return its recomputed value.

    Raises:
        RegimeViolation: ``m`` is not perfect / not maximum-cardinality as the regime asks.
        ValueMismatch: ``claimed`` differs from the recomputed value.
        BudgetExceeded: the value is larger than the problem's budget.
    """
    inst = p.instance
    if m.num_agents != inst.num_agents:
        raise InvalidMatching(f"matching over {m.num_agents} agents given for a {inst.num_agents}-agent instance")
    inst.matching(m.pairs)

    if p.regime == Regime.PERFECT:
        if inst.num_agents % 2:
            raise RegimeViolation(f"no perfect matching exists on {inst.num_agents} agents")
        if not is_perfect(inst, m):
            unmatched = [a for a in inst.agents if not m.is_matched(a)]
            raise RegimeViolation(f"matching is not perfect, unmatched agents {unmatched}")
    elif p.regime == Regime.MAX_CARDINALITY:
        best = max_cardinality_matching(inst).size
        if m.size != best:
            raise RegimeViolation(f"matching has {m.size} pairs, a maximum-cardinality matching has {best}")

    value = objective_value(p, m)
    if claimed is not None and claimed != value:
        raise ValueMismatch(claimed, value)
    if p.budget is not None and value > p.budget:
        raise BudgetExceeded(value, p.budget)
    return value


def verify_solution(p: DeviatorProblem, m: Matching, claimed: int | None = None) -> bool:
    try:
        check_solution(p, m, claimed)
    except VerificationError as e:
        logger.debug("verification failed: %s", e)
        return False
    return True

import logging

from ..core.instance import Instance
from ..core.problem import DeviatorProblem, Regime
from ..errors import RegimeUnsupported

logger = logging.getLogger(__name__)


def companion_ids(agent: int, num_agents: int) -> tuple[int, int]:
    return num_agents + 2 * agent - 1, num_agents + 2 * agent


def smi_to_sri(p: DeviatorProblem) -> DeviatorProblem:
    """Trade the perfectness requirement for two deviating companions per agent.

    Agent a gets companions b¹ (list: b², a) and b² (list: a, b¹), ranked last by
    a in that order. A 0-deviator matching of the result over all matchings
    restricts to a 0-deviator perfect matching of ``p`` and vice versa.
    """
    if p.regime != Regime.PERFECT or p.budget != 0:
        raise RegimeUnsupported(f"companion reduction needs regime perfect with budget 0, "
                                f"got {p.regime} with budget {p.budget}")
    n = p.instance.num_agents
    prefs = [list(p.instance.pref(a)) for a in p.instance.agents]
    companions = []
    for a in p.instance.agents:
        b1, b2 = companion_ids(a, n)
        prefs[a - 1] += [b1, b2]
        companions.append([b2, a])
        companions.append([a, b1])
    inst = Instance(prefs=tuple(tuple(entries) for entries in prefs + companions))
    logger.debug("added %d companions to %d agents", 2 * n, n)
    return DeviatorProblem(instance=inst, deviators=p.deviators | frozenset(range(n + 1, 3 * n + 1)),
                           objective=p.objective, regime=Regime.ANY, budget=0)

"""List completion: making every preference list complete without changing the answer."""
import logging

from ..core.instance import Instance
from ..core.problem import DeviatorProblem

logger = logging.getLogger(__name__)


def complete_lists(p: DeviatorProblem) -> DeviatorProblem:
    """Append every unranked agent to each list in ascending id order.

    Deviators, objective, regime and budget are kept; a bipartition tag no longer applies.
    """
    inst = p.instance
    prefs = []
    for a in inst.agents:
        listed = set(inst.pref(a))
        prefs.append(inst.pref(a) + tuple(b for b in inst.agents if b != a and b not in listed))
    return DeviatorProblem(instance=Instance(prefs=tuple(prefs)), deviators=p.deviators,
                           objective=p.objective, regime=p.regime, budget=p.budget)


def dummy_id(agent: int, s: int, num_agents: int, k: int) -> int:
    return num_agents + (agent - 1) * k + s


def global_order(num_agents: int, k: int) -> list[int]:
    """a1, a1^1..a1^k, a2, a2^1..a2^k, ..."""
    order = []
    for a in range(1, num_agents + 1):
        order.append(a)
        order += [dummy_id(a, s, num_agents, k) for s in range(1, k + 1)]
    return order


def minba_complete(inst: Instance, k: int) -> Instance:
    """Add k dummies per agent and complete every list through the global order.

    Agent a ranks its original list, then a^1..a^k, then everyone else in global
    order. Dummy a^s ranks a first and then follows the global order. With every
    agent a deviator, at most k blocking agents are needed before iff after.
    """
    n = inst.num_agents
    order = global_order(n, k)
    prefs: dict[int, tuple[int, ...]] = {}

    def completed(agent: int, head: list[int]) -> tuple[int, ...]:
        seen = set(head) | {agent}
        return tuple(head + [b for b in order if b not in seen])

    for a in inst.agents:
        own = [dummy_id(a, s, n, k) for s in range(1, k + 1)]
        prefs[a] = completed(a, list(inst.pref(a)) + own)
        for d in own:
            prefs[d] = completed(d, [a])
    logger.debug("completed %d agents with %d dummies each", n, k)
    return Instance(prefs=tuple(prefs[agent] for agent in range(1, (k + 1) * n + 1)))


def minba_label(agent: int, num_agents: int, k: int) -> str:
    if agent <= num_agents:
        return f"a{agent}"
    a, s = divmod(agent - num_agents - 1, k)
    return f"a{a + 1}^{s + 1}"

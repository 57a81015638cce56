from typing import AbstractSet, Iterable, Iterator, Sequence

from pydantic import BaseModel, ConfigDict

from .instance import Instance
from .matching import Matching
from .problem import Objective


class BlockingReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    blocking_pairs: frozenset[tuple[int, int]]
    blocking_agents: frozenset[int]
    deviator_pairs: frozenset[tuple[int, int]]
    deviator_agents: frozenset[int]

    def value(self, objective: Objective) -> int:
        if objective == Objective.BLOCKING_PAIRS:
            return len(self.deviator_pairs)
        return len(self.deviator_agents)


def iter_blocking_pairs(inst: Instance, mate: Sequence[int], agents: Iterable[int] | None = None) -> Iterator[tuple[int, int]]:
    """Yield every blocking pair ``(i, j)``, ``i < j``, with ``i`` drawn from ``agents``.

    ``mate`` is a partner array indexed by agent id (``mate[i] == i`` when unmatched).
    Restricting ``agents`` to a union of components yields exactly their blocking pairs.
    """
    ranks = inst.ranks
    scope = set(inst.agents if agents is None else agents)
    for i in sorted(scope):
        rank_i = ranks[i]
        current = mate[i]
        limit = len(rank_i) if current == i else rank_i[current]
        for j in inst.pref(i)[:limit]:
            if j < i and j in scope:
                continue
            partner = mate[j]
            if partner == j or ranks[j][i] < ranks[j][partner]:
                yield (i, j) if i < j else (j, i)


def deviator_cost(inst: Instance, mate: Sequence[int], deviators: AbstractSet[int], objective: Objective,
                  agents: Iterable[int] | None = None) -> int:
    """Objective restricted to the deviators, computed straight from a partner array."""
    pairs = set()
    blocking = set()
    for i, j in iter_blocking_pairs(inst, mate, agents):
        if i in deviators or j in deviators:
            pairs.add((i, j))
            blocking.update(a for a in (i, j) if a in deviators)
    if objective == Objective.BLOCKING_PAIRS:
        return len(pairs)
    return len(blocking)


def blocking_report(inst: Instance, m: Matching, d: AbstractSet[int] = frozenset()) -> BlockingReport:
    pairs = frozenset(iter_blocking_pairs(inst, m.mate))
    deviator_pairs = frozenset(p for p in pairs if p[0] in d or p[1] in d)
    agents = frozenset(a for p in pairs for a in p)
    return BlockingReport(
        blocking_pairs=pairs,
        blocking_agents=agents,
        deviator_pairs=deviator_pairs,
        deviator_agents=frozenset(a for a in agents if a in d),
    )


def is_stable(inst: Instance, m: Matching) -> bool:
    return next(iter_blocking_pairs(inst, m.mate), None) is None

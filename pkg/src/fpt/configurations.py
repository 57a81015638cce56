from itertools import combinations, product
from typing import Iterable, Iterator, NamedTuple

from ..core.instance import Instance
from ..core.problem import DeviatorProblem, Objective


class CandidateConfiguration(NamedTuple):
    """A guess for the deviators' partners (M_C) and for who may block (B).

    ``blocked`` holds canonical pairs for the blocking-pairs objective and
    deviator ids for the blocking-agents objective.
    """
    index: int
    pairs: tuple[tuple[int, int], ...]
    blocked: tuple
    mate: dict[int, int]

    def partner(self, agent: int) -> int:
        return self.mate.get(agent, agent)


def candidate_matchings(p: DeviatorProblem) -> Iterator[tuple[tuple[tuple[int, int], ...], dict[int, int]]]:
    """Every way of fixing the deviators' partners that forms a matching.

    Each deviator, in ascending id order, picks an agent from its list by rank or
    stays unmatched (the last option).
    """
    inst = p.instance
    deviators = p.sorted_deviators
    position = {d: idx for idx, d in enumerate(deviators)}
    options = [inst.pref(d) + (d,) for d in deviators]
    for choice in product(*options):
        pairs = []
        mate = {}
        taken = set()
        for d, partner in zip(deviators, choice):
            if partner == d:
                continue
            if partner in position:
                if choice[position[partner]] != d:
                    break
            elif partner in taken:
                break
            else:
                taken.add(partner)
            mate[d] = partner
            mate[partner] = d
            if partner not in position or d < partner:
                pairs.append((min(d, partner), max(d, partner)))
        else:
            yield tuple(sorted(pairs)), mate


def admissible_pairs(inst: Instance, deviators: frozenset[int], mate: dict[int, int]) -> tuple[tuple[int, int], ...]:
    """Deviator pairs that can still block once the deviators' partners are fixed."""
    pairs = set()
    for d in sorted(deviators):
        current = mate.get(d, d)
        for r in inst.pref(d):
            if r == current:
                break
            if r in deviators and not inst.prefers(r, d, mate.get(r, r)):
                continue
            pairs.add((min(d, r), max(d, r)))
    return tuple(sorted(pairs))


def admissible_agents(inst: Instance, deviators: frozenset[int], mate: dict[int, int]) -> tuple[int, ...]:
    return tuple(sorted({a for pair in admissible_pairs(inst, deviators, mate) for a in pair if a in deviators}))


def enumerate_configurations(p: DeviatorProblem, k: int = 0,
                             sizes: Iterable[int] | None = None) -> Iterator[CandidateConfiguration]:
    """Deterministic stream of configurations with ``|B|`` in ``sizes`` (default ``0..k``).

    For each candidate M_C, sets B are drawn from the admissible members only, by
    size and then lexicographically. A member that cannot block never changes
    the outcome of a configuration.
    """
    sizes = tuple(range(k + 1)) if sizes is None else tuple(sizes)
    inst = p.instance
    index = 0
    for pairs, mate in candidate_matchings(p):
        if p.objective == Objective.BLOCKING_PAIRS:
            pool = admissible_pairs(inst, p.deviators, mate)
        else:
            pool = admissible_agents(inst, p.deviators, mate)
        for size in sizes:
            for blocked in combinations(pool, size):
                yield CandidateConfiguration(index, pairs, blocked, mate)
                index += 1

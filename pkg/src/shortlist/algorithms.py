import logging
from .._compat import StrEnum
from typing import AbstractSet, NamedTuple, Sequence

from ..classic.gale_shapley import gale_shapley, with_bipartition
from ..classic.irving import irving_sr
from ..core.blocking import deviator_cost
from ..core.instance import Instance
from ..core.outcome import SolveOutcome
from ..core.problem import DeviatorProblem, Regime
from ..errors import RegimeUnsupported
from .components import decompose

logger = logging.getLogger(__name__)

Pairs = tuple[tuple[int, int], ...]


class OddCycleCase(StrEnum):
    STABLE = "stable"
    CONFORMIST_PAIR = "conformist-pair"
    CONFORMIST_BEFORE_DEVIATOR = "conformist-before-deviator"
    ALL_DEVIATORS = "all-deviators"


class OddCycleTreatment(NamedTuple):
    case: OddCycleCase
    pairs: Pairs
    unmatched: int | None


def _canonical(pairs) -> Pairs:
    return tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))


def ordered_orientation(inst: Instance, cycle: Sequence[int]) -> tuple[int, ...] | None:
    """The cycle oriented so every agent prefers its successor, or ``None`` if it is not ordered."""
    k = len(cycle)

    def prefers_successor(c: Sequence[int]) -> bool:
        return all(inst.rank(c[i], c[(i + 1) % k]) < inst.rank(c[i], c[i - 1]) for i in range(k))

    if prefers_successor(cycle):
        return tuple(cycle)
    reverse = (cycle[0],) + tuple(reversed(cycle[1:]))
    if prefers_successor(reverse):
        return reverse
    return None


def _alternate_from(cycle: Sequence[int], unmatched_at: int) -> Pairs:
    k = len(cycle)
    return _canonical((cycle[(unmatched_at + 2 * x - 1) % k], cycle[(unmatched_at + 2 * x) % k])
                      for x in range(1, k // 2 + 1))


def _solve_induced(inst: Instance, agents: Sequence[int], solver) -> Pairs:
    sub, old_ids = inst.induced(agents)
    m = solver(sub)
    return _canonical((old_ids[i - 1], old_ids[j - 1]) for i, j in m.pairs)


def treat_odd_cycle(inst: Instance, cycle: Sequence[int], deviators: AbstractSet[int]) -> OddCycleTreatment:
    """Matching of one odd cycle minimising the deviators' blocking.

    Unordered cycles are solvable and get a stable matching. On an ordered cycle one
    agent stays unmatched and exactly one cycle edge blocks; the unmatched agent is
    chosen so that edge joins two conformists if possible, else a conformist and
    its deviator successor, else the last agent of the cycle.
    """
    oriented = ordered_orientation(inst, cycle)
    if oriented is None:
        pairs = _solve_induced(inst, cycle, irving_sr)
        return OddCycleTreatment(OddCycleCase.STABLE, pairs, None)

    k = len(oriented)
    steps = [(oriented[u], oriented[(u + 1) % k], (u + 1) % k) for u in range(k)]
    for case, wanted in ((OddCycleCase.CONFORMIST_PAIR, False), (OddCycleCase.CONFORMIST_BEFORE_DEVIATOR, True)):
        for a, b, v in steps:
            if a not in deviators and (b in deviators) == wanted:
                return OddCycleTreatment(case, _alternate_from(oriented, v), oriented[v])
    return OddCycleTreatment(OddCycleCase.ALL_DEVIATORS, _alternate_from(oriented, k - 1), oriented[k - 1])


def _finish(p: DeviatorProblem, pairs: list[tuple[int, int]], engine: str) -> SolveOutcome:
    inst = p.instance
    matching = inst.matching(pairs)
    value = deviator_cost(inst, matching.mate, p.deviators, p.objective)
    if p.regime == Regime.PERFECT and 2 * matching.size != inst.num_agents:
        return SolveOutcome.infeasible(f"{engine} {p.objective}/{p.regime}: no perfect matching exists")
    if p.budget is not None and value > p.budget:
        return SolveOutcome.infeasible(f"{engine} {p.objective}/{p.regime}: optimum {value} exceeds k={p.budget}")
    return SolveOutcome.solution(matching, value, f"{engine} {p.objective}/{p.regime}: optimum over all components")


def solve_shortlist_any(p: DeviatorProblem) -> SolveOutcome:
    if p.regime != Regime.ANY:
        raise RegimeUnsupported(f"the any-size short-list algorithm does not handle regime {p.regime}")
    inst = p.instance
    decomposition = decompose(inst)
    pairs = []
    for component in decomposition.paths + decomposition.even_cycles:
        if len(component) > 1:
            pairs.extend(_solve_induced(inst, component, lambda sub: gale_shapley(with_bipartition(sub))))
    for cycle in decomposition.odd_cycles:
        treatment = treat_odd_cycle(inst, cycle, p.deviators)
        logger.debug("odd cycle starting at %d: %s", cycle[0], treatment.case)
        pairs.extend(treatment.pairs)
    return _finish(p, pairs, "shortlist-any")


def _path_candidates(path: Sequence[int]) -> list[tuple[int, Pairs]]:
    k = len(path)
    if k % 2 == 0:
        return [(0, _canonical(zip(path[0::2], path[1::2])))]
    candidates = []
    for s in range(0, k, 2):
        before = zip(path[0:s:2], path[1:s:2])
        after = zip(path[s + 1::2], path[s + 2::2])
        candidates.append((path[s], _canonical(list(before) + list(after))))
    return candidates


def _cycle_candidates(cycle: Sequence[int]) -> list[tuple[int, Pairs]]:
    k = len(cycle)
    if k % 2 == 0:
        first = _canonical(zip(cycle[0::2], cycle[1::2]))
        second = _canonical((cycle[i], cycle[(i + 1) % k]) for i in range(1, k, 2))
        return [(0, first), (1, second)]
    return [(cycle[s], _alternate_from(cycle, s)) for s in range(k)]


def solve_shortlist_max(p: DeviatorProblem) -> SolveOutcome:
    """Best maximum-cardinality matching, chosen component by component."""
    if p.regime == Regime.ANY:
        raise RegimeUnsupported("the maximum-cardinality short-list algorithm needs regime max or perfect")
    inst = p.instance
    decomposition = decompose(inst)
    mate = list(range(inst.num_agents + 1))
    pairs = []
    components = [(path, _path_candidates(path)) for path in decomposition.paths]
    components += [(cycle, _cycle_candidates(cycle)) for cycle in decomposition.cycles()]
    for agents, candidates in components:
        best_key, best_pairs = None, ()
        for tiebreak, candidate in candidates:
            for a, b in candidate:
                mate[a], mate[b] = b, a
            key = (deviator_cost(inst, mate, p.deviators, p.objective, agents), tiebreak)
            for a in agents:
                mate[a] = a
            if best_key is None or key < best_key:
                best_key, best_pairs = key, candidate
        pairs.extend(best_pairs)
    return _finish(p, pairs, "shortlist-max")


def solve_shortlist(p: DeviatorProblem) -> SolveOutcome:
    if p.regime == Regime.ANY:
        return solve_shortlist_any(p)
    return solve_shortlist_max(p)

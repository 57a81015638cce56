import logging
from typing import Iterator

from pydantic import BaseModel, ConfigDict
from tqdm import tqdm

from .classic.weighted_matching import max_cardinality_matching
from .config import DEFAULT_ORACLE_CAP
from .core.blocking import iter_blocking_pairs
from .core.instance import Instance
from .core.matching import Matching
from .core.problem import DeviatorProblem, Objective, Regime
from .errors import TooLarge


class OracleReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_cardinality_size: int
    perfect_exists: bool
    family_size: int
    optimum_bp: int | None
    optimum_ba: int | None
    witness_bp: Matching | None
    witness_ba: Matching | None
    stable_exists: bool
    stable_matched_sets: tuple[tuple[int, ...], ...]

    def optimum(self, objective: Objective) -> int | None:
        return self.optimum_bp if objective == Objective.BLOCKING_PAIRS else self.optimum_ba

    def witness(self, objective: Objective) -> Matching | None:
        return self.witness_bp if objective == Objective.BLOCKING_PAIRS else self.witness_ba


class MatchingEnumerator:
    """Backtracking over the matchings of a small instance.

    The smallest uncovered agent is the branch variable: first it stays unmatched,
    then it is paired with each uncovered acceptable agent in ascending id order.
    A budget on unmatched agents prunes to the maximum-cardinality or perfect family.
    """

    def __init__(self, inst: Instance, cap: int | None = DEFAULT_ORACLE_CAP, show_progress: bool = False):
        self.logger = logging.getLogger(__name__)
        if cap is not None and inst.num_agents > cap:
            raise TooLarge(inst.num_agents, cap)
        self.inst = inst
        self.show_progress = show_progress
        self._neighbours = [()] + [tuple(sorted(inst.pref(a))) for a in inst.agents]

    def unmatched_budget(self, regime: Regime) -> int:
        n = self.inst.num_agents
        if regime == Regime.ANY:
            return n
        if regime == Regime.PERFECT:
            return 0
        return n - 2 * max_cardinality_matching(self.inst).size

    def mates(self, regime: Regime) -> Iterator[list[int]]:
        """Yield partner arrays; the array is reused, copy it to keep it."""
        n = self.inst.num_agents
        budget = self.unmatched_budget(regime)
        mate = list(range(n + 1))
        covered = [False] * (n + 2)
        neighbours = self._neighbours

        def extend(a: int, unmatched: int) -> Iterator[list[int]]:
            while a <= n and covered[a]:
                a += 1
            if a > n:
                yield mate
                return
            covered[a] = True
            if unmatched < budget:
                yield from extend(a + 1, unmatched + 1)
            for b in neighbours[a]:
                if covered[b]:
                    continue
                covered[b] = True
                mate[a], mate[b] = b, a
                yield from extend(a + 1, unmatched)
                mate[a], mate[b] = a, b
                covered[b] = False
            covered[a] = False

        stream = extend(1, 0)
        yield from tqdm(stream, desc="Enumerating matchings", unit="matching", disable=not self.show_progress)

    def matchings(self, regime: Regime) -> Iterator[Matching]:
        for mate in self.mates(regime):
            yield Matching.from_mate(mate)


def enumerate_matchings(inst: Instance, regime: Regime = Regime.ANY,
                        cap: int | None = DEFAULT_ORACLE_CAP) -> Iterator[Matching]:
    return MatchingEnumerator(inst, cap).matchings(regime)


def oracle_solve(p: DeviatorProblem, cap: int | None = DEFAULT_ORACLE_CAP, show_progress: bool = False) -> OracleReport:
    """Exact optima of both objectives over the problem's regime, plus a stability census.

    The census (stable matchings and their matched sets) always ranges over all matchings.
    """
    inst = p.instance
    enumerator = MatchingEnumerator(inst, cap, show_progress)
    n = inst.num_agents
    best_size = max_cardinality_matching(inst).size
    perfect_exists = 2 * best_size == n
    if p.regime == Regime.MAX_CARDINALITY:
        family_size_target = best_size
    elif p.regime == Regime.PERFECT:
        family_size_target = n // 2 if perfect_exists else -1
    else:
        family_size_target = None

    deviators = p.deviators
    family_size = 0
    best = {Objective.BLOCKING_PAIRS: None, Objective.BLOCKING_AGENTS: None}
    witness = {Objective.BLOCKING_PAIRS: None, Objective.BLOCKING_AGENTS: None}
    stable_sets = []

    for mate in enumerator.mates(Regime.ANY):
        pairs = list(iter_blocking_pairs(inst, mate))
        matched = tuple(a for a in inst.agents if mate[a] != a)
        if not pairs:
            stable_sets.append(matched)
        if family_size_target is not None and len(matched) != 2 * family_size_target:
            continue
        family_size += 1
        deviator_pairs = [pair for pair in pairs if pair[0] in deviators or pair[1] in deviators]
        values = {
            Objective.BLOCKING_PAIRS: len(deviator_pairs),
            Objective.BLOCKING_AGENTS: len({a for pair in deviator_pairs for a in pair if a in deviators}),
        }
        for objective, value in values.items():
            if best[objective] is None or value < best[objective]:
                best[objective] = value
                witness[objective] = Matching.from_mate(mate)

    enumerator.logger.debug("oracle enumerated %d matchings in the %s family", family_size, p.regime)
    return OracleReport(
        max_cardinality_size=best_size,
        perfect_exists=perfect_exists,
        family_size=family_size,
        optimum_bp=best[Objective.BLOCKING_PAIRS],
        optimum_ba=best[Objective.BLOCKING_AGENTS],
        witness_bp=witness[Objective.BLOCKING_PAIRS],
        witness_ba=witness[Objective.BLOCKING_AGENTS],
        stable_exists=bool(stable_sets),
        stable_matched_sets=tuple(stable_sets),
    )

from typing import NamedTuple

from ..core.instance import Instance
from ..core.problem import DeviatorProblem, Objective
from .configurations import CandidateConfiguration


class TruncationResult(NamedTuple):
    """Outcome of applying one configuration's truncation rule.

    ``cuts[a]`` is how many entries of ``a``'s list survive. Every agent in
    ``must_match`` has to end up with a partner it ranks within its cut.
    """
    configuration: CandidateConfiguration
    instance: Instance
    cuts: dict[int, int]
    must_match: frozenset[int]
    rejected: bool = False
    reason: str | None = None

    def keeps(self, a: int, b: int) -> bool:
        ranks = self.instance.ranks
        return (ranks[a][b] < self.cuts.get(a, len(ranks[a]))
                and ranks[b][a] < self.cuts.get(b, len(ranks[b])))

    @property
    def truncated_instance(self) -> Instance:
        return self.instance.truncated(self.cuts)


def truncate_and_collect(p: DeviatorProblem, cfg: CandidateConfiguration) -> TruncationResult:
    inst = p.instance
    pair_mode = p.objective == Objective.BLOCKING_PAIRS
    blocked = set(cfg.blocked)

    if pair_mode:
        clash = next((pair for pair in cfg.pairs if pair in blocked), None)
        if clash is not None:
            return TruncationResult(cfg, inst, {}, frozenset(), True, f"pair {clash} is both matched and blocking")

    # all triggers are collected before any list is cut
    cuts = {}
    must_match = set()
    for d in p.sorted_deviators:
        if not pair_mode and d in blocked:
            continue
        current = cfg.partner(d)
        for r in inst.pref(d):
            if r == current:
                break
            if pair_mode and (min(d, r), max(d, r)) in blocked:
                continue
            must_match.add(r)
            cut = inst.rank(r, d)
            if cut < cuts.get(r, len(inst.pref(r))):
                cuts[r] = cut

    result = TruncationResult(cfg, inst, cuts, frozenset(must_match))
    for a, b in cfg.pairs:
        if not result.keeps(a, b):
            return result._replace(rejected=True, reason=f"partner of agent {a} truncated away")
    return result

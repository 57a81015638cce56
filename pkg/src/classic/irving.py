import logging
from collections import deque

from ..core.instance import Instance
from ..core.matching import Matching


class IrvingSolver:
    """Irving's stable roommates algorithm on incomplete lists.

    Phase 1 runs proposals with symmetric deletions; phase 2 eliminates rotations
    until every list holds at most one entry. An agent whose list empties in
    phase 1 is unmatched in every stable matching, an empty list in phase 2
    means no stable matching exists.
    """

    def __init__(self, inst: Instance):
        self.logger = logging.getLogger(__name__)
        self.inst = inst
        self.lists = [[]] + [list(inst.pref(a)) for a in inst.agents]

    def solve(self) -> Matching | None:
        self._phase_one()
        alive = [a for a in self.inst.agents if self.lists[a]]
        if not self._phase_two(alive):
            self.logger.debug("no stable matching: a list emptied during rotation elimination")
            return None
        mate = list(range(self.inst.num_agents + 1))
        for a in alive:
            mate[a] = self.lists[a][0]
        return self.inst.matching_from_mate(mate)

    def _reject_after(self, holder: int, agent: int):
        """``holder`` drops everyone it ranks below ``agent``."""
        entries = self.lists[holder]
        pos = entries.index(agent)
        for w in entries[pos + 1:]:
            self.lists[w].remove(holder)
        del entries[pos + 1:]

    def _phase_one(self):
        holds = {}
        free = deque(self.inst.agents)
        while free:
            x = free.popleft()
            if not self.lists[x]:
                continue
            y = self.lists[x][0]
            previous = holds.get(y)
            holds[y] = x
            self._reject_after(y, x)
            if previous is not None:
                free.append(previous)

    def _find_rotation(self, start: int) -> list[int]:
        xs = [start]
        seen = {start: 0}
        while True:
            second = self.lists[xs[-1]][1]
            nxt = self.lists[second][-1]
            if nxt in seen:
                return xs[seen[nxt]:]
            seen[nxt] = len(xs)
            xs.append(nxt)

    def _phase_two(self, alive: list[int]) -> bool:
        while True:
            start = next((a for a in alive if len(self.lists[a]) > 1), None)
            if start is None:
                return True
            rotation = self._find_rotation(start)
            seconds = [self.lists[x][1] for x in rotation]
            for x, y in zip(rotation, seconds):
                if x in self.lists[y]:
                    self._reject_after(y, x)
            if any(not self.lists[a] for a in alive):
                return False


def irving_sr(inst: Instance) -> Matching | None:
    """A stable matching of ``inst``, or ``None`` when the instance is unsolvable."""
    return IrvingSolver(inst).solve()

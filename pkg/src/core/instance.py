from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

import networkx as nx
import xxhash
from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import (AsymmetricAcceptability, DuplicateEntry, InstanceError, InvalidAgent, InvalidMatching,
                      SelfRank, SidedPairViolation)
from .matching import Matching


class Instance(BaseModel):
    """Roommates instance with strict, symmetric, possibly incomplete lists.

    Agents are ``1..n``; ``prefs[i - 1]`` is agent ``i``'s list, most preferred first.
    ``sides`` tags a bipartition (SMI instances) with one 0/1 label per agent.
    """
    model_config = ConfigDict(frozen=True)

    prefs: tuple[tuple[int, ...], ...] = ()
    sides: tuple[int, ...] | None = None

    @model_validator(mode="after")
    def _validate(self) -> "Instance":
        n = len(self.prefs)
        for i, entries in enumerate(self.prefs, start=1):
            seen = set()
            for j in entries:
                if not 1 <= j <= n:
                    raise InvalidAgent(j, owner=i)
                if j == i:
                    raise SelfRank(i)
                if j in seen:
                    raise DuplicateEntry(i, j)
                seen.add(j)
        for i, entries in enumerate(self.prefs, start=1):
            for j in entries:
                if i not in self.ranks[j]:
                    raise AsymmetricAcceptability(i, j)
        if self.sides is not None:
            if len(self.sides) != n or any(s not in (0, 1) for s in self.sides):
                raise InstanceError(f"bipartition tag needs {n} labels from {{0, 1}}")
            for i, j in self.edges():
                if self.sides[i - 1] == self.sides[j - 1]:
                    raise SidedPairViolation(i, j)
        return self

    @property
    def num_agents(self) -> int:
        return len(self.prefs)

    @property
    def agents(self) -> range:
        return range(1, len(self.prefs) + 1)

    @cached_property
    def ranks(self) -> tuple[dict[int, int], ...]:
        # index 0 is a placeholder so that ranks[i] belongs to agent i
        return ({},) + tuple({j: r for r, j in enumerate(entries)} for entries in self.prefs)

    @cached_property
    def d_max(self) -> int:
        return max((len(entries) for entries in self.prefs), default=0)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(entries) for entries in self.prefs) // 2

    @cached_property
    def fingerprint(self) -> str:
        hasher = xxhash.xxh64()
        for entries in self.prefs:
            hasher.update(" ".join(map(str, entries)).encode())
            hasher.update(b";")
        if self.sides is not None:
            hasher.update("".join(map(str, self.sides)).encode())
        return hasher.hexdigest()

    def pref(self, i: int) -> tuple[int, ...]:
        return self.prefs[i - 1]

    def rank(self, i: int, j: int) -> int | None:
        """0-based position of ``j`` in ``i``'s list, ``None`` if unacceptable."""
        return self.ranks[i].get(j)

    def is_acceptable(self, i: int, j: int) -> bool:
        return j in self.ranks[i]

    def prefers(self, i: int, j: int, current: int) -> bool:
        """True if ``i`` strictly prefers ``j`` to ``current`` (``current == i`` means unmatched)."""
        rank_i = self.ranks[i]
        if j not in rank_i:
            return False
        if current == i:
            return True
        return rank_i[j] < rank_i[current]

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, entries in enumerate(self.prefs, start=1):
            for j in entries:
                if i < j:
                    yield i, j

    def acceptability_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.agents)
        graph.add_edges_from(self.edges())
        return graph

    def matching(self, pairs: Iterable[Sequence[int]]) -> Matching:
        """Build a Matching of this instance, checking mutual acceptability."""
        m = Matching(num_agents=self.num_agents, pairs=tuple(tuple(p) for p in pairs))
        for i, j in m.pairs:
            if not self.is_acceptable(i, j):
                raise InvalidMatching(f"pair {{{i},{j}}} is not mutually acceptable", [i, j])
        return m

    def matching_from_mate(self, mate: Sequence[int]) -> Matching:
        return self.matching((i, mate[i]) for i in self.agents if i < mate[i])

    def with_sides(self, sides: Sequence[int] | None) -> "Instance":
        return Instance(prefs=self.prefs, sides=None if sides is None else tuple(sides))

    def induced(self, agents: Iterable[int]) -> tuple["Instance", tuple[int, ...]]:
        """Restrict to ``agents`` and relabel them ``1..len`` in ascending order.

        Returns the restricted instance and the map new id -> old id (index ``new - 1``).
        """
        old_ids = tuple(sorted(set(agents)))
        new_id = {old: new for new, old in enumerate(old_ids, start=1)}
        prefs = tuple(tuple(new_id[j] for j in self.pref(old) if j in new_id) for old in old_ids)
        sides = None if self.sides is None else tuple(self.sides[old - 1] for old in old_ids)
        return Instance(prefs=prefs, sides=sides), old_ids

    def truncated(self, cuts: Mapping[int, int]) -> "Instance":
        """Keep only the first ``cuts[a]`` entries of each listed agent, symmetrically."""
        def keeps(a: int, b: int) -> bool:
            return self.ranks[a][b] < cuts.get(a, len(self.prefs[a - 1]))

        prefs = tuple(
            tuple(j for j in entries if keeps(i, j) and keeps(j, i))
            for i, entries in enumerate(self.prefs, start=1)
        )
        return Instance(prefs=prefs, sides=self.sides)


def validate_instance(prefs: Sequence[Sequence[int]], sides: Sequence[int] | None = None) -> Instance:
    """Validate raw per-agent lists (agent ``i`` at index ``i - 1``) into an Instance."""
    return Instance(prefs=tuple(tuple(entries) for entries in prefs),
                    sides=None if sides is None else tuple(sides))

from functools import cached_property
from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import InvalidMatching


class Matching(BaseModel):
    """Disjoint unordered pairs over agents ``1..num_agents``.

    Pairs are stored canonically as ``(min, max)`` in sorted order. An unmatched
    agent is its own partner.
    """
    model_config = ConfigDict(frozen=True)

    num_agents: int = Field(ge=0)
    pairs: tuple[tuple[int, int], ...] = ()

    @field_validator("pairs", mode="after")
    @classmethod
    def _canonical(cls, pairs: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((min(i, j), max(i, j)) for i, j in pairs))

    @model_validator(mode="after")
    def _disjoint(self) -> "Matching":
        covered = set()
        for i, j in self.pairs:
            if i == j:
                raise InvalidMatching(f"agent {i} is paired with itself", [i])
            for a in (i, j):
                if not 1 <= a <= self.num_agents:
                    raise InvalidMatching(f"agent id {a} out of range", [a])
                if a in covered:
                    raise InvalidMatching(f"agent {a} appears in two pairs", [a])
                covered.add(a)
        return self

    @cached_property
    def mate(self) -> tuple[int, ...]:
        mate = list(range(self.num_agents + 1))
        for i, j in self.pairs:
            mate[i] = j
            mate[j] = i
        return tuple(mate)

    @cached_property
    def matched_agents(self) -> frozenset[int]:
        return frozenset(a for pair in self.pairs for a in pair)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def partner_of(self, agent: int) -> int:
        return self.mate[agent]

    def is_matched(self, agent: int) -> bool:
        return self.mate[agent] != agent

    def contains(self, i: int, j: int) -> bool:
        return self.mate[i] == j and i != j

    @classmethod
    def empty(cls, num_agents: int) -> "Matching":
        return cls(num_agents=num_agents)

    @classmethod
    def from_mate(cls, mate: Sequence[int]) -> "Matching":
        """Inverse of ``mate``: index 0 is ignored, ``mate[i] == i`` means unmatched."""
        return cls(num_agents=len(mate) - 1,
                   pairs=tuple((i, j) for i, j in enumerate(mate) if 0 < i < j))

    def to_lines(self) -> list[str]:
        return [f"{i} {j}" for i, j in self.pairs]

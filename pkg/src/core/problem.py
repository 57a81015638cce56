from .._compat import StrEnum
from functools import cached_property

from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import ProblemError
from .instance import Instance


class Objective(StrEnum):
    BLOCKING_PAIRS = "bp"
    BLOCKING_AGENTS = "ba"


class Regime(StrEnum):
    ANY = "any"
    MAX_CARDINALITY = "max"
    PERFECT = "perfect"


class DeviatorProblem(BaseModel):
    """An instance, its deviators and what to minimise over which matchings.

    ``budget`` is the bound k of the decision version; ``None`` asks for the optimum.
    """
    model_config = ConfigDict(frozen=True)

    instance: Instance
    deviators: frozenset[int] = frozenset()
    objective: Objective = Objective.BLOCKING_PAIRS
    regime: Regime = Regime.ANY
    budget: int | None = None

    @model_validator(mode="after")
    def _validate(self) -> "DeviatorProblem":
        n = self.instance.num_agents
        outside = sorted(a for a in self.deviators if not 1 <= a <= n)
        if outside:
            raise ProblemError(f"deviators {outside} are not agents of a {n}-agent instance")
        if self.budget is not None and self.budget < 0:
            raise ProblemError(f"budget must be non-negative, got {self.budget}")
        return self

    @property
    def optimize(self) -> bool:
        return self.budget is None

    @cached_property
    def sorted_deviators(self) -> tuple[int, ...]:
        return tuple(sorted(self.deviators))

    def is_deviator(self, agent: int) -> bool:
        return agent in self.deviators

    def with_budget(self, budget: int | None) -> "DeviatorProblem":
        return DeviatorProblem(instance=self.instance, deviators=self.deviators, objective=self.objective,
                               regime=self.regime, budget=budget)

    def with_regime(self, regime: Regime) -> "DeviatorProblem":
        return DeviatorProblem(instance=self.instance, deviators=self.deviators, objective=self.objective,
                               regime=regime, budget=self.budget)

    def with_objective(self, objective: Objective) -> "DeviatorProblem":
        return DeviatorProblem(instance=self.instance, deviators=self.deviators, objective=objective,
                               regime=self.regime, budget=self.budget)

from .._compat import StrEnum

from pydantic import BaseModel, ConfigDict, model_validator

from .matching import Matching


class Verdict(StrEnum):
    SOLUTION = "solution"
    INFEASIBLE = "infeasible"


class SolveOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    matching: Matching | None = None
    value: int | None = None
    certificate_note: str = ""

    @model_validator(mode="after")
    def _consistent(self) -> "SolveOutcome":
        if self.verdict == Verdict.SOLUTION and (self.matching is None or self.value is None):
            raise ValueError("a solution needs a matching and its value")
        return self

    @classmethod
    def solution(cls, matching: Matching, value: int, note: str) -> "SolveOutcome":
        return cls(verdict=Verdict.SOLUTION, matching=matching, value=value, certificate_note=note)

    @classmethod
    def infeasible(cls, note: str) -> "SolveOutcome":
        return cls(verdict=Verdict.INFEASIBLE, certificate_note=note)

    @property
    def is_solution(self) -> bool:
        return self.verdict == Verdict.SOLUTION

import logging
from typing import Iterable

from ..classic.weighted_matching import max_cardinality_matching
from ..core.outcome import SolveOutcome
from ..core.problem import DeviatorProblem, Objective, Regime
from ..core.verify import check_solution
from ..errors import PerfectInfeasible, SolverError, VerificationError
from .batch_evaluator import BatchEvaluator
from .configurations import CandidateConfiguration, enumerate_configurations
from .extension import ExtensionResult, extend_via_weighted_matching
from .truncation import truncate_and_collect


class FptSolver:
    """Enumeration solver over candidate configurations.

    Each configuration fixes the deviators' partners and the set allowed to block;
    the rest of the matching comes from one maximum-weight matching. The accepted
    configuration with the smallest index wins, whatever the number of threads.
    """

    def __init__(self, problem: DeviatorProblem, threads: int = 1, batch_size: int = 64, show_progress: bool = False):
        self.logger = logging.getLogger(__name__)
        self.problem = problem
        self.inst = problem.instance
        self.threads = threads
        self.batch_size = batch_size
        self.show_progress = show_progress
        # regime any never looks past distance 2 from the deviators
        self.max_size = None if problem.regime == Regime.ANY else max_cardinality_matching(self.inst).size
        self.target_size = self.max_size

    @property
    def _label(self) -> str:
        return f"fpt {self.problem.objective}/{self.problem.regime}"

    @property
    def _instance_tag(self) -> str:
        if self.problem.regime == Regime.ANY:
            return ""
        return f" (instance {self.inst.fingerprint})"

    def _perfect_impossible(self) -> bool:
        return self.problem.regime == Regime.PERFECT and 2 * self.max_size != self.inst.num_agents

    def _evaluate(self, cfg: CandidateConfiguration) -> ExtensionResult | None:
        trunc = truncate_and_collect(self.problem, cfg)
        if trunc.rejected:
            return None
        extension = extend_via_weighted_matching(self.problem, trunc, self.target_size)
        return extension if extension.accepted else None

    def _search(self, sizes: Iterable[int], budget: int) -> tuple[SolveOutcome | None, int]:
        problem = self.problem.with_budget(budget)
        evaluator = BatchEvaluator(self._evaluate, self.threads, self.batch_size, self.show_progress)
        for cfg, extension in evaluator.accepted(enumerate_configurations(problem, sizes=sizes)):
            matching = self.inst.matching(extension.pairs)
            try:
                value = check_solution(problem, matching)
            except VerificationError as e:
                self.logger.error(f"Configuration {cfg.index} accepted an invalid matching: {e}")
                continue
            self.logger.debug("configuration %d accepted with value %d", cfg.index, value)
            note = f"{self._label}: configuration #{cfg.index} accepted at k={budget}{self._instance_tag}"
            return SolveOutcome.solution(matching, value, note), evaluator.evaluated
        return None, evaluator.evaluated

    def solve(self) -> SolveOutcome:
        k = self.problem.budget
        if k is None:
            return self.optimize()
        if self._perfect_impossible():
            return SolveOutcome.infeasible(f"{self._label}: no perfect matching exists")
        outcome, evaluated = self._search(range(k + 1), k)
        if outcome is not None:
            return outcome
        self.logger.debug("all %d configurations rejected for k=%d", evaluated, k)
        return SolveOutcome.infeasible(f"{self._label}: all {evaluated} configurations rejected at k={k}"
                                       f"{self._instance_tag}")

    def upper_bound(self) -> int:
        if self.problem.objective == Objective.BLOCKING_AGENTS:
            return len(self.problem.deviators)
        # each deviator blocking pair is an edge at a deviator
        return sum(len(self.inst.pref(d)) for d in self.problem.deviators)

    def optimize(self) -> SolveOutcome:
        """Smallest k with an accepted configuration; B sets of size exactly k are tried in turn."""
        if self._perfect_impossible():
            raise PerfectInfeasible(f"no perfect matching exists on this {self.inst.num_agents}-agent instance")
        for k in range(self.upper_bound() + 1):
            outcome, _ = self._search((k,), k)
            if outcome is not None:
                return outcome
        raise SolverError("no configuration accepted up to the trivial bound")


def solve_fpt(p: DeviatorProblem, threads: int = 1, batch_size: int = 64, show_progress: bool = False) -> SolveOutcome:
    return FptSolver(p, threads, batch_size, show_progress).solve()


def optimize_fpt(p: DeviatorProblem, threads: int = 1, batch_size: int = 64, show_progress: bool = False) -> SolveOutcome:
    return FptSolver(p.with_budget(None), threads, batch_size, show_progress).optimize()

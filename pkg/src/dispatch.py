import logging
from ._compat import StrEnum
from typing import NamedTuple

from .config import Settings
from .core.outcome import SolveOutcome
from .core.problem import DeviatorProblem, Regime
from .core.verify import check_solution, objective_value
from .errors import PerfectInfeasible, SolverError, VerificationError
from .fpt.bipartite_restriction import solve_bipartite_restriction
from .fpt.solver import optimize_fpt, solve_fpt
from .oracle import oracle_solve
from .shortlist.algorithms import solve_shortlist


class Engine(StrEnum):
    AUTO = "auto"
    SHORTLIST = "shortlist"
    FPT = "fpt"
    BIPARTITE = "bipartite"
    ORACLE = "oracle"


class Dispatch(NamedTuple):
    engine: Engine
    outcome: SolveOutcome


class SolveDispatcher:
    """Routes a problem to one engine and verifies whatever comes back."""

    def __init__(self, settings: Settings | None = None):
        self.logger = logging.getLogger(__name__)
        self.settings = settings or Settings()

    def handle_shortlist(self, p: DeviatorProblem) -> SolveOutcome:
        return solve_shortlist(p)

    def handle_fpt(self, p: DeviatorProblem) -> SolveOutcome:
        options = dict(threads=self.settings.threads, batch_size=self.settings.batch_size,
                       show_progress=self.settings.show_progress)
        if p.budget is not None:
            return solve_fpt(p, **options)
        try:
            return optimize_fpt(p, **options)
        except PerfectInfeasible as e:
            return SolveOutcome.infeasible(f"fpt {p.objective}/{p.regime}: {e}")

    def handle_bipartite(self, p: DeviatorProblem) -> SolveOutcome:
        label = f"bipartite {p.objective}/{p.regime}"
        matching = solve_bipartite_restriction(p)
        if matching is None:
            return SolveOutcome.infeasible(f"{label}: restriction to deviator edges not applicable")
        return SolveOutcome.solution(matching, objective_value(p, matching),
                                     f"{label}: stable matching of the deviator restriction")

    def handle_oracle(self, p: DeviatorProblem) -> SolveOutcome:
        label = f"oracle {p.objective}/{p.regime}"
        report = oracle_solve(p, self.settings.oracle_cap or None, self.settings.show_progress)
        optimum = report.optimum(p.objective)
        if optimum is None:
            return SolveOutcome.infeasible(f"{label}: the matching family is empty")
        if p.budget is not None and optimum > p.budget:
            return SolveOutcome.infeasible(f"{label}: optimum {optimum} exceeds k={p.budget}")
        return SolveOutcome.solution(report.witness(p.objective), optimum,
                                     f"{label}: optimum {optimum} over {report.family_size} matchings")

    def choose(self, p: DeviatorProblem) -> Engine:
        if p.instance.d_max <= 2:
            return Engine.SHORTLIST
        if p.regime == Regime.ANY and p.budget in (0, None) and solve_bipartite_restriction(p) is not None:
            return Engine.BIPARTITE
        return Engine.FPT

    def solve(self, p: DeviatorProblem, engine: Engine = Engine.AUTO) -> Dispatch:
        if engine == Engine.AUTO:
            engine = self.choose(p)
            self.logger.debug("auto dispatch picked %s", engine)
        handlers = {
            Engine.SHORTLIST: self.handle_shortlist,
            Engine.FPT: self.handle_fpt,
            Engine.BIPARTITE: self.handle_bipartite,
            Engine.ORACLE: self.handle_oracle,
        }
        outcome = handlers[engine](p)
        if outcome.is_solution:
            try:
                check_solution(p, outcome.matching, outcome.value)
            except VerificationError as e:
                self.logger.error(f"Engine {engine} returned a matching that fails verification: {e}")
                raise SolverError(f"engine {engine} produced an invalid solution: {e}") from e
        return Dispatch(engine, outcome)

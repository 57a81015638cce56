"""Seeded random instances and formulas.

The stream of draws from ``numpy.random.Generator(PCG64(seed))`` is fixed:
deviators first, then edges (one permutation of the candidate pairs, then one
uniform draw per pair in that order), then one permutation per agent list in
ascending agent order. Sides are a deterministic function of the model.
"""
import logging
from ._compat import StrEnum
from itertools import combinations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .core.instance import Instance
from .core.problem import DeviatorProblem, Objective, Regime
from .errors import CnfError, InfeasibleSpec
from .reductions.cnf import CnfFormula

MAX_FORMULA_ATTEMPTS = 10_000


class Model(StrEnum):
    SRI_UNIFORM = "sri"
    SMI_UNIFORM = "smi"
    PATH_CYCLE_ONLY = "path-cycle"
    BIPARTITE_CORE = "bipartite-core"


class GenSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    model: Model = Model.SRI_UNIFORM
    list_cap: int = Field(default=4, ge=1)
    deviator_fraction: float = Field(default=0.3, ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    density: float = Field(default=0.5, ge=0.0, le=1.0)
    num_deviators: int | None = Field(default=None, ge=0)
    balanced_sides: bool = False


class InstanceGenerator:
    def __init__(self, spec: GenSpec):
        self.logger = logging.getLogger(__name__)
        self.spec = spec
        self.rng = np.random.Generator(np.random.PCG64(spec.seed))
        self.degree = [0] * (spec.n + 1)

    def deviators(self) -> frozenset[int]:
        n = self.spec.n
        if self.spec.num_deviators is not None:
            if self.spec.num_deviators > n:
                raise InfeasibleSpec(f"{self.spec.num_deviators} deviators requested among {n} agents")
            chosen = self.rng.choice(n, size=self.spec.num_deviators, replace=False) if n else []
            return frozenset(int(a) + 1 for a in chosen)
        draws = self.rng.random(n)
        return frozenset(a for a in range(1, n + 1) if draws[a - 1] < self.spec.deviator_fraction)

    def sides(self) -> tuple[int, ...] | None:
        n = self.spec.n
        match self.spec.model:
            case Model.SMI_UNIFORM:
                if self.spec.balanced_sides and n % 2:
                    raise InfeasibleSpec(f"balanced sides need an even number of agents, got {n}")
                return tuple(0 if a <= (n + 1) // 2 else 1 for a in range(1, n + 1))
            case Model.BIPARTITE_CORE:
                return tuple(a % 2 for a in range(1, n + 1))
        return None

    def _candidate_pairs(self, sides: tuple[int, ...] | None, deviators: frozenset[int]) -> list[tuple[int, int]]:
        pairs = combinations(range(1, self.spec.n + 1), 2)
        match self.spec.model:
            case Model.SMI_UNIFORM:
                return [(i, j) for i, j in pairs if sides[i - 1] != sides[j - 1]]
            case Model.BIPARTITE_CORE:
                return [(i, j) for i, j in pairs
                        if sides[i - 1] != sides[j - 1] or (i not in deviators and j not in deviators)]
        return list(pairs)

    def _fits(self, i: int, j: int) -> bool:
        return self.degree[i] < self.spec.list_cap and self.degree[j] < self.spec.list_cap

    def _add(self, edges: list[tuple[int, int]], i: int, j: int):
        edges.append((i, j))
        self.degree[i] += 1
        self.degree[j] += 1

    def uniform_edges(self, candidates: list[tuple[int, int]]) -> list[tuple[int, int]]:
        edges = []
        order = self.rng.permutation(len(candidates))
        draws = self.rng.random(len(candidates))
        for pos, idx in enumerate(order):
            i, j = candidates[int(idx)]
            if draws[pos] < self.spec.density and self._fits(i, j):
                self._add(edges, i, j)
        return edges

    def path_cycle_edges(self) -> list[tuple[int, int]]:
        """Chunk a random agent order into paths of 1..6 agents, closing some into cycles."""
        if self.spec.list_cap > 2:
            raise InfeasibleSpec(f"path-cycle instances need list_cap <= 2, got {self.spec.list_cap}")
        longest = 6 if self.spec.list_cap == 2 else 2
        agents = [int(a) + 1 for a in self.rng.permutation(self.spec.n)]
        edges = []
        start = 0
        while start < len(agents):
            size = int(self.rng.integers(1, longest + 1))
            chunk = agents[start:start + size]
            start += size
            for i, j in zip(chunk, chunk[1:]):
                self._add(edges, min(i, j), max(i, j))
            if len(chunk) >= 3 and self.rng.random() < 0.5:
                self._add(edges, min(chunk[0], chunk[-1]), max(chunk[0], chunk[-1]))
        return edges

    def generate(self) -> DeviatorProblem:
        deviators = self.deviators()
        sides = self.sides()
        if self.spec.model == Model.PATH_CYCLE_ONLY:
            edges = self.path_cycle_edges()
        else:
            edges = self.uniform_edges(self._candidate_pairs(sides, deviators))

        neighbours = [[] for _ in range(self.spec.n + 1)]
        for i, j in sorted(edges):
            neighbours[i].append(j)
            neighbours[j].append(i)
        prefs = []
        for a in range(1, self.spec.n + 1):
            listed = sorted(neighbours[a])
            prefs.append(tuple(listed[int(pos)] for pos in self.rng.permutation(len(listed))))

        self.logger.debug("generated %d agents, %d edges, %d deviators (seed %d)",
                          self.spec.n, len(edges), len(deviators), self.spec.seed)
        # bipartite-core sides only steer sampling, conformist pairs may stay on one side
        tagged = sides if self.spec.model == Model.SMI_UNIFORM else None
        instance = Instance(prefs=tuple(prefs), sides=tagged)
        return DeviatorProblem(instance=instance, deviators=deviators,
                               objective=Objective.BLOCKING_PAIRS, regime=Regime.ANY, budget=None)


def generate(spec: GenSpec) -> DeviatorProblem:
    return InstanceGenerator(spec).generate()


def generate_formula(num_vars: int, seed: int) -> CnfFormula:
    """Random formula with every variable twice unnegated and twice negated.

    The 4n occurrences are shuffled into consecutive clauses of three; shuffles
    that put the same literal twice into a clause are redrawn.
    """
    if num_vars % 3:
        raise InfeasibleSpec(f"number of variables must be a multiple of 3, got {num_vars}")
    rng = np.random.Generator(np.random.PCG64(seed))
    literals = [literal for var in range(1, num_vars + 1) for literal in (var, var, -var, -var)]
    for attempt in range(1, MAX_FORMULA_ATTEMPTS + 1):
        shuffled = [literals[int(pos)] for pos in rng.permutation(len(literals))]
        clauses = tuple(tuple(shuffled[s:s + 3]) for s in range(0, len(shuffled), 3))
        try:
            formula = CnfFormula(num_vars=num_vars, clauses=clauses)
        except CnfError:
            continue
        logging.getLogger(__name__).debug("formula over %d variables found after %d shuffles", num_vars, attempt)
        return formula
    raise InfeasibleSpec(f"no formula over {num_vars} variables after {MAX_FORMULA_ATTEMPTS} shuffles")


if __name__ == "__main__":
    from .instance_file import serialize_instance

    logging.basicConfig(level=logging.DEBUG)
    for model in Model:
        cap = 2 if model == Model.PATH_CYCLE_ONLY else 3
        problem = generate(GenSpec(n=8, model=model, list_cap=cap, seed=7))
        print(f"# model {model}")
        print(serialize_instance(problem.instance, problem.deviators))

"""Gadget construction turning a (2,2)-E3-SAT formula into a perfect SMI instance.

Every variable V_i gets a variable gadget (x_i^1..x_i^4, y_i^1..y_i^4), every
clause C_j a clause gadget (c_j^1..c_j^3, p_j^1..p_j^3, q_j, z_j). In the direct
construction x_i^r and the clause agent of the matching literal occurrence rank
each other second. With connectors, a 12-agent path t_i^{r,1}..t_i^{r,12} sits in
between: t^1 takes the clause agent's place and t^7 the variable agent's, and
those two connector agents are the deviators.

Occurrences are consumed left to right: the first and second unnegated
occurrence of V_i use x_i^1 and x_i^2, the first and second negated x_i^3 and x_i^4.
"""
import logging
from functools import cached_property
from typing import Callable, Iterator, NamedTuple, Sequence

from pydantic import BaseModel, ConfigDict

from ..core.instance import Instance
from ..core.matching import Matching
from ..core.problem import DeviatorProblem, Objective, Regime
from ..errors import UnsatisfiedAssignment
from .cnf import CnfFormula, first_unsatisfied, literal_value

logger = logging.getLogger(__name__)

Lists = dict[str, list[str | None]]
External = Callable[[int], str | None]


def x(i: int, r: int) -> str:
    return f"x{i}.{r}"


def y(i: int, r: int) -> str:
    return f"y{i}.{r}"


def c(j: int, s: int) -> str:
    return f"c{j}.{s}"


def p(j: int, s: int) -> str:
    return f"p{j}.{s}"


def q(j: int) -> str:
    return f"q{j}"


def z(j: int) -> str:
    return f"z{j}"


def t(i: int, r: int, kappa: int) -> str:
    return f"t{i}.{r}.{kappa}"


def _none(_: int) -> None:
    return None


def variable_lists(i: int, external: External = _none) -> Lists:
    return {
        x(i, 1): [y(i, 1), external(1), y(i, 2)],
        x(i, 2): [y(i, 2), external(2), y(i, 3)],
        x(i, 3): [y(i, 4), external(3), y(i, 3)],
        x(i, 4): [y(i, 1), external(4), y(i, 4)],
        y(i, 1): [x(i, 1), x(i, 4)],
        y(i, 2): [x(i, 1), x(i, 2)],
        y(i, 3): [x(i, 2), x(i, 3)],
        y(i, 4): [x(i, 3), x(i, 4)],
    }


def clause_lists(j: int, external: External = _none) -> Lists:
    lists = {c(j, s): [p(j, s), external(s), q(j)] for s in (1, 2, 3)}
    lists.update({p(j, s): [c(j, s), z(j)] for s in (1, 2, 3)})
    lists[q(j)] = [c(j, 1), c(j, 2), c(j, 3)]
    lists[z(j)] = [p(j, 1), p(j, 2), p(j, 3)]
    return lists


def connector_lists(i: int, r: int, clause_agent: str | None = None, variable_agent: str | None = None) -> Lists:
    def tk(kappa: int) -> str:
        return t(i, r, kappa)

    lists = {tk(1): [tk(2), clause_agent, tk(12)]}
    lists.update({tk(kappa): [tk(kappa + 1), tk(kappa - 1)] for kappa in range(2, 6)})
    lists[tk(6)] = [tk(5), tk(7)]
    lists[tk(7)] = [tk(6), variable_agent, tk(8)]
    lists.update({tk(kappa): [tk(kappa - 1), tk(kappa + 1)] for kappa in range(8, 12)})
    lists[tk(12)] = [tk(11), tk(1)]
    return lists


def side_of(name: str, direct: bool = False) -> int:
    """Bipartition label. Without connectors the clause gadgets switch sides so x–c edges cross."""
    if name[0] == "t":
        return 0 if int(name.rsplit(".", 1)[1]) % 2 == 0 else 1
    side = 0 if name[0] in "xcz" else 1
    return 1 - side if direct and name[0] in "cpqz" else side


def variable_matching(i: int, value: bool) -> list[tuple[str, str]]:
    if value:
        return [(x(i, 1), y(i, 1)), (x(i, 2), y(i, 2)), (x(i, 3), y(i, 3)), (x(i, 4), y(i, 4))]
    return [(x(i, 1), y(i, 2)), (x(i, 2), y(i, 3)), (x(i, 3), y(i, 4)), (x(i, 4), y(i, 1))]


def clause_matching(j: int, s: int) -> list[tuple[str, str]]:
    pairs = [(c(j, s), q(j)), (p(j, s), z(j))]
    pairs += [(c(j, other), p(j, other)) for other in (1, 2, 3) if other != s]
    return pairs


def connector_matching(i: int, r: int, first: bool) -> list[tuple[str, str]]:
    if first:
        return [(t(i, r, kappa), t(i, r, kappa + 1)) for kappa in range(1, 12, 2)]
    return [(t(i, r, 1), t(i, r, 12))] + [(t(i, r, kappa), t(i, r, kappa + 1)) for kappa in range(2, 12, 2)]


def compile_lists(lists: Lists, direct: bool = False) -> tuple[Instance, dict[str, int]]:
    """Number agents in insertion order and drop entries naming absent agents."""
    ids = {name: idx for idx, name in enumerate(lists, start=1)}
    prefs = tuple(tuple(ids[e] for e in entries if e is not None and e in ids) for entries in lists.values())
    sides = tuple(side_of(name, direct) for name in lists)
    return Instance(prefs=prefs, sides=sides), ids


class GadgetIndex(BaseModel):
    """Agent ids of every gadget agent plus the occurrence wiring.

    ``wiring`` holds ``(j, s, i, r)``: literal s of clause j is occurrence r of V_i.
    """
    model_config = ConfigDict(frozen=True)

    num_vars: int
    num_clauses: int
    connectors: bool
    ids: dict[str, int]
    wiring: tuple[tuple[int, int, int, int], ...]

    @property
    def num_agents(self) -> int:
        return len(self.ids)

    @property
    def num_core_agents(self) -> int:
        """Agents of variable and clause gadgets; they come first in the layout."""
        return 8 * (self.num_vars + self.num_clauses)

    @cached_property
    def names(self) -> dict[int, str]:
        return {agent: name for name, agent in self.ids.items()}

    def agent(self, name: str) -> int:
        return self.ids[name]

    def deviators(self) -> frozenset[int]:
        if not self.connectors:
            return frozenset()
        return frozenset(self.ids[t(i, r, kappa)] for _, _, i, r in self.wiring for kappa in (1, 7))

    def communication_edges(self) -> list[tuple[int, int]]:
        """Edges x_i^r–c_j^s of the direct construction, as agent ids."""
        return [(self.ids[x(i, r)], self.ids[c(j, s)]) for j, s, i, r in self.wiring]


def wire(f: CnfFormula) -> tuple[tuple[int, int, int, int], ...]:
    unnegated = [0] * (f.num_vars + 1)
    negated = [0] * (f.num_vars + 1)
    wiring = []
    for j, clause in enumerate(f.clauses, start=1):
        for s, literal in enumerate(clause, start=1):
            i = abs(literal)
            if literal > 0:
                unnegated[i] += 1
                r = unnegated[i]
            else:
                negated[i] += 1
                r = 2 + negated[i]
            wiring.append((j, s, i, r))
    return tuple(wiring)


class GadgetBuilder:
    def __init__(self, f: CnfFormula, connectors: bool = True):
        self.logger = logging.getLogger(__name__)
        self.formula = f
        self.connectors = connectors
        self.wiring = wire(f)
        self.slot_of_literal = {(j, s): (i, r) for j, s, i, r in self.wiring}
        self.literal_of_slot = {(i, r): (j, s) for j, s, i, r in self.wiring}

    def _variable_external(self, i: int) -> External:
        def external(r: int) -> str:
            if self.connectors:
                return t(i, r, 7)
            return c(*self.literal_of_slot[(i, r)])
        return external

    def _clause_external(self, j: int) -> External:
        def external(s: int) -> str:
            i, r = self.slot_of_literal[(j, s)]
            return t(i, r, 1) if self.connectors else x(i, r)
        return external

    def lists(self) -> Lists:
        f = self.formula
        lists = {}
        for i in range(1, f.num_vars + 1):
            lists.update(variable_lists(i, self._variable_external(i)))
        for j in range(1, f.num_clauses + 1):
            lists.update(clause_lists(j, self._clause_external(j)))
        if self.connectors:
            for i in range(1, f.num_vars + 1):
                for r in (1, 2, 3, 4):
                    lists.update(connector_lists(i, r, c(*self.literal_of_slot[(i, r)]), x(i, r)))
        return lists

    def build(self) -> tuple[Instance, GadgetIndex]:
        inst, ids = compile_lists(self.lists(), direct=not self.connectors)
        index = GadgetIndex(num_vars=self.formula.num_vars, num_clauses=self.formula.num_clauses,
                            connectors=self.connectors, ids=ids, wiring=self.wiring)
        self.logger.debug("built %d agents for %d variables and %d clauses",
                          inst.num_agents, index.num_vars, index.num_clauses)
        return inst, index


def sat_to_perfect_smi(f: CnfFormula) -> tuple[DeviatorProblem, GadgetIndex]:
    inst, index = GadgetBuilder(f, connectors=True).build()
    problem = DeviatorProblem(instance=inst, deviators=index.deviators(), objective=Objective.BLOCKING_PAIRS,
                              regime=Regime.PERFECT, budget=0)
    return problem, index


def sat_to_biro_smi(f: CnfFormula) -> tuple[Instance, GadgetIndex]:
    return GadgetBuilder(f, connectors=False).build()


def witness_matching(f: CnfFormula, assignment: Sequence[bool], idx: GadgetIndex) -> Matching:
    """Perfect matching certifying a satisfying assignment.

    Variable gadgets take M¹ for true and M² for false, each clause gadget leaves
    its first true literal's agent with q_j, and a connector takes M¹ exactly when
    x_i^r already has its first choice.
    """
    unsatisfied = first_unsatisfied(f, assignment)
    if unsatisfied is not None:
        raise UnsatisfiedAssignment(unsatisfied)

    pairs = []
    for i in range(1, f.num_vars + 1):
        pairs += variable_matching(i, assignment[i - 1])
    for j, clause in enumerate(f.clauses, start=1):
        s = next(s for s, literal in enumerate(clause, start=1) if literal_value(literal, assignment))
        pairs += clause_matching(j, s)
    if idx.connectors:
        partner = {a: b for pair in pairs for a, b in (pair, pair[::-1])}
        for _, _, i, r in idx.wiring:
            first_choice = variable_lists(i)[x(i, r)][0]
            pairs += connector_matching(i, r, partner[x(i, r)] == first_choice)
    logger.debug("witness for %s over %d agents", "".join("T" if v else "F" for v in assignment), idx.num_agents)
    return Matching(num_agents=idx.num_agents, pairs=tuple((idx.ids[a], idx.ids[b]) for a, b in pairs))


def strip_connectors(m: Matching, idx: GadgetIndex) -> Matching:
    """Matching of the direct construction: pairs touching connector agents are dropped."""
    core = idx.num_core_agents
    return Matching(num_agents=core, pairs=tuple(pair for pair in m.pairs if pair[1] <= core))


def blocking_communication_edges(inst: Instance, m: Matching, idx: GadgetIndex) -> list[tuple[int, int]]:
    mate = m.mate
    blocking = []
    for a, b in idx.communication_edges():
        if inst.prefers(a, b, mate[a]) and inst.prefers(b, a, mate[b]):
            blocking.append((min(a, b), max(a, b)))
    return sorted(blocking)


class Gadget(NamedTuple):
    instance: Instance
    ids: dict[str, int]
    matchings: dict[str, Matching]


def _gadget(lists: Lists, named: dict[str, list[tuple[str, str]]]) -> Gadget:
    inst, ids = compile_lists(lists)
    matchings = {label: inst.matching((ids[a], ids[b]) for a, b in pairs) for label, pairs in named.items()}
    return Gadget(inst, ids, matchings)


def variable_gadget(i: int = 1) -> Gadget:
    return _gadget(variable_lists(i), {"M1": variable_matching(i, True), "M2": variable_matching(i, False)})


def clause_gadget(j: int = 1) -> Gadget:
    return _gadget(clause_lists(j), {f"M{s}": clause_matching(j, s) for s in (1, 2, 3)})


def connector_gadget(i: int = 1, r: int = 1) -> Gadget:
    return _gadget(connector_lists(i, r), {"M1": connector_matching(i, r, True), "M2": connector_matching(i, r, False)})


class CommunicationPath(NamedTuple):
    """One communication edge in isolation, with and without its connector.

    The variable and clause agents carry the same ids (1..16) in both instances.
    """
    slot: tuple[int, int, int, int]
    direct: Instance
    edge: tuple[int, int]
    problem: DeviatorProblem

    def strip(self, m: Matching) -> Matching:
        core = self.direct.num_agents
        return Matching(num_agents=core, pairs=tuple(pair for pair in m.pairs if pair[1] <= core))


def communication_path_instances(f: CnfFormula) -> Iterator[CommunicationPath]:
    for j, s, i, r in wire(f):
        def variable_side(rr: int, link: str) -> str | None:
            return link if rr == r else None

        def clause_side(ss: int, link: str) -> str | None:
            return link if ss == s else None

        direct_lists = variable_lists(i, lambda rr: variable_side(rr, c(j, s)))
        direct_lists.update(clause_lists(j, lambda ss: clause_side(ss, x(i, r))))
        direct, direct_ids = compile_lists(direct_lists, direct=True)

        joined = variable_lists(i, lambda rr: variable_side(rr, t(i, r, 7)))
        joined.update(clause_lists(j, lambda ss: clause_side(ss, t(i, r, 1))))
        joined.update(connector_lists(i, r, c(j, s), x(i, r)))
        inst, ids = compile_lists(joined)
        problem = DeviatorProblem(instance=inst, deviators=frozenset({ids[t(i, r, 1)], ids[t(i, r, 7)]}),
                                  objective=Objective.BLOCKING_PAIRS, regime=Regime.PERFECT, budget=0)
        yield CommunicationPath((j, s, i, r), direct, (direct_ids[x(i, r)], direct_ids[c(j, s)]), problem)

from typing import Iterable


class DsmError(Exception):
    """Base class for every error raised by this package."""


# Instance validation

class InstanceError(DsmError):
    def __init__(self, message: str, agents: Iterable[int] = ()):
        super().__init__(message)
        self.agents = tuple(agents)


class InvalidAgent(InstanceError):
    def __init__(self, agent: int, owner: int | None = None):
        where = f" in the list of agent {owner}" if owner is not None else ""
        super().__init__(f"agent id {agent} out of range{where}", [a for a in (owner, agent) if a is not None])


class SelfRank(InstanceError):
    def __init__(self, agent: int):
        super().__init__(f"agent {agent} ranks itself", [agent])


class DuplicateEntry(InstanceError):
    def __init__(self, agent: int, entry: int):
        super().__init__(f"agent {agent} lists agent {entry} more than once", [agent, entry])


class AsymmetricAcceptability(InstanceError):
    def __init__(self, i: int, j: int):
        super().__init__(f"agent {i} ranks agent {j} but agent {j} does not rank agent {i}", [i, j])
        self.i = i
        self.j = j


class SidedPairViolation(InstanceError):
    def __init__(self, i: int, j: int):
        super().__init__(f"acceptable pair {{{i},{j}}} does not cross the bipartition", [i, j])


class InvalidMatching(InstanceError):
    pass


# Problems

class ProblemError(DsmError):
    pass


# Verification

class VerificationError(DsmError):
    pass


class RegimeViolation(VerificationError):
    pass


class ValueMismatch(VerificationError):
    def __init__(self, claimed: int, actual: int):
        super().__init__(f"claimed value {claimed} but the matching has value {actual}")
        self.claimed = claimed
        self.actual = actual


class BudgetExceeded(VerificationError):
    def __init__(self, value: int, budget: int):
        super().__init__(f"value {value} exceeds the budget {budget}")
        self.value = value
        self.budget = budget


# Solvers

class SolverError(DsmError):
    pass


class NotBipartite(SolverError):
    pass


class ListTooLong(SolverError):
    def __init__(self, agent: int, length: int):
        super().__init__(f"agent {agent} has a preference list of length {length}, at most 2 is supported")
        self.agent = agent


class PerfectInfeasible(SolverError):
    pass


class RegimeUnsupported(SolverError):
    pass


class TooLarge(DsmError):
    def __init__(self, num_agents: int, cap: int):
        super().__init__(f"{num_agents} agents exceed the enumeration cap of {cap}")
        self.num_agents = num_agents
        self.cap = cap


# Formulas and reductions

class CnfError(DsmError):
    pass


class BadArity(CnfError):
    def __init__(self, clause: int, arity: int):
        super().__init__(f"clause {clause} has {arity} literals, expected 3")
        self.clause = clause


class BadOccurrence(CnfError):
    def __init__(self, var: int, polarity: bool, count: int):
        sign = "unnegated" if polarity else "negated"
        super().__init__(f"variable {var} occurs {count} times {sign}, expected 2")
        self.var = var
        self.polarity = polarity
        self.count = count


class DuplicateLiteral(CnfError):
    def __init__(self, clause: int, literal: int):
        super().__init__(f"clause {clause} repeats literal {literal}")
        self.clause = clause


class UnsatisfiedAssignment(CnfError):
    def __init__(self, clause: int):
        super().__init__(f"assignment leaves clause {clause} unsatisfied")
        self.clause = clause


class InfeasibleSpec(DsmError):
    pass


# Frontend

class InstanceFileError(DsmError):
    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class InstanceSyntaxError(InstanceFileError):
    pass

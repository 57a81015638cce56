from collections import Counter
from itertools import product
from typing import Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import BadArity, BadOccurrence, CnfError, DuplicateLiteral


class CnfFormula(BaseModel):
    """(2,2)-E3-SAT formula: three distinct literals per clause, each variable
    exactly twice unnegated and twice negated. Literals are signed variable ids."""
    model_config = ConfigDict(frozen=True)

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _validate(self) -> "CnfFormula":
        for j, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise BadArity(j, len(clause))
            seen = set()
            for literal in clause:
                if literal == 0 or abs(literal) > self.num_vars:
                    raise CnfError(f"clause {j} has literal {literal} outside 1..{self.num_vars}")
                if literal in seen:
                    raise DuplicateLiteral(j, literal)
                seen.add(literal)
        counts = Counter(literal for clause in self.clauses for literal in clause)
        for var in range(1, self.num_vars + 1):
            for polarity, literal in ((True, var), (False, -var)):
                if counts[literal] != 2:
                    raise BadOccurrence(var, polarity, counts[literal])
        return self

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def parse_cnf_22e3(text: str) -> CnfFormula:
    """Parse DIMACS text (``c`` comments, ``p cnf n m`` header, 0-terminated clauses)."""
    header = None
    tokens = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {line_no}: malformed problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfError(f"line {line_no}: malformed problem line {line!r}")
            continue
        if header is None:
            raise CnfError(f"line {line_no}: clause before the 'p cnf' line")
        try:
            tokens.extend(int(token) for token in line.split())
        except ValueError:
            raise CnfError(f"line {line_no}: non-integer literal in {line!r}")
    if header is None:
        raise CnfError("missing 'p cnf <n> <m>' line")

    clauses = []
    current = []
    for token in tokens:
        if token == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(token)
    if current:
        clauses.append(tuple(current))
    num_vars, num_clauses = header
    if len(clauses) != num_clauses:
        raise CnfError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))


def serialize_cnf(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {f.num_clauses}"]
    lines += [" ".join(map(str, clause)) + " 0" for clause in f.clauses]
    return "\n".join(lines) + "\n"


def literal_value(literal: int, assignment: Sequence[bool]) -> bool:
    value = assignment[abs(literal) - 1]
    return value if literal > 0 else not value


def first_unsatisfied(f: CnfFormula, assignment: Sequence[bool]) -> int | None:
    """1-based index of the first clause ``assignment`` falsifies, ``None`` if it satisfies ``f``."""
    if len(assignment) != f.num_vars:
        raise CnfError(f"assignment covers {len(assignment)} variables, formula has {f.num_vars}")
    for j, clause in enumerate(f.clauses, start=1):
        if not any(literal_value(literal, assignment) for literal in clause):
            return j
    return None


def evaluate(f: CnfFormula, assignment: Sequence[bool]) -> bool:
    return first_unsatisfied(f, assignment) is None


def find_satisfying_assignment(f: CnfFormula) -> tuple[bool, ...] | None:
    for assignment in product((False, True), repeat=f.num_vars):
        if evaluate(f, assignment):
            return assignment
    return None

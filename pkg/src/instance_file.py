"""Text formats: instance files and matching files.

Instance file::

    dsm 1
    agents 4
    deviators 1 3
    sides 0 1 0 1
    prefs 1: 2 4
    ...

``deviators`` and ``sides`` are optional, ``prefs`` lines come in agent order,
``#`` starts a comment. A matching file holds one ``i j`` pair per line.
"""
import logging
from pathlib import Path
from typing import AbstractSet, Iterable, Iterator

from pydantic import BaseModel, ConfigDict

from .core.instance import Instance
from .core.matching import Matching
from .core.problem import DeviatorProblem, Objective, Regime
from .errors import InstanceError, InstanceFileError, InstanceSyntaxError

logger = logging.getLogger(__name__)

FORMAT_VERSION = "1"


class InstanceFile(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: Instance
    deviators: frozenset[int] = frozenset()

    @property
    def num_agents(self) -> int:
        return self.instance.num_agents

    def problem(self, objective: Objective = Objective.BLOCKING_PAIRS, regime: Regime = Regime.ANY,
                budget: int | None = None) -> DeviatorProblem:
        return DeviatorProblem(instance=self.instance, deviators=self.deviators, objective=objective,
                               regime=regime, budget=budget)


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield line_no, tokens


def _ints(tokens: Iterable[str], line_no: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise InstanceSyntaxError(f"expected integers, got {' '.join(tokens)!r}", line_no)


class _InstanceParser:
    def __init__(self, text: str):
        self.lines = list(_content_lines(text))
        self.pos = 0
        self.last_line = self.lines[-1][0] if self.lines else 1

    def _peek(self) -> tuple[int, list[str]] | None:
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def _expect(self, keyword: str) -> tuple[int, list[str]]:
        current = self._peek()
        if current is None:
            raise InstanceSyntaxError(f"unexpected end of file, expected '{keyword}'", self.last_line)
        line_no, tokens = current
        if tokens[0] != keyword:
            raise InstanceSyntaxError(f"expected '{keyword}', got '{tokens[0]}'", line_no)
        self.pos += 1
        return line_no, tokens[1:]

    def _optional(self, keyword: str) -> tuple[int, list[str]] | None:
        current = self._peek()
        if current is None or current[1][0] != keyword:
            return None
        return self._expect(keyword)

    def parse(self) -> InstanceFile:
        line_no, rest = self._expect("dsm")
        if rest != [FORMAT_VERSION]:
            raise InstanceSyntaxError(f"unsupported format version {' '.join(rest)!r}", line_no)
        line_no, rest = self._expect("agents")
        if len(rest) != 1:
            raise InstanceSyntaxError("'agents' takes exactly one count", line_no)
        (n,) = _ints(rest, line_no)
        if n < 0:
            raise InstanceSyntaxError(f"negative agent count {n}", line_no)

        deviators = frozenset()
        if (found := self._optional("deviators")) is not None:
            line_no, rest = found
            ids = _ints(rest, line_no)
            outside = [a for a in ids if not 1 <= a <= n]
            if outside:
                raise InstanceFileError(f"deviators {outside} are not agents 1..{n}", line_no)
            deviators = frozenset(ids)

        sides = None
        if (found := self._optional("sides")) is not None:
            line_no, rest = found
            sides = tuple(_ints(rest, line_no))
            if len(sides) != n or any(s not in (0, 1) for s in sides):
                raise InstanceSyntaxError(f"'sides' needs {n} labels from {{0, 1}}", line_no)

        prefs = []
        pref_lines = {}
        for agent in range(1, n + 1):
            line_no, rest = self._expect("prefs")
            owner, colon, entries = " ".join(rest).partition(":")
            if not colon or _ints([owner], line_no) != [agent]:
                raise InstanceSyntaxError(f"expected 'prefs {agent}: ...'", line_no)
            prefs.append(tuple(_ints(entries.split(), line_no)))
            pref_lines[agent] = line_no

        if (current := self._peek()) is not None:
            raise InstanceSyntaxError(f"unexpected '{current[1][0]}' after the last preference list", current[0])

        try:
            instance = Instance(prefs=tuple(prefs), sides=sides)
        except InstanceError as e:
            line = pref_lines.get(e.agents[0]) if e.agents else None
            raise InstanceFileError(str(e), line) from e
        return InstanceFile(instance=instance, deviators=deviators)


def parse_instance(text: str) -> InstanceFile:
    return _InstanceParser(text).parse()


def serialize_instance(inst: Instance, deviators: AbstractSet[int] = frozenset()) -> str:
    lines = [f"dsm {FORMAT_VERSION}", f"agents {inst.num_agents}"]
    if deviators:
        lines.append("deviators " + " ".join(map(str, sorted(deviators))))
    if inst.sides is not None:
        lines.append("sides " + " ".join(map(str, inst.sides)))
    for a in inst.agents:
        lines.append(" ".join([f"prefs {a}:", *map(str, inst.pref(a))]))
    return "\n".join(lines) + "\n"


def serialize_problem(p: DeviatorProblem) -> str:
    return serialize_instance(p.instance, p.deviators)


def parse_matching(text: str, num_agents: int) -> Matching:
    pairs = []
    for line_no, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise InstanceSyntaxError(f"expected a pair 'i j', got {' '.join(tokens)!r}", line_no)
        pairs.append(tuple(_ints(tokens, line_no)))
    try:
        return Matching(num_agents=num_agents, pairs=tuple(pairs))
    except InstanceError as e:
        raise InstanceFileError(str(e)) from e


def serialize_matching(m: Matching) -> str:
    return "".join(line + "\n" for line in m.to_lines())


def read_instance(path: str | Path) -> InstanceFile:
    logger.debug(f"Reading instance file {path}")
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def read_matching(path: str | Path, num_agents: int) -> Matching:
    return parse_matching(Path(path).read_text(encoding="utf-8"), num_agents)


def write_text(path: str | Path, text: str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.debug(f"Wrote {path}")

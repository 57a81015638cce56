from typing import Iterator

from pydantic import BaseModel, ConfigDict

from ..core.instance import Instance
from ..errors import ListTooLong


class ComponentDecomposition(BaseModel):
    """Components of a d_max <= 2 instance.

    Paths run from their smaller-id endpoint. Cycles start at their smallest id
    and continue towards its smaller neighbour. Each tuple lists components by
    smallest contained id.
    """
    model_config = ConfigDict(frozen=True)

    paths: tuple[tuple[int, ...], ...] = ()
    even_cycles: tuple[tuple[int, ...], ...] = ()
    odd_cycles: tuple[tuple[int, ...], ...] = ()

    def cycles(self) -> Iterator[tuple[int, ...]]:
        yield from self.even_cycles
        yield from self.odd_cycles


def _component(inst: Instance, start: int) -> set[int]:
    component = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for b in inst.pref(a):
            if b not in component:
                component.add(b)
                stack.append(b)
    return component


def _walk(inst: Instance, start: int, first: int | None) -> tuple[int, ...]:
    sequence = [start]
    previous, current = start, first
    while current is not None and current != start:
        sequence.append(current)
        following = [b for b in inst.pref(current) if b != previous]
        previous, current = current, (following[0] if following else None)
    return tuple(sequence)


def decompose(inst: Instance) -> ComponentDecomposition:
    for a in inst.agents:
        if len(inst.pref(a)) > 2:
            raise ListTooLong(a, len(inst.pref(a)))

    paths, even_cycles, odd_cycles = [], [], []
    seen = set()
    for a in inst.agents:
        if a in seen:
            continue
        component = _component(inst, a)
        seen |= component
        if len(component) >= 3 and all(len(inst.pref(b)) == 2 for b in component):
            cycle = _walk(inst, a, min(inst.pref(a)))
            (even_cycles if len(cycle) % 2 == 0 else odd_cycles).append(cycle)
        else:
            start = min(b for b in component if len(inst.pref(b)) <= 1)
            first = inst.pref(start)[0] if inst.pref(start) else None
            paths.append(_walk(inst, start, first))
    return ComponentDecomposition(paths=tuple(paths), even_cycles=tuple(even_cycles), odd_cycles=tuple(odd_cycles))

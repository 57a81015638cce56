from typing import Iterable, NamedTuple

from ..classic.weighted_matching import WeightedGraph, max_weight_matching
from ..core.instance import Instance
from ..core.problem import DeviatorProblem, Regime
from .truncation import TruncationResult


class ExtensionResult(NamedTuple):
    pairs: tuple[tuple[int, int], ...] | None
    vertices: frozenset[int]
    reason: str | None = None

    @property
    def accepted(self) -> bool:
        return self.pairs is not None


def within_two_steps(inst: Instance, sources: Iterable[int]) -> set[int]:
    """Agents at acceptability distance at most 2 from ``sources``."""
    reached = set(sources)
    frontier = set(reached)
    for _ in range(2):
        frontier = {b for a in frontier for b in inst.pref(a)} - reached
        reached |= frontier
    return reached


def extension_graph(p: DeviatorProblem, trunc: TruncationResult) -> WeightedGraph:
    """Weighted graph over the agents still free after fixing M_C.

    With a size requirement every truncated edge gets ``n + |e ∩ Q|``; otherwise
    only agents near the deviators take part and only edges touching Q count.
    """
    inst = p.instance
    fixed = set(trunc.configuration.mate)
    q = trunc.must_match
    any_size = p.regime == Regime.ANY
    if any_size:
        candidates = within_two_steps(inst, p.deviators)
    else:
        candidates = set(inst.agents)
    vertices = candidates - p.deviators - fixed

    edges = []
    for u in sorted(vertices):
        for v in inst.pref(u):
            if u < v and v in vertices and trunc.keeps(u, v):
                weight = (u in q) + (v in q)
                if any_size and weight == 0:
                    continue
                edges.append((u, v, weight if any_size else inst.num_agents + weight))
    return WeightedGraph.from_edges(vertices, edges)


def extend_via_weighted_matching(p: DeviatorProblem, trunc: TruncationResult,
                                 target_size: int | None) -> ExtensionResult:
    graph = extension_graph(p, trunc)
    cfg = trunc.configuration
    fixed = set(cfg.mate)
    stranded = sorted(a for a in trunc.must_match if a not in fixed and a not in graph.vertices)
    if stranded:
        return ExtensionResult(None, graph.vertices, f"agents {stranded} must be matched but are fixed unmatched")

    extension = max_weight_matching(graph)
    covered = extension.matched()
    missing = sorted(a for a in trunc.must_match if a not in fixed and a not in covered)
    if missing:
        return ExtensionResult(None, graph.vertices, f"agents {missing} left unmatched")
    size = len(cfg.pairs) + len(extension.pairs)
    if target_size is not None and size < target_size:
        return ExtensionResult(None, graph.vertices, f"extension reaches {size} pairs, {target_size} needed")
    return ExtensionResult(tuple(sorted(cfg.pairs + extension.pairs)), graph.vertices)

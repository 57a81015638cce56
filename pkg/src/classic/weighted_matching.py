from typing import Iterable, NamedTuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, model_validator

from ..core.instance import Instance
from ..core.matching import Matching


class WeightedGraph(BaseModel):
    """Simple graph with non-negative integer edge weights; edge keys are ``(min, max)``."""
    model_config = ConfigDict(frozen=True)

    vertices: frozenset[int]
    edges: dict[tuple[int, int], int]

    @model_validator(mode="after")
    def _validate(self) -> "WeightedGraph":
        for (u, v), w in self.edges.items():
            if u >= v:
                raise ValueError(f"edge ({u}, {v}) is a self-loop or not canonical")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u}, {v}) leaves the vertex set")
            if w < 0:
                raise ValueError(f"edge ({u}, {v}) has negative weight {w}")
        return self

    @classmethod
    def from_edges(cls, vertices: Iterable[int], weighted_edges: Iterable[tuple[int, int, int]]) -> "WeightedGraph":
        edges = {}
        for u, v, w in weighted_edges:
            key = (min(u, v), max(u, v))
            if key in edges:
                raise ValueError(f"parallel edge {key}")
            edges[key] = w
        return cls(vertices=frozenset(vertices), edges=edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(sorted(self.vertices))
        for (u, v), w in sorted(self.edges.items()):
            graph.add_edge(u, v, weight=w)
        return graph


class WeightedMatching(NamedTuple):
    pairs: tuple[tuple[int, int], ...]
    weight: int

    def matched(self) -> frozenset[int]:
        return frozenset(a for pair in self.pairs for a in pair)


def max_weight_matching(g: WeightedGraph) -> WeightedMatching:
    # networkx's blossom implementation stays in integer arithmetic for integer weights
    result = nx.max_weight_matching(g.to_networkx(), maxcardinality=False, weight="weight")
    pairs = tuple(sorted((min(u, v), max(u, v)) for u, v in result))
    return WeightedMatching(pairs=pairs, weight=sum(g.edges[p] for p in pairs))


def max_cardinality_matching(inst: Instance) -> Matching:
    result = nx.max_weight_matching(inst.acceptability_graph(), maxcardinality=True)
    return inst.matching(result)

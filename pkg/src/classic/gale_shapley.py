from collections import deque

import networkx as nx

from ..core.instance import Instance
from ..core.matching import Matching
from ..errors import NotBipartite


def bipartition(inst: Instance) -> tuple[int, ...]:
    """Two-colouring of the acceptability graph (isolated agents get side 0)."""
    graph = inst.acceptability_graph()
    try:
        colour = nx.bipartite.color(graph)
    except nx.NetworkXError as e:
        raise NotBipartite("acceptability graph contains an odd cycle") from e
    return tuple(colour[a] for a in inst.agents)


def with_bipartition(inst: Instance) -> Instance:
    if inst.sides is not None:
        return inst
    return inst.with_sides(bipartition(inst))


def gale_shapley(inst: Instance) -> Matching:
    """Proposal algorithm for SMI; the side of agent 1 proposes."""
    if inst.sides is None:
        raise NotBipartite("gale_shapley needs an instance with a bipartition tag")
    n = inst.num_agents
    mate = list(range(n + 1))
    if n == 0:
        return Matching.empty(0)

    proposing = inst.sides[0]
    next_choice = [0] * (n + 1)
    free = deque(a for a in inst.agents if inst.sides[a - 1] == proposing)
    while free:
        a = free.popleft()
        prefs = inst.pref(a)
        if next_choice[a] >= len(prefs):
            continue
        b = prefs[next_choice[a]]
        next_choice[a] += 1
        current = mate[b]
        if current == b or inst.prefers(b, a, current):
            if current != b:
                mate[current] = current
                free.append(current)
            mate[a] = b
            mate[b] = a
        else:
            free.append(a)
    return inst.matching_from_mate(mate)

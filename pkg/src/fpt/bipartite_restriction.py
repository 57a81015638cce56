import logging

from ..classic.gale_shapley import gale_shapley, with_bipartition
from ..core.instance import Instance
from ..core.matching import Matching
from ..core.problem import DeviatorProblem, Regime
from ..errors import NotBipartite

logger = logging.getLogger(__name__)


def deviator_restriction(p: DeviatorProblem) -> Instance:
    """The instance without conformist–conformist acceptability."""
    d = p.deviators
    prefs = tuple(
        tuple(j for j in p.instance.pref(i) if i in d or j in d)
        for i in p.instance.agents
    )
    return Instance(prefs=prefs, sides=p.instance.sides)


def solve_bipartite_restriction(p: DeviatorProblem) -> Matching | None:
    """Matching without deviator blocking pairs, or ``None`` when the restriction is not bipartite.

    Any stable matching of the restricted instance works: a pair containing a
    deviator keeps its edge and both rankings there.
    """
    if p.regime != Regime.ANY:
        logger.debug("bipartite restriction only applies to regime any, got %s", p.regime)
        return None
    try:
        restricted = with_bipartition(deviator_restriction(p))
    except NotBipartite:
        logger.debug("restriction to deviator edges is not bipartite")
        return None
    return p.instance.matching(gale_shapley(restricted).pairs)

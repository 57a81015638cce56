from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.blocking import blocking_report, deviator_cost, is_stable
from src.core.instance import Instance
from src.core.matching import Matching
from src.core.problem import Objective
from src.oracle import enumerate_matchings
from src.reductions.gadgets import variable_gadget

from .strategies import problems


def test_unmatched_mutual_pair_blocks(pair):
    report = blocking_report(pair, Matching.empty(2), {1, 2})
    assert report.blocking_pairs == {(1, 2)}
    assert report.deviator_agents == {1, 2}
    assert report.value(Objective.BLOCKING_PAIRS) == 1
    assert report.value(Objective.BLOCKING_AGENTS) == 2


def test_variable_gadget_first_matching_blocked_by_x3_y4():
    gadget = variable_gadget()
    report = blocking_report(gadget.instance, gadget.matchings["M1"])
    x3, y4 = gadget.ids["x1.3"], gadget.ids["y1.4"]
    assert report.blocking_pairs == {(x3, y4)}
    assert report.deviator_pairs == frozenset()


def test_ordered_cycle_single_pair(ordered_cycle):
    report = blocking_report(ordered_cycle, ordered_cycle.matching([(1, 2)]), {1, 2, 3})
    assert report.blocking_pairs == {(2, 3)}
    assert report.deviator_agents == {2, 3}


def test_is_stable(solvable_triangle, ordered_cycle):
    assert is_stable(solvable_triangle, solvable_triangle.matching([(1, 2)]))
    assert not any(is_stable(ordered_cycle, m) for m in enumerate_matchings(ordered_cycle))


@settings(max_examples=60, deadline=None)
@given(problems(max_n=9))
def test_report_invariants(p):
    inst = p.instance
    for m in list(enumerate_matchings(inst))[:25]:
        report = blocking_report(inst, m, p.deviators)
        assert not report.blocking_pairs & set(m.pairs)
        assert report.deviator_pairs <= report.blocking_pairs
        assert report.deviator_agents <= report.blocking_agents & p.deviators
        assert report.blocking_agents == {a for pair in report.blocking_pairs for a in pair}
        assert (len(report.deviator_pairs) == 0) == (len(report.deviator_agents) == 0)
        everyone = blocking_report(inst, m, set(inst.agents))
        assert everyone.deviator_pairs == everyone.blocking_pairs
        assert deviator_cost(inst, m.mate, p.deviators, Objective.BLOCKING_PAIRS) == len(report.deviator_pairs)


@settings(max_examples=40, deadline=None)
@given(problems(max_n=8), st.data())
def test_deviator_pairs_grow_with_deviators(p, data):
    inst = p.instance
    extra = data.draw(st.sets(st.sampled_from(list(inst.agents)))) if inst.num_agents else set()
    for m in list(enumerate_matchings(inst))[:10]:
        smaller = blocking_report(inst, m, p.deviators)
        larger = blocking_report(inst, m, p.deviators | extra)
        assert smaller.deviator_pairs <= larger.deviator_pairs


@settings(max_examples=40, deadline=None)
@given(problems(max_n=8), st.data())
def test_report_is_invariant_under_relabelling(p, data):
    inst = p.instance
    n = inst.num_agents
    perm = [0] + data.draw(st.permutations(list(range(1, n + 1))))
    inverse = {perm[a]: a for a in inst.agents}
    relabelled = Instance(prefs=tuple(tuple(perm[b] for b in inst.pref(inverse[a])) for a in range(1, n + 1)))
    deviators = {perm[d] for d in p.deviators}
    for m in list(enumerate_matchings(inst))[:10]:
        moved = Matching(num_agents=n, pairs=tuple((perm[a], perm[b]) for a, b in m.pairs))
        original = blocking_report(inst, m, p.deviators)
        report = blocking_report(relabelled, moved, deviators)
        assert report.blocking_pairs == {tuple(sorted((perm[a], perm[b]))) for a, b in original.blocking_pairs}
        assert report.deviator_agents == {perm[a] for a in original.deviator_agents}

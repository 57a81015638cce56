import pytest

from src.core.instance import Instance, validate_instance
from src.core.matching import Matching
from src.core.problem import DeviatorProblem, Objective, Regime
from src.errors import (AsymmetricAcceptability, DuplicateEntry, InvalidAgent, InvalidMatching, ProblemError,
                        SelfRank, SidedPairViolation)
from src.reductions.gadgets import variable_gadget


def test_pair_is_valid(pair):
    assert pair.num_agents == 2
    assert pair.d_max == 1
    assert pair.num_edges == 1
    assert list(pair.edges()) == [(1, 2)]


def test_asymmetric_acceptability_names_both_agents():
    with pytest.raises(AsymmetricAcceptability) as info:
        validate_instance([[2], []])
    assert (info.value.i, info.value.j) == (1, 2)


@pytest.mark.parametrize("prefs, error", [
    ([[1]], SelfRank),
    ([[2, 2], [1]], DuplicateEntry),
    ([[3], [1]], InvalidAgent),
])
def test_malformed_lists_are_rejected(prefs, error):
    with pytest.raises(error):
        validate_instance(prefs)


def test_sides_must_separate_every_pair():
    with pytest.raises(SidedPairViolation):
        validate_instance([[2], [1]], sides=[0, 0])
    assert validate_instance([[2], [1]], sides=[0, 1]).sides == (0, 1)


def test_isolated_variable_gadget_drops_external_entries():
    gadget = variable_gadget()
    assert gadget.instance.num_agents == 8
    assert gadget.instance.d_max == 2


def test_ranks_and_preferences(ordered_cycle):
    assert ordered_cycle.rank(1, 2) == 0
    assert ordered_cycle.rank(1, 3) == 1
    assert ordered_cycle.rank(1, 1) is None
    assert ordered_cycle.prefers(1, 2, 3)
    assert not ordered_cycle.prefers(1, 3, 2)
    # being unmatched is worse than any acceptable partner
    assert ordered_cycle.prefers(1, 3, 1)


def test_matching_requires_acceptable_pairs():
    inst = Instance(prefs=((2,), (1,), ()))
    with pytest.raises(InvalidMatching):
        inst.matching([(1, 3)])
    assert inst.matching([(2, 1)]).pairs == ((1, 2),)


def test_matching_rejects_overlapping_pairs():
    with pytest.raises(InvalidMatching):
        Matching(num_agents=3, pairs=((1, 2), (2, 3)))


def test_partner_view_inverts_pairs():
    m = Matching(num_agents=5, pairs=((4, 2), (1, 5)))
    assert m.pairs == ((1, 5), (2, 4))
    assert [m.partner_of(a) for a in range(1, 6)] == [5, 4, 3, 2, 1]
    assert not m.is_matched(3)
    assert Matching.from_mate(m.mate) == m
    assert m.to_lines() == ["1 5", "2 4"]


def test_induced_relabels_in_ascending_order(ordered_cycle):
    sub, old_ids = ordered_cycle.induced([3, 2])
    assert old_ids == (2, 3)
    assert sub.prefs == ((2,), (1,))


def test_truncation_is_symmetric(ordered_cycle):
    cut = ordered_cycle.truncated({1: 1})
    assert cut.pref(1) == (2,)
    assert 1 not in cut.pref(3)


def test_fingerprint_depends_on_lists(ordered_cycle, solvable_triangle):
    assert ordered_cycle.fingerprint == Instance(prefs=ordered_cycle.prefs).fingerprint
    assert ordered_cycle.fingerprint != solvable_triangle.fingerprint


def test_acceptability_graph(ordered_cycle):
    graph = ordered_cycle.acceptability_graph()
    assert sorted(graph.edges()) == [(1, 2), (1, 3), (2, 3)]


def test_problem_validation(pair):
    with pytest.raises(ProblemError):
        DeviatorProblem(instance=pair, deviators=frozenset({3}))
    with pytest.raises(ProblemError):
        DeviatorProblem(instance=pair, budget=-1)
    p = DeviatorProblem(instance=pair, deviators=frozenset({2, 1}))
    assert p.sorted_deviators == (1, 2)
    assert p.optimize
    assert p.with_budget(0).budget == 0
    assert p.with_regime(Regime.PERFECT).regime == Regime.PERFECT
    assert p.with_objective(Objective.BLOCKING_AGENTS).objective == Objective.BLOCKING_AGENTS

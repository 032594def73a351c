from fractions import Fraction

import pytest
from hypothesis import given, settings

from eccbounds.bounds import (
    CATALOGUE,
    SINGLE_GRAPH_IDS,
    BoundId,
    BoundPreconditionError,
    InapplicableBoundError,
    Pred,
    check,
    check_all,
    check_nordhaus_gaddum,
    equality_predicate,
)
from eccbounds.families import FamilySpec, build
from eccbounds.graph import Graph, from_edge_list, parse_graph6
from eccbounds.invariants import compute_all
from eccbounds.sweep import connected_labeled_graphs

from conftest import connected_graphs

K4 = parse_graph6("C~")
P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
S4 = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
P2 = from_edge_list(2, [(0, 1)])

ASSERTED = [b for b in BoundId if CATALOGUE[b].asserted]
# printed statement disproved at n=7 (see test_spider_counterexample); every other asserted bound is sound
SOUND = [b for b in ASSERTED if b is not BoundId.T13_L]


def run(g, bid):
    return check(compute_all(g), g, bid)


def test_k4_t4():
    c = run(K4, BoundId.T4_U)
    assert (c.lhs, c.rhs, c.holds, c.is_equality, c.agreement) == (36, 36, True, True, True)


def test_p4_t4():
    c = run(P4, BoundId.T4_U)
    assert (c.lhs, c.rhs, c.is_equality, c.predicted_equality, c.agreement) == (24, 24, True, True, True)


def test_k4_t3_squared():
    c = run(K4, BoundId.T3_U)
    assert (c.lhs, c.rhs, c.is_equality, c.agreement) == (1296, 1296, True, True)
    assert c.to_dict()["lhs"] == "1296 (squared)"


def test_k4_stated_form_fails():
    c = run(K4, BoundId.T1ii_stated_U)
    assert (c.lhs, c.rhs, c.holds) == (36, 9, False)
    assert not c.asserted


def test_s4_t13():
    c = run(S4, BoundId.T13_L)
    assert (c.lhs, c.rhs, c.is_equality, c.predicted_equality, c.agreement) == (21, 21, True, True, True)


def test_c5_t10_condition_disagrees():
    c = run(C5, BoundId.T10_L)
    assert c.is_equality and c.predicted_equality is False and c.agreement is False
    assert c.alt_predicted_equality is True and c.alt_agreement is True


def test_check_all_k4():
    checks = check_all(K4)
    assert len(checks) == 23
    assert [c.id for c in checks if not c.holds] == [BoundId.T1ii_stated_U]


def test_check_all_p2():
    by_id = {c.id: c for c in check_all(P2)}
    assert by_id[BoundId.T9_L].is_equality and by_id[BoundId.T9_L].rhs == 2
    assert by_id[BoundId.T5ii_L].is_equality
    assert BoundId.T13_L not in by_id


def test_check_all_s4_only_t13_tight_below():
    lower = [c for c in check_all(S4) if not CATALOGUE[c.id].upper and c.id is not BoundId.T13_L]
    assert all(c.holds and not c.is_equality for c in lower)


def test_precondition_on_single_vertex():
    g = Graph(1, (0,))
    with pytest.raises(BoundPreconditionError):
        check(compute_all(g), g, BoundId.T8_L)
    assert all(CATALOGUE[c.id].min_n <= 1 for c in check_all(g))


def test_nordhaus_gaddum_examples():
    c = check_nordhaus_gaddum(C5)
    assert (c.lhs, c.rhs, c.is_equality, c.agreement) == (80, 80, True, True)
    c = check_nordhaus_gaddum(P4)
    assert (c.lhs, c.rhs, c.holds, c.is_equality, c.agreement) == (48, 40, True, False, True)
    with pytest.raises(InapplicableBoundError):
        check_nordhaus_gaddum(K4)


def test_negative_radicand_note():
    c = run(K4, BoundId.T7_stated_L)
    assert c.holds and not c.is_equality and "radicand negative" in c.note


def test_rational_rhs_is_exact():
    c = run(P4, BoundId.T8_L)
    assert c.rhs == Fraction(16, 3)
    assert c.to_dict()["rhs"] == "16/3"


@pytest.mark.parametrize(
    "g, pred, expected",
    [
        (build(FamilySpec("cycle", (6,))), Pred.REGULAR, True),
        (S4, Pred.STAR, True),
        (S4, Pred.PATH, False),
        (build(FamilySpec("kminusmatching", (6, 3))), Pred.COMPLETE_MINUS_MATCHING, True),
        (K4, Pred.COMPLETE_MINUS_MATCHING, False),
        (C5, Pred.ALL_ECC_TWO, True),
    ],
)
def test_predicates(g, pred, expected):
    assert equality_predicate(g, compute_all(g), pred) is expected


def test_spider_counterexample():
    # three legs of length two on seven vertices: 72 < 13 * 6
    g = parse_graph6("F?LS_")
    c = run(g, BoundId.T13_L)
    assert (c.lhs, c.rhs, c.holds) == (72, 78, False)


def test_double_star_reaches_t13_equality():
    g = parse_graph6("F??^G")
    c = run(g, BoundId.T13_L)
    assert c.is_equality and c.predicted_equality is False


def test_exhaustive_soundness_small():
    for n in range(1, 6):
        for g in connected_labeled_graphs(n):
            inv = compute_all(g)
            for c in check_all(g, inv):
                if c.asserted:
                    assert c.holds, (g.to_graph6(), c)
            if n >= 4:
                try:
                    assert check_nordhaus_gaddum(g).holds
                except InapplicableBoundError:
                    pass


@settings(max_examples=150, deadline=None)
@given(connected_graphs(min_n=2, max_n=11))
def test_sound_bounds_on_random_graphs(g):
    inv = compute_all(g)
    for bid in SOUND:
        if bid is BoundId.T12_NG or g.n < CATALOGUE[bid].min_n:
            continue
        assert check(inv, g, bid).holds, bid


def test_t13_on_trees_up_to_six():
    for n in range(3, 7):
        for g in connected_labeled_graphs(n):
            c = run(g, BoundId.T13_L)
            assert c.holds
            assert c.is_equality == c.predicted_equality


def test_single_graph_ids():
    assert BoundId.T12_NG not in SINGLE_GRAPH_IDS and len(SINGLE_GRAPH_IDS) == 23

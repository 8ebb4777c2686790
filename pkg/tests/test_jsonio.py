import json

from hypothesis import given

from arcbrick.diagrams import ArcDiagram, diagram, max_weak_example
from arcbrick.jsonio import (
    algebra_from_json,
    algebra_to_json,
    arc_from_json,
    arc_to_json,
    diagram_from_json,
    diagram_to_json,
    dumps,
    rep_from_json,
    rep_to_json,
    witness_from_json,
    witness_to_json,
)
from arcbrick.reps import algebra, brick_from_arc, direct_sum, gentle_algebra, hereditary_algebra, make_rep
from arcbrick.witness import ses_contested, ses_cross_from, ses_cross_to, verify_ses

from conftest import A, arcs_st


def through_text(obj):
    return json.loads(dumps(obj))


@given(arcs_st())
def test_arc_round_trip(g):
    assert arc_from_json(through_text(arc_to_json(g))) == g


@given(arcs_st())
def test_brick_round_trip(g):
    M = brick_from_arc(g)
    assert rep_from_json(through_text(rep_to_json(M))) == M


def test_rational_entries_survive():
    M = make_rep(2, [1, 2], {"a1": [["1/3"], ["-2"]]})
    back = rep_from_json(through_text(rep_to_json(M)))
    assert back == M
    assert rep_to_json(M)["maps"]["a1"] == [["1/3"], ["-2"]]


def test_diagram_round_trip_and_string_form():
    for n in range(2, 7):
        d = max_weak_example(n)
        assert diagram_from_json(through_text(diagram_to_json(d))) == d
    d = diagram_from_json({"n": 3, "arcs": ["0:uo", "1:"]})
    assert d == diagram([A(0, "uo", 3), A(1, "", 3)], 3)


def test_algebra_round_trip():
    for alg in (algebra(4), gentle_algebra(4), algebra(4, {3}), hereditary_algebra(4, "uou")):
        back = algebra_from_json(through_text(algebra_to_json(alg)))
        assert back.relations == alg.relations and back.killed == alg.killed


def test_witness_round_trip():
    ws = [
        ses_contested(brick_from_arc(A(0, "uo", 5)), brick_from_arc(A(3, "o", 5))),
        ses_cross_to(brick_from_arc(A(0, "uuoo", 5)), brick_from_arc(A(1, "uou", 5)), (1, 4)),
        ses_cross_from(brick_from_arc(A(1, "uou", 5)), brick_from_arc(A(0, "uuoo", 5)), (1, 4)),
    ]
    for w in ws:
        back = witness_from_json(through_text(witness_to_json(w)))
        assert (back.Y, back.E, back.X, back.kind) == (w.Y, w.E, w.X, w.kind)
        assert back.iota == tuple(w.iota) and back.pi == tuple(w.pi)
        assert verify_ses(back, algebra(5))


def test_dumps_is_compact():
    assert dumps({"a": [1, 2]}) == '{"a":[1,2]}'

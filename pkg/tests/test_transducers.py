import json
import random

import pytest

from vngroups.elements import apply_word as element_word
from vngroups.elements import depth_one_perm, iterated_perm, small_swap
from vngroups.permgrp import Perm, PermGroup
from vngroups.transducers import (SyncTransducer, TransducerError, apply_epp, apply_word, build,
                                  build_inverse, chains_agree, from_element, labeled_edges,
                                  run_chain, to_dot, transducer_from_json, transducer_to_json)
from vngroups.words import all_words, parse_point, random_point, words_up_to

TWO_STATE = {("id", "id", "1/1"), ("id", "(1 2)", "2/2"), ("(1 2)", "id", "1/2"), ("(1 2)", "(1 2)", "2/1")}
TWO_STATE_INVERSE = {("id", "id", "1/1"), ("id", "(1 2)", "2/2"), ("(1 2)", "id", "2/1"), ("(1 2)", "(1 2)", "1/2")}
THREE_STATE = {("id", "id", "1/1"), ("id", "(1 3 2)", "2/2"), ("(1 3 2)", "id", "1/3"),
        ("id", "(1 2 3)", "3/3"), ("(1 2 3)", "id", "1/2"), ("(1 3 2)", "(1 2 3)", "3/2"),
        ("(1 2 3)", "(1 3 2)", "2/3"), ("(1 3 2)", "(1 3 2)", "2/1"), ("(1 2 3)", "(1 2 3)", "3/1")}


def two_state():
    return build(PermGroup.parse("<(1 2)>", 2), {1})


def three_state():
    return build(PermGroup.parse("<(1 2 3)>", 3), {1})


def test_orbit_transducer_edge_sets():
    assert set(labeled_edges(two_state())) == TWO_STATE
    assert set(labeled_edges(build_inverse(two_state()))) == TWO_STATE_INVERSE
    assert set(labeled_edges(three_state())) == THREE_STATE


def test_identity_machine():
    A = build(PermGroup.trivial(3))
    assert set(labeled_edges(A)) == {("id", "id", "%d/%d" % (x, x)) for x in (1, 2, 3)}
    assert set(labeled_edges(build_inverse(A))) == set(labeled_edges(A))


def test_apply_word_examples():
    A = two_state()
    assert apply_word(A, (2, 2)) == ((2, 1), Perm.parse("(1 2)", 2))
    assert apply_word(A, ()) == ((), A.start)
    B = three_state()
    assert apply_word(B, (2, 3)) == ((2, 2), Perm.parse("(1 2 3)", 3))


def test_apply_epp_examples():
    A = two_state()
    assert apply_epp(A, parse_point("(2)")) == parse_point("2(1)")
    assert apply_epp(A, parse_point("(1)")) == parse_point("(1)")
    I = build(PermGroup.trivial(2))
    assert apply_epp(I, parse_point("12(21)")) == parse_point("12(21)")


@pytest.mark.parametrize("H,R", [("<(1 2)>", {1}), ("<(1 2 3)>", {1}), ("<(1 2 3)>", {3}),
                                 ("<(1 2)(3 4)>", {2, 3}), ("<(1 3 2 4)>", {4})])
def test_inverse_undoes_forward(H, R):
    n = max(R | {int(c) for c in H if c.isdigit()})
    A = build(PermGroup.parse(H, n), R)
    Ai = build_inverse(A)
    for w in words_up_to(n, 5):
        assert apply_word(Ai, apply_word(A, w)[0])[0] == w
    rng = random.Random(0)
    for _ in range(50):
        p = random_point(rng, n)
        assert apply_epp(Ai, apply_epp(A, p)) == p
        assert apply_epp(A, p).prefix(10) == apply_word(A, p.prefix(10))[0]


def test_generic_inverse_agrees_with_orbit_rules():
    A = three_state()
    assert set(labeled_edges(A.inverse())) == set(labeled_edges(build_inverse(A)))


def test_dot_output():
    dot = to_dot(two_state())
    assert dot.startswith("digraph")
    assert dot.count("->") == 4
    for label in ("1/1", "2/2", "1/2", "2/1"):
        assert 'label="%s"' % label in dot
    assert to_dot(three_state()).count("->") == 9
    assert to_dot(build(PermGroup.trivial(2))).count("->") == 2


def test_json_round_trip():
    for T in (two_state(), build_inverse(three_state())):
        back = transducer_from_json(json.loads(json.dumps(transducer_to_json(T))))
        for w in words_up_to(T.n, 4):
            assert apply_word(back, w)[0] == apply_word(T, w)[0]


def test_rejects_non_bijective_output():
    with pytest.raises(TransducerError):
        SyncTransducer(2, ["q"], {(1, "q"): (1, "q"), (2, "q"): (1, "q")}, "q")


def test_from_element_matches_table():
    for e in (depth_one_perm((2,), Perm.parse("(1 2 3)", 3)), iterated_perm((1, 3), Perm.parse("(1 3)", 3)),
              small_swap((1, 1), (1, 2), 3)):
        M = from_element(e)
        for w in all_words(3, 4):
            assert apply_word(M, w)[0] == element_word(e, w)
    with pytest.raises(TransducerError):
        from_element(small_swap((1,), (2, 1), 2))


def test_chains_agree_equals_enumeration():
    A = three_state()
    fix = from_element(depth_one_perm((), Perm.parse("(1 2 3)", 3)))
    pairs = [([A.with_start(Perm.parse("(1 2 3)", 3))], [A, fix]),  # a true restart identity
             ([A], [A, fix]),                                         # false
             ([A, fix], [fix, A])]                                    # false
    for left, right in pairs:
        ok, bad = chains_agree(left, right, 6)
        brute = all(run_chain(left, w) == run_chain(right, w) for w in words_up_to(3, 6))
        assert ok == brute
        if not ok:
            assert run_chain(left, bad) != run_chain(right, bad)
    assert chains_agree(*pairs[0], 6)[0]

import json

import pytest

from vngroups.classify import (PROVED_DISTINCT, PROVED_ISOMORPHIC, UNRESOLVED, Certificate,
                               bundled_expected, certificate_check, check_certificates, classify,
                               compare, degree_footnotes, load_expected)
from vngroups.permgrp import PermGroup, is_semiregular


def G(text, n):
    return PermGroup.parse(text, n)


def test_certificate_examples():
    s3, s2 = PermGroup.symmetric(3), G("<(1 2)>", 3)
    assert certificate_check(Certificate(G("<(1 2 3)>", 3), frozenset({3}), s2), s3, s2)
    assert certificate_check(Certificate(PermGroup.trivial(3), frozenset({1, 2, 3}), s2), s2, s2)
    assert not certificate_check(Certificate(s2, frozenset({1, 3}), PermGroup.trivial(3)), s2, PermGroup.trivial(3))
    # G must stabilise R
    assert not certificate_check(Certificate(G("<(1 2 3)>", 3), frozenset({1}), s2), s3, s2)


def test_n2_and_n3():
    r2 = classify(2)
    assert len(r2.classes) == 1
    r3 = classify(3)
    assert len(r3.classes) == 2
    assert r3.pairs() == [(0, 1, PROVED_DISTINCT)]
    for n in (2, 3):
        same, missing, extra = compare(classify(n), bundled_expected(n)[1])
        assert same and not missing and not extra


def test_report_consistency_n4():
    r = classify(4)
    assert check_certificates(r)
    trivial_class = r.classes[r.class_of(0)]
    assert {i for i in trivial_class} == {i for i, G in enumerate(r.reps) if is_semiregular(G)}
    statuses = {s for _, _, s in r.pairs()}
    assert statuses <= {PROVED_DISTINCT, UNRESOLVED}
    assert r.pair_status(1, 1) == PROVED_ISOMORPHIC
    data = json.loads(json.dumps(r.to_json()))
    assert len(data["classes"]) == len(r.classes)
    assert all(m["certificate"]["H"] for m in data["merges"])
    assert "class 0" in r.table()
    assert classify(4).partition() == r.partition()


def test_footnotes_compare_degrees():
    notes = degree_footnotes(4)
    assert any("<(1 2)>" in s for s in notes)
    assert any("<(1 2 3)>" in s for s in notes)
    assert degree_footnotes(2) == []


def test_expected_file_validation():
    r = classify(2)
    n, classes = load_expected({"n": 2, "classes": [["<()>"]]})
    with pytest.raises(ValueError):
        compare(r, classes)
    n, classes = load_expected(json.dumps({"n": 2, "classes": [["<()>"], ["<(1 2)>"]]}))
    same, missing, extra = compare(r, classes)
    assert not same and len(missing) == 2 and len(extra) == 1

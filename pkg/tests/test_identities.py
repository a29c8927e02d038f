from vngroups.identities import (absorb_identity, check_identities, commute_identity,
                                 restart_identity, twisted_identity)
from vngroups.elements import depth_one_perm
from vngroups.permgrp import Perm, PermGroup, Transversal
from vngroups.transducers import build, chains_agree, from_element


def test_all_identities_hold_for_small_degrees():
    for n in (2, 3):
        for rep in check_identities(n, max_len=8):
            assert rep.ok, rep.summary()
            assert rep.checked > 0


def test_wrong_correction_is_caught():
    # restarting at h needs the root correction g^-1 h; any other correction fails
    H = PermGroup.parse("<(1 2 3)>", 3)
    A = build(H, {1})
    g, h = Perm.identity(3), Perm.parse("(1 2 3)", 3)
    assert restart_identity(Transversal(H, {1}), g, h, 6)[0]
    for wrong in H.elements - {g.inverse() * h}:
        right = [A.with_start(g), from_element(depth_one_perm((), wrong))]
        assert not chains_agree([A.with_start(h)], right, 6)[0]


def test_twisted_identity_needs_compatible_g():
    T = Transversal(PermGroup.parse("<(1 2 3)>", 3), {1})
    h = Perm.parse("(1 2 3)", 3)
    assert all(twisted_identity(T, h, Perm.parse("(2 3)", 3), x) for x in (1, 2, 3))
    assert not all(twisted_identity(T, h, Perm.parse("(1 2)", 3), x) for x in (1, 2, 3))


def test_commute_needs_compatible_g():
    T = Transversal(PermGroup.parse("<(1 2 3)>", 3), {1})
    assert commute_identity(T, Perm.parse("(2 3)", 3), 2, 8)[0]
    ok, bad = commute_identity(T, Perm.parse("(1 2)", 3), 2, 8)
    assert not ok and bad is not None

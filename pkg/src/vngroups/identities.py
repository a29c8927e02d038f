"""
Identities between orbit transducers and iterated permutations that the
conjugation formulas rely on, checked exhaustively for small degrees.

Each identity is an equality of synchronous maps, checked on every word
up to a length bound with :func:`transducers.chains_agree`.  Products are
read left to right (first factor acts first).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .elements import depth_one_perm, iterated_perm
from .permgrp import (all_subgroups, is_semiregular, normalizer, setwise_stabilizer,
                      transversals, Transversal)
from .transducers import build, chains_agree, from_element


@dataclass
class IdentityReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        status = "ok" if self.ok else "%d failure(s)" % len(self.failures)
        return "%-22s %6d instances: %s" % (self.name, self.checked, status)


def restart_identity(T, g, h, max_len):
    """``A_h = A_g ⌊∅⌋_{g^-1 h}``: changing the start state is a root correction."""
    A = build(T.group, T)
    left = [A.with_start(h)]
    right = [A.with_start(g), from_element(depth_one_perm((), g.inverse() * h))]
    return chains_agree(left, right, max_len)


def absorb_identity(T, g, h, max_len):
    """``A_h = [∅]_{h g^-1} A_g``: an iterated permutation in front changes the start state."""
    A = build(T.group, T)
    left = [A.with_start(h)]
    right = [from_element(iterated_perm((), h * g.inverse())), A.with_start(g)]
    return chains_agree(left, right, max_len)


def commute_identity(T, g, x, max_len):
    """``[∅]_g A_{h_x} = A_{h_{x.g^-1}} [∅]_g`` for g normalizing H and stabilizing R."""
    A = build(T.group, T)
    it = from_element(iterated_perm((), g))
    left = [it, A.with_start(T.h(x))]
    right = [A.with_start(T.h(g.inverse().image(x))), it]
    return chains_agree(left, right, max_len)


def twisted_identity(T, h, g, x):
    """``h_x^-1 h g h_{x.hg} = g``."""
    return T.h(x).inverse() * h * g * T.h((h * g).image(x)) == g


def compatible(H, R):
    """N(H) ∩ Stab(R), the permutations allowed as G."""
    return sorted(normalizer(H).elements & setwise_stabilizer(R, H.degree).elements)


def check_identities(n, max_len=10):
    """Run all four identities over every semiregular H <= S_n and every transversal."""
    reports = {name: IdentityReport(name) for name in
               ("restart", "absorb", "commute", "twisted")}
    for H in all_subgroups(n):
        if not is_semiregular(H):
            continue
        for R in transversals(H):
            T = Transversal(H, R)
            Hs = sorted(H.elements)
            allowed = compatible(H, R)
            for g in Hs:
                for h in Hs:
                    for name, fn in (("restart", restart_identity), ("absorb", absorb_identity)):
                        ok, bad = fn(T, g, h, max_len)
                        reports[name].checked += 1
                        if not ok:
                            reports[name].failures.append((str(H), sorted(R), str(g), str(h), bad))
            for g in allowed:
                for x in range(1, n + 1):
                    ok, bad = commute_identity(T, g, x, max_len)
                    reports["commute"].checked += 1
                    if not ok:
                        reports["commute"].failures.append((str(H), sorted(R), str(g), x, bad))
                for h in Hs:
                    for x in range(1, n + 1):
                        reports["twisted"].checked += 1
                        if not twisted_identity(T, h, g, x):
                            reports["twisted"].failures.append((str(H), sorted(R), str(h), str(g), x))
    return list(reports.values())

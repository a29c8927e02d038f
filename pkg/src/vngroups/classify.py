"""
Isomorphism classes of V_n(G) for small n.

Subgroups of S_n are taken up to conjugacy (conjugate subgroups give
isomorphic groups by relabeling the tree).  Two classes are merged when a
semiregular H, an orbit transversal R and a subgroup G of N(H) ∩ Stab(R)
give HG in one class and G in the other; every merge keeps the witnessing
triple as a certificate.  Classes are proved distinct only by the
semiregularity obstruction; every other pair is reported as unresolved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .permgrp import (PermGroup, all_subgroups, are_conjugate_subgroups, check_budget,
                      class_index, intersection, is_semiregular, is_transversal, normalizer,
                      product_set, setwise_stabilizer, subgroup_classes, subgroups_of,
                      transversals)

PROVED_ISOMORPHIC = "proved isomorphic"
PROVED_DISTINCT = "proved non-isomorphic"
UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class Certificate:
    H: PermGroup
    R: frozenset
    G: PermGroup

    def to_json(self):
        return {"H": str(self.H), "R": sorted(self.R), "G": str(self.G)}


def certificate_check(cert, target1, target2):
    """Check the merge hypotheses and that HG ~ target1 and G ~ target2 up to conjugacy."""
    H, R, G = cert.H, frozenset(cert.R), cert.G
    n = H.degree
    if not (G.degree == n == target1.degree == target2.degree):
        return False
    if not is_semiregular(H) or not is_transversal(H, R):
        return False
    allowed = normalizer(H).elements & setwise_stabilizer(R, n).elements
    if not G.elements <= allowed:
        return False
    HG = product_set(H, G)
    if HG is None:
        return False
    return (are_conjugate_subgroups(HG, target1) is not None
            and are_conjugate_subgroups(G, target2) is not None)


class _Partition(object):
    def __init__(self, k):
        self.parent = list(range(k))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        i, j = self.find(i), self.find(j)
        if i != j:
            self.parent[max(i, j)] = min(i, j)


@dataclass
class ClassReport:
    n: int
    reps: list
    semiregular: list
    classes: list  # lists of indices into reps
    edges: list = field(default_factory=list)  # (i, j, Certificate)
    footnotes: list = field(default_factory=list)

    def class_of(self, i):
        for k, members in enumerate(self.classes):
            if i in members:
                return k
        raise KeyError(i)

    def pair_status(self, k1, k2):
        if k1 == k2:
            return PROVED_ISOMORPHIC
        semi1 = any(self.semiregular[i] for i in self.classes[k1])
        semi2 = any(self.semiregular[i] for i in self.classes[k2])
        if semi1 != semi2:
            return PROVED_DISTINCT
        return UNRESOLVED

    def pairs(self):
        out = []
        for k1 in range(len(self.classes)):
            for k2 in range(k1 + 1, len(self.classes)):
                out.append((k1, k2, self.pair_status(k1, k2)))
        return out

    def partition(self):
        """The merge classes as a set of frozensets of conjugacy class indices."""
        return {frozenset(c) for c in self.classes}

    def to_json(self):
        return {
            "n": self.n,
            "subgroups": [{"index": i, "group": str(G), "order": G.order(),
                           "semiregular": self.semiregular[i]} for i, G in enumerate(self.reps)],
            "classes": [[str(self.reps[i]) for i in c] for c in self.classes],
            "merges": [{"classes": [str(self.reps[i]), str(self.reps[j])],
                        "certificate": cert.to_json()} for i, j, cert in self.edges],
            "pairs": [{"classes": [k1, k2], "status": status} for k1, k2, status in self.pairs()],
            "footnotes": list(self.footnotes),
        }

    def table(self):
        lines = ["V_%d(G): %d subgroup classes, %d isomorphism classes found"
                 % (self.n, len(self.reps), len(self.classes))]
        for k, members in enumerate(self.classes):
            groups = ", ".join("%s%s" % (self.reps[i], "*" if self.semiregular[i] else "")
                               for i in members)
            lines.append("  class %d: %s" % (k, groups))
        lines.append("  (* = semiregular)")
        for k1, k2, status in self.pairs():
            lines.append("  class %d vs class %d: %s" % (k1, k2, status))
        for i, j, cert in self.edges:
            lines.append("  merge %s ~ %s via H=%s R={%s} G=%s"
                         % (self.reps[i], self.reps[j], cert.H,
                            ",".join(map(str, sorted(cert.R))), cert.G))
        for note in self.footnotes:
            lines.append("  note: " + note)
        return "\n".join(lines) + "\n"


def merge_certificates(n, max_degree=None):
    """Every class pair (i, j), i != j, joined by some (H, R, G), with one certificate each."""
    check_budget(n, max_degree)
    found = {}
    for H in all_subgroups(n, max_degree):
        if not is_semiregular(H):
            continue
        N = normalizer(H, max_degree)
        for R in transversals(H):
            allowed = intersection(N, setwise_stabilizer(R, n, max_degree))
            for G in subgroups_of(allowed, max_degree):
                HG = product_set(H, G)
                if HG is None:
                    continue
                i, j = class_index(HG, max_degree), class_index(G, max_degree)
                if i != j and (i, j) not in found:
                    found[(i, j)] = Certificate(H, R, G)
    return found


def classify(n, max_degree=None):
    classes = subgroup_classes(n, max_degree)
    reps = [members[0] for members in classes]
    part = _Partition(len(reps))
    edges = []
    for (i, j), cert in sorted(merge_certificates(n, max_degree).items()):
        edges.append((i, j, cert))
        part.union(i, j)
    groups = {}
    for i in range(len(reps)):
        groups.setdefault(part.find(i), []).append(i)
    report = ClassReport(
        n=n,
        reps=reps,
        semiregular=[is_semiregular(G) for G in reps],
        classes=[groups[k] for k in sorted(groups)],
        edges=edges,
    )
    report.footnotes = degree_footnotes(n)
    return report


def degree_footnotes(n):
    """Semiregularity of the cyclic groups <(1 .. k)> depends on the degree they act in."""
    notes = []
    for k in range(2, n + 1):
        cyc = "(" + " ".join(str(x) for x in range(1, k + 1)) + ")"
        here = is_semiregular(PermGroup.parse("<%s>" % cyc, n))
        own = is_semiregular(PermGroup.parse("<%s>" % cyc, k))
        if here != own:
            notes.append("<%s> is semiregular in degree %d but not in degree %d, so "
                         "V_%d(<%s>) is isomorphic to V_%d while V_%d(<%s>) is not isomorphic to V_%d"
                         % (cyc, k, n, k, cyc, k, n, cyc, n))
    return notes


def check_certificates(report):
    """Re-verify every merge edge from scratch."""
    return all(certificate_check(cert, report.reps[i], report.reps[j])
               for i, j, cert in report.edges)


def load_expected(data):
    """Expected partition from JSON ``{"n": k, "classes": [["<gens>", ...], ...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    return n, [[PermGroup.parse(text, n) for text in cls] for cls in data["classes"]]


def expected_partition(n, classes, max_degree=None):
    return {frozenset(class_index(G, max_degree) for G in cls) for cls in classes}


def compare(report, classes):
    """(matches, missing merges, extra merges) against an expected grouping."""
    want = expected_partition(report.n, classes)
    got = report.partition()
    covered = set().union(*want) if want else set()
    if covered != set(range(len(report.reps))):
        raise ValueError("expected classes do not cover every subgroup class exactly once")
    missing = [c for c in want if c not in got]
    extra = [c for c in got if c not in want]
    return got == want, missing, extra


def bundled_expected(n):
    """Published groupings shipped with the package (n = 2, 3, 4)."""
    text = resources.files("vngroups").joinpath("data").joinpath("expected-n%d.json" % n).read_text()
    return load_expected(text)

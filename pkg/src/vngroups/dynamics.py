"""
Orbits of eventually periodic points and the fixed point trichotomy for
plain V_n elements.

Near a fixed point, an element of plain V_n has either only fixed points
(equal cones) or only points of infinite orbit (nested cones).  An
iterated permutation ``[∅]_g`` whose ``g`` fixes a letter ``x`` has
points of finite nontrivial orbit arbitrarily close to ``x^ω``; that
difference is the obstruction to ``V_n(G) ≅ V_n`` for non-semiregular G.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .elements import apply, invert, is_in_plain_Vn, iterated_perm
from .permgrp import Perm, closure, is_semiregular
from .words import epp, format_point, is_prefix

DEFAULT_STEPS = 10000
DEFAULT_SIZE = 512

EQUAL = "EqualCones"
RANGE_INSIDE = "RangeInsideDomain"
DOMAIN_INSIDE = "DomainInsideRange"


class DynamicsError(ValueError):
    pass


@dataclass(frozen=True)
class OrbitResult:
    kind: str  # "finite" or "budget"
    points: tuple
    steps: int

    @property
    def finite(self):
        return self.kind == "finite"

    def size(self):
        return len(self.points) if self.finite else None

    def sizes(self):
        """Canonical representation sizes along the computed iterates."""
        return [p.size() for p in self.points]


def orbit(e, p, max_steps=DEFAULT_STEPS, max_size=DEFAULT_SIZE):
    """Iterate ``e`` from ``p`` until ``p`` recurs or a budget is hit."""
    if max_steps < 1:
        raise DynamicsError("budget must be at least one step")
    points = [p]
    q = p
    for step in range(1, max_steps + 1):
        q = apply(e, q)
        if q == p:
            return OrbitResult("finite", tuple(points), step)
        points.append(q)
        if q.size() > max_size:
            return OrbitResult("budget", tuple(points), step)
    return OrbitResult("budget", tuple(points), max_steps)


@dataclass(frozen=True)
class RowAnalysis:
    alpha: tuple
    beta: tuple
    case: str
    fixed_point: object  # EPPoint, or None when the whole cone is fixed
    nearby: str  # "fixed" or "infinite"


@dataclass
class FixedConeAnalysis:
    rows: list = field(default_factory=list)

    def cases(self):
        return [r.case for r in self.rows]


def fixed_cone_analysis(e):
    """Classify every row whose domain and range cones intersect."""
    if not is_in_plain_Vn(e):
        raise DynamicsError("fixed cone analysis needs an element of plain V_n")
    e = e.canonical()
    inverse_rows = None
    out = FixedConeAnalysis()
    for a, b, _ in e.rows:
        if a == b:
            out.rows.append(RowAnalysis(a, b, EQUAL, None, "fixed"))
        elif is_prefix(a, b):
            out.rows.append(RowAnalysis(a, b, RANGE_INSIDE, epp(a, b[len(a):]), "infinite"))
        elif is_prefix(b, a):
            # the inverse maps [b] into [a], which is the nested case again
            if inverse_rows is None:
                inverse_rows = {ra: rb for ra, rb, _ in invert(e).rows}
            target = inverse_rows[b]
            out.rows.append(RowAnalysis(a, b, DOMAIN_INSIDE, epp(b, target[len(b):]), "infinite"))
    return out


def _grows(result):
    sizes = result.sizes()
    half = len(sizes) // 2
    tail = sizes[half:]
    return not result.finite and all(x < y for x, y in zip(tail, tail[1:]))


def sample_trichotomy(e, rng, samples=3, steps=48):
    """Compare each comparable row's predicted orbit character with sampled orbits.

    Returns a list of mismatch descriptions; empty means everything agreed.
    """
    n = e.n
    analysis = fixed_cone_analysis(e)
    e_inv = None
    problems = []
    for row in analysis.rows:
        if row.fixed_point is not None:
            res = orbit(e, row.fixed_point, max_steps=2)
            if not (res.finite and res.size() == 1):
                problems.append("%s row %s: %s is not fixed" % (row.case, row.alpha, row.fixed_point))
        for _ in range(samples):
            suffix = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 4)))
            period = tuple(rng.randint(1, n) for _ in range(rng.randint(1, 3)))
            p = epp(row.alpha + suffix, period)
            if p == row.fixed_point:
                continue
            if row.case == EQUAL:
                res = orbit(e, p, max_steps=2)
                if not (res.finite and res.size() == 1):
                    problems.append("EqualCones row %s: %s is not fixed" % (row.alpha, p))
                continue
            if row.case == RANGE_INSIDE:
                res = orbit(e, p, max_steps=steps, max_size=10 ** 6)
            else:
                if e_inv is None:
                    e_inv = invert(e)
                res = orbit(e_inv, p, max_steps=steps, max_size=10 ** 6)
            if not _grows(res):
                problems.append("%s row %s: %s does not escape" % (row.case, row.alpha, p))
    return problems


@dataclass
class Witness:
    g: Perm
    x: int
    y: int
    points: list  # (gamma_k, OrbitResult) pairs

    def to_json(self):
        n = self.g.degree
        return {
            "g": str(self.g),
            "x": self.x,
            "y": self.y,
            "points": [{"point": format_point(p, n),
                        "orbit": [format_point(q, n) for q in res.points]}
                       for p, res in self.points],
        }


def gamma(x, y, k):
    """The point ``x^(k-1) y x^ω``."""
    return epp((x,) * (k - 1) + (y,), (x,))


def semiregularity_obstruction(G, K=8):
    """A ``[∅]_g`` with finite nontrivial orbits accumulating at ``x^ω``, or None if G is semiregular."""
    if is_semiregular(G):
        return None
    candidates = sorted((g for g in G.elements if not g.is_identity() and g.fixed_letters()),
                        key=lambda g: (len(g.moved_letters()), str(g)))
    g = candidates[0]
    x = g.fixed_letters()[0]
    y = g.moved_letters()[0]
    e = iterated_perm((), g, closure([g]))
    points = []
    for k in range(1, K + 1):
        p = gamma(x, y, k)
        points.append((p, orbit(e, p)))
    return Witness(g, x, y, points)


def check_witness(w):
    """The witness's orbits are finite, nontrivial, of the size of y's <g>-orbit."""
    expected = len({h.image(w.y) for h in closure([w.g]).elements})
    if w.g.image(w.x) != w.x or w.g.is_identity():
        return False
    return all(res.finite and res.size() == expected > 1 for _, res in w.points)

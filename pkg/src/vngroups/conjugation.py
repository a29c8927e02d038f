"""
The isomorphism V_n(HG) -> V_n(G), v -> A^-1 v A, where A is the orbit
transducer of (H, R) started at the identity.

Two independent routes are provided:

* :func:`phi` and :func:`phi_inverse` work row by row on normal forms.
  A row ``(alpha, beta, s)`` with ``s = h g`` becomes the rows
  ``(alpha.A + x, beta.A + x.(a^-1 h g b), g)`` where ``a``/``b`` are the
  states A reaches after reading ``alpha``/``beta``.
* :func:`phi_by_formula` conjugates the factors of ``w = v prod [beta_i]_{g_i}``
  separately with the closed generator formulas and multiplies the images.

Both are checked against :func:`conjugate_point`, which pushes a point
through the two transducers and the element itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .elements import (TableElement, canonicalize, compose, depth_one_perm,
                       iterated_perm, random_element, small_swap)
from .elements import apply as apply_element
from .permgrp import (GroupError, Perm, PermGroup, Transversal, is_semiregular, normalizer,
                      product_set, setwise_stabilizer)
from .transducers import apply_epp, apply_word, build, build_inverse
from .words import letterwise, random_point


class ConjugationError(ValueError):
    pass


class ConjugationContext(object):
    """Semiregular ``H``, transversal ``R`` and ``G <= N(H) ∩ Stab(R)``, with the transducer pair."""

    def __init__(self, H, R=None, G=None):
        n = H.degree
        if not is_semiregular(H):
            raise ConjugationError("H = %s is not semiregular" % H)
        try:
            self.transversal = R if isinstance(R, Transversal) else Transversal(H, R)
        except GroupError as exc:
            raise ConjugationError(str(exc)) from None
        G = PermGroup.trivial(n) if G is None else G
        if G.degree != n:
            raise ConjugationError("H and G have different degrees")
        allowed = normalizer(H).elements & setwise_stabilizer(self.transversal.reps, n).elements
        bad = [g for g in G.elements if g not in allowed]
        if bad:
            raise ConjugationError("%s does not normalize H and stabilize R = %s"
                                   % (bad[0], self.transversal))
        HG = product_set(H, G)
        if HG is None:
            raise ConjugationError("HG is not a group")
        self.n = n
        self.H, self.G, self.HG = H, G, HG
        self.R = self.transversal.reps
        self.A = build(H, self.transversal)
        self.A_inv = build_inverse(self.A)
        self._split = {}
        for h in H.elements:
            for g in G.elements:
                self._split[h * g] = (h, g)

    def split(self, s):
        """The unique ``(h, g)`` with ``s = h g``."""
        try:
            return self._split[s]
        except KeyError:
            raise ConjugationError("tail %s is not in HG" % s) from None

    def state(self, w):
        """State reached by A after reading ``w`` (the start state for the empty word)."""
        return apply_word(self.A, w)[1]

    def forward(self, w):
        return apply_word(self.A, w)[0]

    def backward(self, w):
        return apply_word(self.A_inv, w)[0]

    def describe(self):
        return "H = %s ; R = {%s} ; G = %s" % (self.H, ",".join(map(str, sorted(self.R))), self.G)


def phi(ctx, v):
    """Canonical table of ``A^-1 v A``; tails of the result lie in G."""
    n = ctx.n
    rows = []
    for a, b, s in v.rows:
        h, g = ctx.split(s)
        qa, qb = ctx.state(a), ctx.state(b)
        first = qa.inverse() * h * g * qb
        a2, b2 = ctx.forward(a), ctx.forward(b)
        for x in range(1, n + 1):
            rows.append((a2 + (x,), b2 + (first.image(x),), g))
    return canonicalize(TableElement(n, rows, ctx.G, check=False))


def phi_inverse(ctx, w):
    """Canonical table of ``A w A^-1``, built with the inverse transducer; tails lie in HG."""
    rows = []
    for a, b, g in w.rows:
        if g not in ctx.G:
            raise ConjugationError("tail %s is not in G = %s" % (g, ctx.G))
        a2, qa = apply_word(ctx.A_inv, a)
        b2, qb = apply_word(ctx.A_inv, b)
        rows.append((a2, b2, qa * g * qb.inverse()))
    return canonicalize(TableElement(ctx.n, rows, ctx.HG, check=False))


def phi_small_swap(ctx, r1, r2):
    """Image of the small swap of ``r1``, ``r2``: the swapped images plus two depth-one corrections."""
    q1, q2 = ctx.state(r1), ctx.state(r2)
    i1, i2 = ctx.forward(r1), ctx.forward(r2)
    out = small_swap(i1, i2, ctx.n)
    out = compose(out, depth_one_perm(i2, q1.inverse() * q2))
    return compose(out, depth_one_perm(i1, q2.inverse() * q1))


def phi_iterated_perm(ctx, rho, s):
    """Image of ``[rho]_s``: a depth-one correction at ``rho.A`` followed by ``[rho.A]_g``."""
    h, g = ctx.split(s)
    corr = ctx.state(rho).inverse() * h * ctx.state(letterwise(rho, g.inverse()))
    image = ctx.forward(rho)
    return compose(depth_one_perm(image, corr), iterated_perm(image, g, ctx.G))


def phi_prefix_map(ctx, v):
    """Image of a plain prefix substitution, as (substitution of images) times corrections."""
    n = ctx.n
    ident = Perm.identity(n)
    subst = TableElement(n, [(ctx.forward(a), ctx.forward(b), ident) for a, b, _ in v.rows])
    out = subst
    for a, b, _ in v.rows:
        corr = ctx.state(a).inverse() * ctx.state(b)
        out = compose(out, depth_one_perm(ctx.forward(b), corr))
    return out


def phi_by_formula(ctx, w):
    """``w = v prod [beta_i]_{g_i}``; conjugate each factor by its closed formula."""
    n = ctx.n
    ident = Perm.identity(n)
    v = TableElement(n, [(a, b, ident) for a, b, _ in w.rows])
    out = phi_prefix_map(ctx, v)
    for _, b, g in w.rows:
        if not g.is_identity():
            out = compose(out, phi_iterated_perm(ctx, b, g))
    return canonicalize(out)


def conjugate_point(ctx, v, p):
    """Pointwise oracle for ``A^-1 v A``."""
    return apply_epp(ctx.A, apply_element(v, apply_epp(ctx.A_inv, p)))


def conjugate_point_inverse(ctx, w, p):
    return apply_epp(ctx.A_inv, apply_element(w, apply_epp(ctx.A, p)))


@dataclass
class HomomorphismReport:
    context: str
    pairs: int = 0
    points: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        status = "ok" if self.ok else "%d counterexample(s)" % len(self.failures)
        return "%s: %d pairs, %d points: %s" % (self.context, self.pairs, self.points, status)


def verify_homomorphism(ctx, samples=100, points=5, seed=0, max_gens=8, rng=None):
    """Check phi(vw) = phi(v)phi(w), tail purity and the pointwise oracle on random samples."""
    rng = rng or random.Random(seed)
    report = HomomorphismReport(ctx.describe())
    for _ in range(samples):
        v = random_element(rng, ctx.n, ctx.HG, max_gens=max_gens)
        w = random_element(rng, ctx.n, ctx.HG, max_gens=max_gens)
        pv, pw = phi(ctx, v), phi(ctx, w)
        if phi(ctx, compose(v, w)) != compose(pv, pw):
            report.failures.append(("homomorphism", str(v), str(w)))
        if any(g not in ctx.G for g in pv.tails()):
            report.failures.append(("tails outside G", str(v)))
        for _ in range(points):
            p = random_point(rng, ctx.n)
            if apply_element(pv, p) != conjugate_point(ctx, v, p):
                report.failures.append(("pointwise", str(v), str(p)))
            report.points += 1
        report.pairs += 1
    return report


"""
Normal forms for elements of V_n(G).

An element is a table of rows ``(alpha, beta, g)``: the domain prefixes
``alpha`` and range prefixes ``beta`` each form a complete antichain, and
the element sends ``alpha + chi`` to ``beta + (chi with g applied to every
letter)``.  Plain V_n is the case where every ``g`` is the identity.
"""

from __future__ import annotations

import json

from .permgrp import GroupError, Perm, PermGroup, closure
from .words import (EMPTY_WORD_TOKENS, WordError, check_word, comparable,
                    format_word, is_complete_antichain, is_prefix, letterwise,
                    parse_word)


class ElementError(ValueError):
    pass


def complement(words, n, root=()):
    """Words whose cones, together with ``words``, partition the cone of ``root``.

    ``words`` must be an antichain of descendants of ``root``.
    """
    words = set(words)
    out = []

    def fill(prefix):
        if prefix in words:
            return
        if not any(is_prefix(prefix, w) for w in words):
            out.append(prefix)
            return
        for x in range(1, n + 1):
            fill(prefix + (x,))

    fill(tuple(root))
    return out


class TableElement(object):
    """An element of V_n(G) given by rows ``(alpha, beta, tail)``.

    Instances need not be canonical; :func:`canonicalize` produces the
    unique minimal table, and equality compares canonical tables.
    """

    def __init__(self, n, rows, tail_group=None, check=True):
        self.n = n
        self.rows = tuple(sorted((tuple(a), tuple(b), g) for a, b, g in rows))
        self.tail_group = tail_group
        self._canonical = None
        if check:
            self.validate()

    def validate(self):
        n = self.n
        for a, b, g in self.rows:
            check_word(a, n)
            check_word(b, n)
            if g.degree != n:
                raise ElementError("tail %s has degree %d, expected %d" % (g, g.degree, n))
        if not is_complete_antichain([a for a, _, _ in self.rows], n):
            raise ElementError("domain prefixes are not a complete antichain")
        if not is_complete_antichain([b for _, b, _ in self.rows], n):
            raise ElementError("range prefixes are not a complete antichain")
        if self.tail_group is not None:
            for _, _, g in self.rows:
                if g not in self.tail_group:
                    raise ElementError("tail %s is not in %s" % (g, self.tail_group))

    def canonical(self):
        if self._canonical is None:
            self._canonical = canonicalize(self)
        return self._canonical

    def key(self):
        return tuple((a, b, g.images) for a, b, g in self.canonical().rows)

    def __eq__(self, other):
        return isinstance(other, TableElement) and self.n == other.n and self.key() == other.key()

    def __hash__(self):
        return hash((self.n, self.key()))

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return invert(self)

    def __call__(self, p):
        return apply(self, p)

    def is_identity(self):
        rows = self.canonical().rows
        return len(rows) == 1 and rows[0][2].is_identity()

    def tails(self):
        return [g for _, _, g in self.rows]

    def __len__(self):
        return len(self.rows)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return "TableElement(n=%d, %d rows)" % (self.n, len(self.rows))


def identity(n, tail_group=None):
    return TableElement(n, [((), (), Perm.identity(n))], tail_group)


def _complete(n, rows, covered, tail_group=None):
    ident = Perm.identity(n)
    rows = list(rows) + [(w, w, ident) for w in complement(covered, n)]
    return TableElement(n, rows, tail_group)


def small_swap(w1, w2, n):
    """Exchange the incomparable cones of ``w1`` and ``w2``; identity elsewhere."""
    w1, w2 = tuple(w1), tuple(w2)
    check_word(w1, n)
    check_word(w2, n)
    if comparable(w1, w2):
        raise ElementError("swapped words must be incomparable: %s, %s"
                           % (format_word(w1), format_word(w2)))
    if n ** len(w2) + n ** len(w1) >= n ** (len(w1) + len(w2)):
        raise ElementError("cones of %s and %s cover Cantor space; the swap is not small"
                           % (format_word(w1), format_word(w2)))
    ident = Perm.identity(n)
    return _complete(n, [(w1, w2, ident), (w2, w1, ident)], [w1, w2])


def depth_one_perm(alpha, h):
    """Permute the child cones of ``alpha`` by ``h`` (``alpha i -> alpha (i.h)``)."""
    alpha, n = tuple(alpha), h.degree
    check_word(alpha, n)
    ident = Perm.identity(n)
    rows = [(alpha + (x,), alpha + (h.image(x),), ident) for x in range(1, n + 1)]
    return _complete(n, rows, [alpha])


def iterated_perm(alpha, g, tail_group=None):
    """Apply ``g`` to every letter below ``alpha``; identity off the cone."""
    alpha = tuple(alpha)
    check_word(alpha, g.degree)
    return _complete(g.degree, [(alpha, alpha, g)], [alpha], tail_group)


def expand_row(e, index):
    """Split row ``index`` into its ``n`` children; the element is unchanged."""
    rows = list(e.rows)
    a, b, g = rows.pop(index)
    for y in range(1, e.n + 1):
        rows.append((a + (y,), b + (g.image(y),), g))
    return TableElement(e.n, rows, e.tail_group, check=False)


def canonicalize(e):
    """Merge full sibling families until none remain; the result is unique."""
    n = e.n
    table = {a: (b, g) for a, b, g in e.rows}
    changed = True
    while changed:
        changed = False
        parents = {a[:-1] for a in table if a}
        for p in sorted(parents, key=len, reverse=True):
            kids = [p + (x,) for x in range(1, n + 1)]
            if not all(k in table for k in kids):
                continue
            b1, g = table[kids[0]]
            if not b1:
                continue
            base = b1[:-1]
            if b1[-1] != g.image(1):
                continue
            ok = True
            for x, k in enumerate(kids, 1):
                b, gx = table[k]
                if gx != g or b != base + (g.image(x),):
                    ok = False
                    break
            if ok:
                for k in kids:
                    del table[k]
                table[p] = (base, g)
                changed = True
    out = TableElement(n, [(a, b, g) for a, (b, g) in table.items()], e.tail_group, check=False)
    out._canonical = out
    return out


def find_row(e, p):
    """The row whose domain prefix is a prefix of the point ``p``."""
    for a, b, g in e.rows:
        if p.starts_with(a):
            return a, b, g
    raise ElementError("no row covers point %s" % p)


def apply(e, p):
    a, b, g = find_row(e, p)
    return p.drop(len(a)).letterwise(g).prepend(b)


def apply_word(e, w):
    """Image of a finite word long enough to pass every domain prefix, else None."""
    for a, b, g in e.rows:
        if is_prefix(a, w):
            return b + letterwise(w[len(a):], g)
    return None


def _tail_group(e1, e2):
    if e1.tail_group is None or e2.tail_group is None:
        return None
    if e1.tail_group == e2.tail_group:
        return e1.tail_group
    return closure(list(e1.tail_group.elements) + list(e2.tail_group.elements), e1.n)


def compose(e1, e2):
    """The product ``e1 e2``: first ``e1``, then ``e2``."""
    if e1.n != e2.n:
        raise ElementError("degree mismatch: %d vs %d" % (e1.n, e2.n))
    by_domain = {a: (b, g) for a, b, g in e2.rows}
    depth = max(len(a) for a in by_domain)
    rows = []
    for a, b, g in e1.rows:
        hit = None
        for k in range(min(len(b), depth) + 1):
            if b[:k] in by_domain:
                hit = b[:k]
                break
        if hit is not None:
            b2, g2 = by_domain[hit]
            rest = b[len(hit):]
            rows.append((a, b2 + letterwise(rest, g2), g * g2))
            continue
        ginv = g.inverse()
        for a2, b2, g2 in e2.rows:
            if is_prefix(b, a2):
                rest = a2[len(b):]
                rows.append((a + letterwise(rest, ginv), b2, g * g2))
    return canonicalize(TableElement(e1.n, rows, _tail_group(e1, e2), check=False))


def invert(e):
    return canonicalize(TableElement(e.n, [(b, a, g.inverse()) for a, b, g in e.rows],
                                     e.tail_group, check=False))


def power(e, k):
    if k < 0:
        return power(invert(e), -k)
    out = identity(e.n, e.tail_group)
    for _ in range(k):
        out = compose(out, e)
    return out


def is_in_plain_Vn(e):
    return all(g.is_identity() for g in e.canonical().tails())


def tails_in(e, G):
    return all(g in G for g in e.tails())


def random_element(rng, n, tail_group=None, max_gens=8, max_len=3):
    """Random product of at most ``max_gens`` generators.

    Generators are small swaps of words of length <= ``max_len``,
    depth-one permutations and iterated permutations with tails drawn from
    ``tail_group`` (plain V_n when it is None or trivial).
    """
    tails = sorted(tail_group.elements) if tail_group is not None else [Perm.identity(n)]
    out = identity(n, tail_group)
    for _ in range(rng.randint(1, max_gens)):
        out = compose(out, random_generator(rng, n, tails, max_len, tail_group))
    return out


def _random_word(rng, n, lo, hi):
    return tuple(rng.randint(1, n) for _ in range(rng.randint(lo, hi)))


def random_generator(rng, n, tails, max_len=3, tail_group=None):
    kinds = ["swap", "depth", "iter"] if len(tails) > 1 else ["swap", "depth"]
    kind = rng.choice(kinds)
    if kind == "swap":
        while True:
            w1 = _random_word(rng, n, 1, max_len)
            w2 = _random_word(rng, n, 1, max_len)
            try:
                return small_swap(w1, w2, n)
            except ElementError:
                continue
    if kind == "depth":
        images = list(range(1, n + 1))
        rng.shuffle(images)
        return depth_one_perm(_random_word(rng, n, 0, max_len - 1), Perm(images))
    return iterated_perm(_random_word(rng, n, 0, max_len), rng.choice(tails), tail_group)


def format_element(e, header=True):
    lines = ["n = %d" % e.n] if header else []
    for a, b, g in e.rows:
        lines.append("%s -> %s ; %s" % (format_word(a, e.n), format_word(b, e.n), g))
    return "\n".join(lines) + "\n"


def parse_element(text, n=None, tail_group=None):
    """Read the text row format; ``#`` lines are comments, ``n = k`` sets the degree."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.replace(" ", "").startswith("n="):
            n = int(line.split("=", 1)[1])
            continue
        if n is None:
            raise ElementError("degree unknown: add an 'n = k' line")
        try:
            lhs, g = line.split(";")
            a, b = lhs.split("->")
            a = parse_word("" if a.strip() in EMPTY_WORD_TOKENS else a, n)
            b = parse_word("" if b.strip() in EMPTY_WORD_TOKENS else b, n)
            rows.append((a, b, Perm.parse(g, n)))
        except (ValueError, WordError, GroupError) as exc:
            raise ElementError("bad row %r: %s" % (raw, exc)) from None
    if n is None:
        raise ElementError("empty element description")
    return TableElement(n, rows, tail_group)


def element_to_json(e):
    return {"n": e.n, "rows": [{"a": format_word(a, e.n, empty=""), "b": format_word(b, e.n, empty=""),
                                "g": str(g)} for a, b, g in e.rows]}


def element_from_json(data, tail_group=None):
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    rows = [(parse_word(r["a"], n), parse_word(r["b"], n), Perm.parse(r["g"], n)) for r in data["rows"]]
    return TableElement(n, rows, tail_group)


def load_element(text, n=None, tail_group=None):
    """Accept either the JSON or the row text format."""
    if text.lstrip().startswith("{"):
        return element_from_json(text, tail_group)
    return parse_element(text, n, tail_group)


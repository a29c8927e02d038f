"""
Finite words over {1..n}, cones and antichains, and eventually periodic
points ``u v v v ...`` of Cantor space.

Words are plain tuples of ints.  The empty tuple is the root of the tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product


class WordError(ValueError):
    pass


EMPTY_WORD_TOKENS = ("", "∅", "-", "ε")


def parse_word(text, n=None):
    """Digits for n <= 9 (``"121"``), space separated integers otherwise."""
    text = text.strip()
    if text in EMPTY_WORD_TOKENS:
        return ()
    if " " in text or "," in text:
        letters = tuple(int(t) for t in re.split(r"[\s,]+", text) if t)
    elif text.isdigit():
        letters = tuple(int(c) for c in text)
    else:
        raise WordError("malformed word: %r" % text)
    if n is not None:
        check_word(letters, n)
    return letters


def format_word(w, n=None, empty="∅"):
    if not w:
        return empty
    if n is not None and n > 9:
        return " ".join(str(x) for x in w)
    return "".join(str(x) for x in w)


def check_word(w, n):
    for x in w:
        if not 1 <= x <= n:
            raise WordError("letter %r out of range 1..%d" % (x, n))
    return w


def is_prefix(a, b):
    return len(a) <= len(b) and b[:len(a)] == a


def comparable(a, b):
    return is_prefix(a, b) or is_prefix(b, a)


def is_antichain(words):
    words = list(words)
    for i, a in enumerate(words):
        for b in words[i + 1:]:
            if comparable(a, b):
                return False
    return True


def is_complete_antichain(words, n):
    words = list(words)
    if not is_antichain(words):
        return False
    return sum(Fraction(1, n ** len(w)) for w in words) == 1


def letterwise(w, g):
    """Apply the permutation ``g`` to every letter of ``w``."""
    return tuple(g.images[x - 1] for x in w)


def all_words(n, length):
    return [tuple(w) for w in product(range(1, n + 1), repeat=length)]


def words_up_to(n, length):
    out = []
    for k in range(length + 1):
        out.extend(all_words(n, k))
    return out


def primitive_root(w):
    k = len(w)
    for d in range(1, k + 1):
        if k % d == 0 and w[:d] * (k // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True, order=True)
class EPPoint:
    """The infinite word ``preperiod + period + period + ...``.

    Always construct with :func:`epp`, which puts the pair in canonical
    form (primitive period, shortest preperiod); equality of canonical
    forms is then equality of points.
    """

    preperiod: tuple
    period: tuple

    def letter(self, i):
        """Letter at 0-based position ``i``."""
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, k):
        return tuple(self.letter(i) for i in range(k))

    def starts_with(self, w):
        return all(self.letter(i) == x for i, x in enumerate(w))

    def drop(self, k):
        """The point with its first ``k`` letters removed."""
        if k <= len(self.preperiod):
            return epp(self.preperiod[k:], self.period)
        r = (k - len(self.preperiod)) % len(self.period)
        return epp((), self.period[r:] + self.period[:r])

    def prepend(self, w):
        return epp(tuple(w) + self.preperiod, self.period)

    def letterwise(self, g):
        return epp(letterwise(self.preperiod, g), letterwise(self.period, g))

    def size(self):
        return len(self.preperiod) + len(self.period)

    def __str__(self):
        return format_point(self)


def epp_canonicalize(preperiod, period):
    preperiod, period = tuple(preperiod), tuple(period)
    if not period:
        raise WordError("period must be nonempty")
    period = primitive_root(period)
    while preperiod and preperiod[-1] == period[-1]:
        preperiod = preperiod[:-1]
        period = period[-1:] + period[:-1]
    return preperiod, period


def epp(preperiod, period):
    return EPPoint(*epp_canonicalize(preperiod, period))


def random_point(rng, n, max_pre=6, max_per=4):
    pre = tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.randint(1, n) for _ in range(rng.randint(1, max_per)))
    return epp(pre, per)


def epp_letterwise(p, g):
    return p.letterwise(g)


_POINT = re.compile(r"^\s*([^()]*)\(([^()]+)\)\s*$")


def parse_point(text, n=None):
    """Parse ``"pre(per)"``, e.g. ``"12(3)"`` for 1 2 3 3 3 ..."""
    m = _POINT.match(text)
    if not m:
        raise WordError("malformed point %r: expected pre(per)" % text)
    pre = parse_word(m.group(1), n)
    per = parse_word(m.group(2), n)
    if not per:
        raise WordError("empty period in %r" % text)
    return epp(pre, per)


def format_point(p, n=None):
    return format_word(p.preperiod, n, empty="") + "(" + format_word(p.period, n) + ")"

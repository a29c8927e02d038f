"""
Small permutation groups on the letters 1..n.

Everything here is brute force over S_n, which is fine because the
degrees we care about are tiny (n <= 5 by default).

Conventions: permutations act on the right and products compose left to
right, so ``x.image`` under ``g * h`` is ``(x . g) . h``.
"""

from __future__ import annotations

import re
from functools import lru_cache, total_ordering
from itertools import permutations, product

MAX_DEGREE = 5


class GroupError(ValueError):
    pass


class BudgetExceeded(GroupError):
    pass


def check_budget(n, max_degree=None):
    limit = MAX_DEGREE if max_degree is None else max_degree
    if n > limit:
        raise BudgetExceeded("degree %d exceeds enumeration budget %d" % (n, limit))


@total_ordering
class Perm(object):
    """A permutation of {1..n}; ``images[i-1]`` is the image of ``i``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        n = len(images)
        if n < 1 or sorted(images) != list(range(1, n + 1)):
            raise GroupError("not a permutation of 1..%d: %r" % (n, images))
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, n):
        images = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= n:
                    raise GroupError("letter %d out of range 1..%d" % (x, n))
                if x in seen:
                    raise GroupError("letter %d repeated in cycle notation" % x)
                seen.add(x)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text, n):
        """Parse disjoint cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
        text = text.strip()
        if text in ("", "()", "id", "Id"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise GroupError("malformed cycle notation: %r" % text)
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            letters = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if len(letters) > 1:
                cycles.append(letters)
        return cls.from_cycles(cycles, n)

    @property
    def degree(self):
        return len(self.images)

    def image(self, x):
        return self.images[x - 1]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise GroupError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        return Perm(other.images[i - 1] for i in self.images)

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Perm(inv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(self.degree)
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images, 1))

    def fixed_letters(self):
        return [i for i, j in enumerate(self.images, 1) if i == j]

    def moved_letters(self):
        return [i for i, j in enumerate(self.images, 1) if i != j]

    def order(self):
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def cycles(self):
        out, seen = [], set()
        for start in range(1, self.degree + 1):
            if start in seen or self.image(start) == start:
                continue
            cycle, x = [], start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self.image(x)
            out.append(tuple(cycle))
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)

    def __repr__(self):
        return "Perm(%r)" % (self.images,)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash


class PermGroup(object):
    """A finite permutation group, stored as its full element set."""

    def __init__(self, elements, degree, gens=None):
        self.elements = frozenset(elements)
        self.degree = degree
        self.gens = tuple(gens) if gens is not None else None
        for g in self.elements:
            if g.degree != degree:
                raise GroupError("element %s has degree %d, expected %d" % (g, g.degree, degree))

    @classmethod
    def trivial(cls, n):
        return cls([Perm.identity(n)], n, gens=())

    @classmethod
    def symmetric(cls, n):
        return cls((Perm(p) for p in permutations(range(1, n + 1))), n)

    @classmethod
    def parse(cls, text, n):
        """Parse ``"<(1 2 3), (1 2)>"`` or ``"⟨(1 2 3)⟩"``; ``"<>"``/``"<()>"`` is trivial."""
        body = text.strip()
        for lo, hi in (("<", ">"), ("⟨", "⟩"), ("{", "}")):
            if body.startswith(lo) and body.endswith(hi):
                body = body[len(lo):-len(hi)]
                break
        else:
            raise GroupError("group must be written <gens>: %r" % text)
        gens = [Perm.parse(m, n) for m in re.findall(r"(?:\([^)]*\))+", body)]
        rest = re.sub(r"(?:\([^)]*\))+", "", body)
        if rest.replace(",", "").strip():
            raise GroupError("malformed generator list: %r" % text)
        return closure(gens, n)

    def order(self):
        return len(self.elements)

    __len__ = order

    def __iter__(self):
        return iter(sorted(self.elements))

    def __contains__(self, g):
        return g in self.elements

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def identity(self):
        return Perm.identity(self.degree)

    def generators(self):
        """A small generating set: stored generators, else a greedy choice."""
        if self.gens is not None:
            return list(self.gens)
        gens, span = [], {self.identity()}
        for g in sorted(self.elements, key=lambda p: (-p.order(), p)):
            if g not in span:
                gens.append(g)
                span = closure(gens, self.degree).elements
            if len(span) == len(self.elements):
                break
        return gens

    def is_subgroup_of(self, other):
        return self.elements <= other.elements

    def conjugate(self, c):
        ci = c.inverse()
        return PermGroup((ci * g * c for g in self.elements), self.degree)

    def __str__(self):
        gens = self.generators()
        return "<" + ", ".join(str(g) for g in gens) + ">" if gens else "<()>"

    def __repr__(self):
        return "PermGroup(%s, order=%d)" % (self, self.order())


def closure(gens, n=None):
    """Smallest group containing ``gens``."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise GroupError("degree required for an empty generating set")
        n = gens[0].degree
    for g in gens:
        if g.degree != n:
            raise GroupError("degree mismatch: %s has degree %d, expected %d" % (g, g.degree, n))
    ident = Perm.identity(n)
    elements = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    gens = [g for g in gens if not g.is_identity()]
    return PermGroup(elements, n, gens=gens)


def is_semiregular(G):
    return all(not g.fixed_letters() for g in G.elements if not g.is_identity())


def orbit_of(G, x):
    return frozenset(g.image(x) for g in G.elements)


def orbits(G):
    """Orbit partition of {1..n}, each orbit sorted, orbits ordered by minimum."""
    seen, out = set(), []
    for x in range(1, G.degree + 1):
        if x not in seen:
            orb = orbit_of(G, x)
            seen |= orb
            out.append(tuple(sorted(orb)))
    return out


def canonical_transversal(G):
    return frozenset(orb[0] for orb in orbits(G))


def transversals(G):
    """Every orbit transversal of G, in a fixed order."""
    return [frozenset(choice) for choice in product(*orbits(G))]


def is_transversal(G, R):
    R = set(R)
    return all(len(R & set(orb)) == 1 for orb in orbits(G)) and R <= set(range(1, G.degree + 1))


class Transversal(object):
    """An orbit transversal ``reps`` of a semiregular group."""

    def __init__(self, group, reps=None):
        if not is_semiregular(group):
            raise GroupError("group %s is not semiregular" % group)
        reps = canonical_transversal(group) if reps is None else frozenset(reps)
        if not is_transversal(group, reps):
            raise GroupError("%s is not an orbit transversal of %s" % (sorted(reps), group))
        self.group = group
        self.reps = reps
        self._h = {}
        for x in range(1, group.degree + 1):
            hits = [h for h in group.elements if h.image(x) in reps]
            assert len(hits) == 1
            self._h[x] = hits[0]

    def h(self, x):
        """The unique element of the group carrying ``x`` into the transversal."""
        return self._h[x]

    def __str__(self):
        return "{" + ",".join(str(r) for r in sorted(self.reps)) + "}"


def h_map(T, x):
    return T.h(x)


@lru_cache(maxsize=None)
def _symmetric_elements(n):
    return tuple(Perm(p) for p in permutations(range(1, n + 1)))


def symmetric_elements(n, max_degree=None):
    check_budget(n, max_degree)
    return _symmetric_elements(n)


def normalizer(H, max_degree=None):
    """N_{S_n}(H) by brute force."""
    out = []
    for c in symmetric_elements(H.degree, max_degree):
        ci = c.inverse()
        if all(ci * h * c in H.elements for h in H.elements):
            out.append(c)
    return PermGroup(out, H.degree)


def setwise_stabilizer(R, n, max_degree=None):
    R = frozenset(R)
    return PermGroup((g for g in symmetric_elements(n, max_degree)
                      if frozenset(g.image(r) for r in R) == R), n)


def intersection(G, H):
    return PermGroup(G.elements & H.elements, G.degree)


def product_set(H, G):
    """The set HG as a group if it is closed under multiplication, else None."""
    if H.degree != G.degree:
        raise GroupError("degree mismatch")
    prod = {h * g for h in H.elements for g in G.elements}
    for a in prod:
        for b in prod:
            if a * b not in prod:
                return None
    return PermGroup(prod, H.degree)


def _close_tuples(gens, ident):
    elements = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i - 1] for i in x)
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    return frozenset(elements)


@lru_cache(maxsize=None)
def _all_subgroups(n):
    ident = tuple(range(1, n + 1))
    sym = [p.images for p in _symmetric_elements(n)]
    found = {}
    for g in sym:
        found.setdefault(_close_tuples([g], ident), (g,))
    frontier = list(found.items())
    while frontier:
        new = []
        for elements, gens in frontier:
            for g in sym:
                if g in elements:
                    continue
                K = _close_tuples(gens + (g,), ident)
                if K not in found:
                    found[K] = gens + (g,)
                    new.append((K, gens + (g,)))
        frontier = new
    groups = []
    for elements, gens in found.items():
        gens = [Perm(g) for g in gens if g != ident]
        groups.append(PermGroup((Perm(e) for e in elements), n, gens=gens))
    return tuple(sorted(groups, key=subgroup_key))


def support(G):
    return sorted({x for g in G.elements for x in g.moved_letters()})


def subgroup_key(G):
    sup = support(G)
    return (G.order(), sup[-1] if sup else 0, sorted(G.elements))


def all_subgroups(n, max_degree=None):
    """Every subgroup of S_n, by iterated closure from the cyclic subgroups."""
    check_budget(n, max_degree)
    return list(_all_subgroups(n))


def subgroups_of(G, max_degree=None):
    return [K for K in all_subgroups(G.degree, max_degree) if K.elements <= G.elements]


def are_conjugate_subgroups(G, H, max_degree=None):
    """A permutation ``c`` with ``c^-1 G c == H``, or None."""
    if G.degree != H.degree:
        raise GroupError("degree mismatch")
    if G.order() != H.order():
        return None
    for c in symmetric_elements(G.degree, max_degree):
        ci = c.inverse()
        if all(ci * g * c in H.elements for g in G.elements):
            return c
    return None


@lru_cache(maxsize=None)
def _conjugacy_classes(n):
    classes, index = [], {}
    for G in _all_subgroups(n):
        if G.elements in index:
            continue
        k = len(classes)
        members = []
        for c in _symmetric_elements(n):
            K = G.conjugate(c)
            if K.elements not in index:
                index[K.elements] = k
                members.append(K)
        classes.append(sorted(members, key=subgroup_key))
    return tuple(tuple(c) for c in classes), index


def subgroup_classes(n, max_degree=None):
    """Conjugacy classes of subgroups of S_n, each as a list of its members."""
    check_budget(n, max_degree)
    return [list(c) for c in _conjugacy_classes(n)[0]]


def class_index(G, max_degree=None):
    check_budget(G.degree, max_degree)
    return _conjugacy_classes(G.degree)[1][G.elements]


def subgroups_up_to_conjugacy(n, max_degree=None):
    """One representative per conjugacy class: the member with the smallest support, then least elements."""
    return [members[0] for members in subgroup_classes(n, max_degree)]

"""
Synchronous transducers over {1..n} and the orbit transducers built from
a semiregular group H and an orbit transversal R.

The orbit transducer with start state h reads a letter i in state s,
writes ``i.s`` and moves to ``h_i``, the element of H carrying i into R.
The next state never depends on the current state.
"""

from __future__ import annotations

import json

from .permgrp import GroupError, Perm, Transversal
from .words import epp


class TransducerError(ValueError):
    pass


def state_label(q):
    if isinstance(q, Perm):
        return "id" if q.is_identity() else str(q)
    return str(q)


class SyncTransducer(object):
    """Letter-to-letter transducer with transition table ``delta[(letter, state)] = (out, next)``."""

    def __init__(self, n, states, delta, start):
        self.n = n
        self.states = tuple(states)
        self.delta = dict(delta)
        self.start = start
        if start not in self.states:
            raise TransducerError("start state %s is not a state" % state_label(start))
        for q in self.states:
            outs = []
            for x in range(1, n + 1):
                if (x, q) not in self.delta:
                    raise TransducerError("no transition for letter %d in state %s" % (x, state_label(q)))
                out, nxt = self.delta[(x, q)]
                if nxt not in self.states:
                    raise TransducerError("transition into unknown state %s" % state_label(nxt))
                outs.append(out)
            if sorted(outs) != list(range(1, n + 1)):
                raise TransducerError("output map of state %s is not a bijection" % state_label(q))

    def output(self, x, q):
        return self.delta[(x, q)][0]

    def next_state(self, x, q):
        return self.delta[(x, q)][1]

    def with_start(self, q):
        return SyncTransducer(self.n, self.states, self.delta, q)

    def inverse(self):
        """The inverse machine obtained by reading each state's output map backwards."""
        delta = {}
        for (x, q), (y, nxt) in self.delta.items():
            delta[(y, q)] = (x, nxt)
        return SyncTransducer(self.n, self.states, delta, self.start)

    def __str__(self):
        return "SyncTransducer(n=%d, %d states, start %s)" % (self.n, len(self.states), state_label(self.start))


class OrbitTransducer(SyncTransducer):
    """The transducer with states H, output ``i.s`` and next state ``h_i``."""

    def __init__(self, transversal, start):
        H = transversal.group
        if start not in H:
            raise TransducerError("start state %s is not in %s" % (start, H))
        self.transversal = transversal
        self.group = H
        states = sorted(H.elements, key=state_label)
        delta = {(x, s): (s.image(x), transversal.h(x))
                 for s in states for x in range(1, H.degree + 1)}
        super().__init__(H.degree, states, delta, start)

    def with_start(self, q):
        return OrbitTransducer(self.transversal, q)


def build(H, R=None, h=None):
    """The orbit transducer for semiregular ``H`` with transversal ``R`` and start ``h``."""
    try:
        T = R if isinstance(R, Transversal) else Transversal(H, R)
    except GroupError as exc:
        raise TransducerError(str(exc)) from None
    return OrbitTransducer(T, H.identity() if h is None else h)


def build_inverse(A):
    """Inverse of an orbit transducer: output ``i.s^-1``, next state ``h_(i.s^-1)``."""
    T = A.transversal
    delta = {}
    for s in A.states:
        si = s.inverse()
        for x in range(1, A.n + 1):
            y = si.image(x)
            delta[(x, s)] = (y, T.h(y))
    return SyncTransducer(A.n, A.states, delta, A.start)


def apply_word(T, w, q=None):
    """Output word and the state reached; the empty word leaves the start state."""
    q = T.start if q is None else q
    out = []
    for x in w:
        y, q = T.delta[(x, q)]
        out.append(y)
    return tuple(out), q


def final_state(T, w, q=None):
    return apply_word(T, w, q)[1]


def apply_epp(T, p, q=None):
    """Image of an eventually periodic point.

    After the preperiod, the period is fed block by block; the first
    repeated state at a block boundary closes the output period.
    """
    out_pre, q = apply_word(T, p.preperiod, q)
    seen = {}
    blocks = []
    while q not in seen:
        seen[q] = len(blocks)
        block, q = apply_word(T, p.period, q)
        blocks.append(block)
    i = seen[q]
    pre = out_pre + sum(blocks[:i], ())
    per = sum(blocks[i:], ())
    return epp(pre, per)


def to_dot(T, name="A"):
    """Graphviz digraph: one node per state, edges labeled ``in/out``."""
    states = sorted(T.states, key=state_label)
    ids = {q: "q%d" % i for i, q in enumerate(states)}
    lines = ["digraph %s {" % name, "  rankdir=LR;", "  node [shape=circle];"]
    for q in states:
        attrs = 'label="%s"' % state_label(q)
        if q == T.start:
            attrs += ", penwidth=2"
        lines.append("  %s [%s];" % (ids[q], attrs))
    for q in states:
        for x in range(1, T.n + 1):
            y, nxt = T.delta[(x, q)]
            lines.append('  %s -> %s [label="%d/%d"];' % (ids[q], ids[nxt], x, y))
    lines.append("}")
    return "\n".join(lines) + "\n"


def labeled_edges(T):
    """Edges as ``(source label, target label, "in/out")`` triples."""
    return sorted((state_label(q), state_label(nxt), "%d/%d" % (x, y))
                  for (x, q), (y, nxt) in T.delta.items())


def transducer_to_json(T):
    states = sorted(T.states, key=state_label)
    return {
        "n": T.n,
        "states": [state_label(q) for q in states],
        "start": state_label(T.start),
        "delta": [{"state": state_label(q), "in": x, "out": T.delta[(x, q)][0],
                   "next": state_label(T.delta[(x, q)][1])}
                  for q in states for x in range(1, T.n + 1)],
    }


def transducer_from_json(data):
    """Rebuild a transducer; states come back as their labels (strings)."""
    if isinstance(data, str):
        data = json.loads(data)
    delta = {(int(d["in"]), d["state"]): (int(d["out"]), d["next"]) for d in data["delta"]}
    return SyncTransducer(int(data["n"]), data["states"], delta, data["start"])



def from_element(e):
    """The synchronous transducer of a table element, when it has one.

    Needs every row to satisfy ``|alpha| == |beta|`` and each output letter
    to depend only on the input read so far.  States are the internal nodes
    of the domain tree plus one state per tail permutation.
    """
    n = e.n
    rows = e.canonical().rows
    for a, b, _ in rows:
        if len(a) != len(b):
            raise TransducerError("row %r -> %r changes length" % (a, b))
    internal = {a[:k] for a, _, _ in rows for k in range(len(a))}
    tails = {g for _, _, g in rows}
    states = [("node", v) for v in sorted(internal)] + [("tail", g) for g in sorted(tails)]
    by_domain = {a: (b, g) for a, b, g in rows}
    delta = {}
    for g in tails:
        for x in range(1, n + 1):
            delta[(x, ("tail", g))] = (g.image(x), ("tail", g))
    for v in internal:
        for x in range(1, n + 1):
            child = v + (x,)
            outs = {b[len(v)] for a, b, _ in rows if a[:len(child)] == child}
            if len(outs) != 1:
                raise TransducerError("element is not sequential at %r" % (child,))
            nxt = ("tail", by_domain[child][1]) if child in by_domain else ("node", child)
            delta[(x, ("node", v))] = (outs.pop(), nxt)
    start = ("node", ()) if () in internal else ("tail", by_domain[()][1])
    return SyncTransducer(n, states, delta, start)


def run_chain(machines, w):
    """Feed ``w`` through the machines left to right."""
    for T in machines:
        w = apply_word(T, w)[0]
    return w


def chains_agree(left, right, max_len):
    """Do two chains of synchronous machines agree on every word of length <= max_len?

    Walks the product of all machines depth by depth; two synchronous
    maps agree on every word of length <= L exactly when no reachable
    product state at depth < L sends some letter to different outputs.
    Returns ``(True, None)`` or ``(False, shortest counterexample)``.
    """
    n = left[0].n if left else right[0].n
    start = (tuple(T.start for T in left), tuple(T.start for T in right))
    frontier = {start: ()}
    for _ in range(max_len):
        nxt = {}
        for (ql, qr), word in frontier.items():
            for x in range(1, n + 1):
                yl, ql2 = _step_chain(left, ql, x)
                yr, qr2 = _step_chain(right, qr, x)
                if yl != yr:
                    return False, word + (x,)
                nxt.setdefault((ql2, qr2), word + (x,))
        frontier = nxt
    return True, None


def _step_chain(machines, states, x):
    out = []
    for T, q in zip(machines, states):
        x, q2 = T.delta[(x, q)]
        out.append(q2)
    return x, tuple(out)

"""Command line interface: ``vngroups act|transducer|phi|verify|classify``.

Exit codes: 0 success, 1 verification counterexample or mismatch,
2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import classify as classify_mod
from .conjugation import ConjugationContext, ConjugationError, phi, phi_inverse, verify_homomorphism
from .dynamics import check_witness, semiregularity_obstruction
from .elements import ElementError, apply, format_element, load_element
from .identities import check_identities
from .permgrp import GroupError, Perm, PermGroup
from .transducers import (TransducerError, apply_word, build, build_inverse, to_dot,
                          transducer_to_json)
from .words import WordError, format_point, format_word, parse_point, parse_word

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def infer_degree(*texts):
    letters = [int(t) for text in texts if text for t in re.findall(r"\d+", text)]
    return max([2] + letters)


def parse_group(text, n):
    try:
        return PermGroup.parse(text, n)
    except GroupError as exc:
        raise UsageError(str(exc)) from None


def parse_letters(text):
    if text is None:
        return None
    return {int(t) for t in re.split(r"[\s,{}]+", text) if t}


def _context(args):
    n = args.n or infer_degree(args.group, args.G, args.R)
    H = parse_group(args.group, n)
    G = parse_group(args.G, n) if args.G else None
    try:
        return ConjugationContext(H, parse_letters(args.R), G)
    except ConjugationError as exc:
        raise UsageError("invalid context: %s" % exc) from None


def cmd_act(args, out):
    text = Path(args.element).read_text()
    try:
        e = load_element(text, args.n)
        p = parse_point(args.point, e.n)
    except (ElementError, WordError, GroupError) as exc:
        raise UsageError(str(exc)) from None
    out.write(format_point(apply(e, p), e.n) + "\n")
    return OK


def cmd_transducer(args, out):
    n = args.n or infer_degree(args.group, args.R, args.start)
    H = parse_group(args.group, n)
    try:
        start = Perm.parse(args.start, n) if args.start else None
        A = build(H, parse_letters(args.R), start)
    except (TransducerError, GroupError) as exc:
        raise UsageError(str(exc)) from None
    T = build_inverse(A) if args.inverse else A
    if args.apply is not None:
        try:
            w = parse_word(args.apply, n)
        except WordError as exc:
            raise UsageError(str(exc)) from None
        word, state = apply_word(T, w)
        out.write(format_word(word, n, empty="") + "\n")
        if args.verbose:
            out.write("final state: %s\n" % state)
    elif args.json:
        out.write(json.dumps(transducer_to_json(T), indent=2) + "\n")
    else:
        out.write(to_dot(T, "A_inv" if args.inverse else "A"))
    return OK


def provenance(ctx):
    return "# conjugated by the orbit transducer A_id: %s\n" % ctx.describe()


def cmd_phi(args, out):
    ctx = _context(args)
    text = Path(args.element).read_text()
    try:
        e = load_element(text, ctx.n)
        image = phi_inverse(ctx, e) if args.inverse else phi(ctx, e)
    except (ElementError, ConjugationError, GroupError, WordError) as exc:
        raise UsageError(str(exc)) from None
    result = provenance(ctx) + format_element(image)
    if args.output:
        Path(args.output).write_text(result)
    else:
        out.write(result)
    return OK


def cmd_verify(args, out):
    if not (args.lemmas or args.homomorphism or args.dynamics):
        raise UsageError("choose --lemmas, --homomorphism or --dynamics")
    status = OK
    if args.lemmas:
        n = args.n or 3
        for rep in check_identities(n, args.max_len):
            out.write("n=%d %s\n" % (n, rep.summary()))
            for failure in rep.failures[:5]:
                out.write("  counterexample: %r\n" % (failure,))
            if not rep.ok:
                status = FAILED
    if args.homomorphism:
        if not args.group:
            raise UsageError("--homomorphism needs --group")
        ctx = _context(args)
        rep = verify_homomorphism(ctx, samples=args.samples, seed=args.seed)
        out.write(rep.summary() + "\n")
        for failure in rep.failures[:5]:
            out.write("  counterexample: %r\n" % (failure,))
        if not rep.ok:
            status = FAILED
    if args.dynamics:
        if not args.group:
            raise UsageError("--dynamics needs --group")
        n = args.n or infer_degree(args.group)
        G = parse_group(args.group, n)
        w = semiregularity_obstruction(G, K=args.k)
        if w is None:
            out.write("%s is semiregular: no obstruction\n" % G)
        else:
            out.write(json.dumps(w.to_json(), indent=2) + "\n")
            if not check_witness(w):
                status = FAILED
    return status


def cmd_classify(args, out):
    try:
        report = classify_mod.classify(args.n, max_degree=args.max_degree)
    except GroupError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        out.write(json.dumps(report.to_json(), indent=2) + "\n")
    else:
        out.write(report.table())
    status = OK if classify_mod.check_certificates(report) else FAILED
    if args.expect:
        try:
            n, classes = classify_mod.load_expected(Path(args.expect).read_text())
        except (OSError, ValueError, KeyError, GroupError) as exc:
            raise UsageError("cannot read expected classes: %s" % exc) from None
        if n != args.n:
            raise UsageError("expected classes are for n=%d" % n)
        same, missing, extra = classify_mod.compare(report, classes)
        if not same:
            status = FAILED
            for c in missing:
                out.write("expected class not found: %s\n"
                          % ", ".join(str(report.reps[i]) for i in sorted(c)))
            for c in extra:
                out.write("found class not expected: %s\n"
                          % ", ".join(str(report.reps[i]) for i in sorted(c)))
        else:
            out.write("partition matches %s\n" % args.expect)
    return status


def _add_context_flags(p):
    p.add_argument("--group", "-H", help="semiregular group H, e.g. '<(1 2 3)>'")
    p.add_argument("--R", help="orbit transversal, e.g. '1' or '1,3' (default: orbit minima)")
    p.add_argument("--G", help="group G <= N(H) ∩ Stab(R) (default: trivial)")
    p.add_argument("--n", type=int, help="degree (default: largest letter mentioned, at least 2)")


def build_parser():
    parser = argparse.ArgumentParser(prog="vngroups", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("act", help="apply an element to an eventually periodic point")
    p.add_argument("element", help="element file (row text or JSON)")
    p.add_argument("point", help="point as pre(per), e.g. '1(2)'")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("transducer", help="build the orbit transducer of (H, R)")
    p.add_argument("--group", "-H", required=True)
    p.add_argument("--R")
    p.add_argument("--start", help="start state (default: identity)")
    p.add_argument("--n", type=int)
    p.add_argument("--inverse", action="store_true", help="use the inverse transducer")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--dot", action="store_true", help="Graphviz output (default)")
    mode.add_argument("--json", action="store_true")
    mode.add_argument("--apply", metavar="WORD")
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_transducer)

    p = sub.add_parser("phi", help="conjugate an element by the orbit transducer")
    _add_context_flags(p)
    p.add_argument("element")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("verify", help="run identity, homomorphism or dynamics checks")
    _add_context_flags(p)
    p.add_argument("--lemmas", action="store_true")
    p.add_argument("--homomorphism", action="store_true")
    p.add_argument("--dynamics", action="store_true")
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=8, help="number of accumulating points in a witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="isomorphism classes of V_n(G) for G <= S_n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect", help="JSON file of expected classes")
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except (UsageError, OSError) as exc:
        sys.stderr.write("vngroups: %s\n" % exc)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

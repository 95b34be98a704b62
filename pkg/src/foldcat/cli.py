"""Command-line interface.

Exit codes: 0 on success, 1 on invalid input, 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .appendix import appendix_examples
from .chevalley import BSPoint, chart_coords, seed_from_env, verify_relations
from .curves import is_topological, moment_graph
from .fold import MorphismError, compose, image_membership
from .galleries import betas, enumerate_galleries, parse_gallery, seq
from .gkm import expected_dimension, gkm_basis, harterich_member, restrict
from .polyring import PolyParseError, format_poly
from .rootsys import RootSystemError, build_root_system, format_root
from .serialize import (
    InputError,
    class_from_doc,
    class_to_doc,
    load_doc,
    morphism_from_doc,
    morphism_to_doc,
    parse_word,
    system_for,
    weyl_to_doc,
)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class VerificationFailed(Exception):
    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _seq_from(args, word_text):
    word = parse_word(word_text)
    rs = system_for(args.system, word)
    return seq(rs, word)


# ----------------------------------------------------------------- commands


def cmd_roots(args):
    rs = build_root_system(args.family.upper(), args.rank)
    roots = [list(r) for r in rs.positive_roots]
    text = "\n".join(format_root(r) for r in rs.positive_roots)
    _emit(args, {"system": rs.to_json(), "cartan": [list(r) for r in rs.cartan], "positive_roots": roots}, text)


def cmd_galleries(args):
    s = _seq_from(args, args.seq)
    gs = enumerate_galleries(s)
    _emit(args, {"seq": list(s.indices), "galleries": [str(g) for g in gs]}, "\n".join(str(g) for g in gs))


def cmd_beta(args):
    s = _seq_from(args, args.seq)
    g = parse_gallery(s, args.gallery)
    bs = betas(g)
    lines = [f"beta_{i}{g} = {format_root(b)}" for i, b in enumerate(bs, start=1)]
    _emit(args, {"gallery": str(g), "betas": [list(b) for b in bs]}, "\n".join(lines))


def cmd_moment_graph(args):
    s = _seq_from(args, args.seq)
    mg = moment_graph(s)
    if args.dot:
        out = mg.to_dot()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
        return
    text = "\n".join(f"{a} -- {b}  [{format_root(lab)}]" for a, b, _, lab in mg.edges)
    _emit(args, mg.to_json(), text)


def _rotation_text(m) -> str:
    w = weyl_to_doc(m.s.rs, m.w)
    if not w["word"]:
        return "e"
    if "cycles" in w:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in w["cycles"])
    return "".join(f"s{i}" for i in w["word"])


def _morphism_text(m) -> str:
    rows = [f"{m.s} -> {m.s2}, p = {list(m.p.images)}",
            f"sign {tuple(m.sign)}, rotation {_rotation_text(m)}",
            f"verified: {m.verification}"]
    return "\n".join(rows)


def cmd_morphism(args):
    if args.action == "compose":
        if len(args.docs) != 2:
            raise InputError("compose takes two morphisms: FIRST SECOND (the result is SECOND after FIRST)")
        first = morphism_from_doc(load_doc(args.docs[0]))
        second = morphism_from_doc(load_doc(args.docs[1]))
        m = compose(second, first)
        _emit(args, morphism_to_doc(m), _morphism_text(m))
        return
    if len(args.docs) != 1:
        raise InputError(f"{args.action} takes one morphism document")
    doc = load_doc(args.docs[0])
    try:
        m = morphism_from_doc(doc)
    except MorphismError as e:
        if args.action == "check":
            raise VerificationFailed({"valid": False, "reason": str(e)}) from None
        raise
    if args.action == "check":
        _emit(args, {"valid": True, "verification": m.verification, "sign": list(m.sign)},
              f"valid morphism ({m.verification} check)")
    elif args.action == "sign":
        w = weyl_to_doc(m.s.rs, m.w)
        _emit(args, {"sign": list(m.sign), "rotation": w}, f"sign {tuple(m.sign)}\nrotation {_rotation_text(m)}")
    else:  # extend
        table = [(str(g), str(d)) for g, d in m.table()]
        payload = morphism_to_doc(m)
        payload["table"] = dict(table)
        if args.image is not None:
            pre = image_membership(m, parse_gallery(m.s2, args.image))
            payload["preimage"] = None if pre is None else str(pre)
        text = "\n".join(f"{g} -> {d}" for g, d in table)
        if args.image is not None:
            text += f"\npreimage of {args.image}: {payload['preimage']}"
        _emit(args, payload, text)


def cmd_topological(args):
    m = morphism_from_doc(load_doc(args.morphism))
    v = is_topological(m)
    payload = {"topological": v.answer, "reason": v.reason, "witnesses": [[str(a), str(b)] for a, b in v.witnesses]}
    text = v.answer + (f": {v.reason}" if v.reason else "")
    for a, b in v.witnesses:
        text += f"\n  {a} / {b}"
    _emit(args, payload, text)


def cmd_gkm(args):
    if args.action == "member":
        f = class_from_doc(load_doc(args.target))
        v = harterich_member(f, strict=args.strict)
        if not v.member:
            vi = v.violation
            raise VerificationFailed({"member": False, "alpha": list(vi.alpha), "gallery": vi.gallery,
                                      "power": vi.power, "remainder": format_poly(vi.remainder)})
        _emit(args, {"member": True}, "member")
    else:
        if args.degree is None:
            raise InputError("gkm basis needs --degree")
        s = _seq_from(args, args.target)
        basis = gkm_basis(s, args.degree)
        payload = {"seq": list(s.indices), "degree": args.degree, "dimension": len(basis),
                   "expected_dimension": expected_dimension(s, args.degree),
                   "basis": [class_to_doc(b) for b in basis]}
        lines = [f"dimension {len(basis)} (free-module count {payload['expected_dimension']})"]
        for k, b in enumerate(basis, start=1):
            lines.append(f"[{k}] " + ", ".join(f"{g}: {format_poly(v)}" for g, v in b.items()))
        _emit(args, payload, "\n".join(lines))


def cmd_restrict(args):
    m = morphism_from_doc(load_doc(args.morphism))
    g = class_from_doc(load_doc(args.cls), space=m.s2)
    out = restrict(m, g)
    member = harterich_member(out).member
    payload = class_to_doc(out)
    payload["member"] = member
    text = "\n".join(f"{k}: {format_poly(v)}" for k, v in out.items())
    _emit(args, payload, text)


def cmd_chevalley(args):
    if args.action == "verify":
        seed = args.seed if args.seed is not None else seed_from_env()
        rep = verify_relations(args.n, args.trials, seed)
        text = "\n".join(f"{k}: {v} trials" for k, v in rep.counts.items())
        text += f"\nseed {rep.seed}; " + ("all relations hold" if rep.ok else f"{len(rep.failures)} failures")
        if not rep.ok:
            raise VerificationFailed(rep.to_json())
        _emit(args, rep.to_json(), text)
        return
    if not (args.seq and args.gallery and args.coords and args.target):
        raise InputError("chevalley transition needs --seq, --gallery, --coords and --target")
    s = _seq_from(args, args.seq)
    g = parse_gallery(s, args.gallery)
    coords = [Fraction(c) for c in args.coords.split(",")] if args.coords.strip() else []
    pt = BSPoint(s, g, tuple(coords))
    tr = chart_coords(pt, parse_gallery(s, args.target))
    if tr is None:
        _emit(args, {"in_chart": False}, f"{pt} is not in the chart of {args.target}")
        return
    payload = {"in_chart": True, **tr.to_json()}
    text = "coords " + ",".join(str(c) for c in tr.coords)
    for i, d, b in tr.steps:
        text += f"\nb_{i} (d_{i} = {d}): " + "; ".join(" ".join(str(x) for x in r) for r in b.rows)
    _emit(args, payload, text)


def cmd_appendix(args):
    reports = appendix_examples()
    passed = sum(r.ok for r in reports)
    lines = []
    for r in reports:
        lines.append(f"Example {r.number}: {'PASS' if r.ok else 'FAIL'}")
        for c in r.checks:
            if not c.ok:
                lines.append(f"  {c.name}: expected {c.expected!r}, got {c.got!r}")
        if r.error:
            lines.append(f"  error: {r.error}")
    lines.append(f"{passed}/{len(reports)} PASS")
    payload = {"passed": passed, "total": len(reports), "examples": [r.to_json() for r in reports]}
    if passed != len(reports):
        if args.json:
            print(json.dumps(payload, indent=2))
        else:
            print("\n".join(lines))
        raise VerificationFailed(None)
    _emit(args, payload, "\n".join(lines))


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    # the global flags may be given before or after the subcommand; each parser
    # needs its own actions, since parents share them and defaults would leak
    def global_flags(parser, default_json, default_system):
        parser.add_argument("--json", action="store_true", default=default_json, help="machine-readable output")
        parser.add_argument("--system", default=default_system,
                            help='root system, e.g. "A4" or "B2xA1" (default: A_n, n = largest index)')
        return parser

    common = global_flags(argparse.ArgumentParser(add_help=False), argparse.SUPPRESS, argparse.SUPPRESS)
    ap = global_flags(argparse.ArgumentParser(prog="foldcat", description=__doc__.splitlines()[0]), False, None)
    ap.add_argument("--version", action="version", version=f"foldcat {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="positive roots of a root system")
    p.add_argument("family")
    p.add_argument("rank", type=int)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("galleries", parents=[common], help="list the galleries of a word")
    p.add_argument("seq", help='word such as "1,2,1"')
    p.set_defaults(func=cmd_galleries)

    p = sub.add_parser("beta", parents=[common], help="wall roots of a gallery")
    p.add_argument("seq")
    p.add_argument("gallery", help='gallery such as "(s1,e,s1)"')
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("moment-graph", parents=[common], help="fixed points joined by T-curves")
    p.add_argument("seq")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.add_argument("--out", help="write DOT to this path")
    p.set_defaults(func=cmd_moment_graph)

    p = sub.add_parser("morphism", parents=[common], help="check, sign, compose or extend morphisms")
    p.add_argument("action", choices=["check", "sign", "compose", "extend"])
    p.add_argument("docs", nargs="+", help="morphism JSON (file path or inline)")
    p.add_argument("--image", help="with extend: also report the preimage of this target gallery")
    p.set_defaults(func=cmd_morphism)

    p = sub.add_parser("topological", parents=[common], help="decide topologicality of a morphism")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_topological)

    p = sub.add_parser("gkm", parents=[common], help="membership test or degreewise basis")
    p.add_argument("action", choices=["member", "basis"])
    p.add_argument("target", help="class JSON for member, word for basis")
    p.add_argument("--degree", type=int)
    p.add_argument("--strict", action="store_true", help="require Z[1/2] coefficients")
    p.set_defaults(func=cmd_gkm)

    p = sub.add_parser("restrict", parents=[common], help="restrict a class along a morphism")
    p.add_argument("morphism")
    p.add_argument("cls", metavar="class")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("chevalley", parents=[common], help="matrix relations and chart transitions (type A)")
    p.add_argument("action", choices=["verify", "transition"])
    p.add_argument("--n", type=int, default=2, help="rank for verify")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--seq")
    p.add_argument("--gallery")
    p.add_argument("--coords", help="comma-separated rationals")
    p.add_argument("--target", help="target chart gallery")
    p.set_defaults(func=cmd_chevalley)

    p = sub.add_parser("appendix", parents=[common], help="recompute the worked examples")
    p.set_defaults(func=cmd_appendix)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        args.func(args)
    except VerificationFailed as e:
        if e.payload is not None:
            if args.json:
                print(json.dumps(e.payload, indent=2))
            else:
                print("verification failed: " + json.dumps(e.payload))
        return EXIT_VERIFY
    except (InputError, RootSystemError, PolyParseError, MorphismError, ValueError, IndexError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

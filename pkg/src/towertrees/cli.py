"""Batch command line over the library.

Every verb is a thin adapter: parse arguments, call the library, format
the result.  Exit codes: 0 success, 1 input or usage errors, 2 when
certification finds a nonzero obstruction (a result, not an error, so
pipelines can branch on it).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import lie
from .groups import group_structure, is_zero, presentation, reduce_to_simple
from .trees import (
    Bounds,
    BoundsError,
    DecoratedTree,
    ParseError,
    SignedTree,
    canonicalize,
    canonicalize_rooted,
    parse_signed,
    to_text,
)
from .towers import (
    MoveError,
    ObstructionNonzero,
    PlannerError,
    TowerError,
    bch_tower,
    certificate_from_json,
    certificate_to_json,
    certify_raise_order,
    glue,
    load_tower,
    model_to_json,
    tau,
    verify_certificate,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _read_tree_arg(args):
    text = args.tree if args.tree is not None else sys.stdin.read()
    return parse_signed(text.strip())


def _bounds(args):
    return Bounds(args.max_order, args.max_labels)


def cmd_canon(args):
    sign, tree = _read_tree_arg(args)
    if isinstance(tree, DecoratedTree):
        ct, s = canonicalize(SignedTree(sign, tree))
        text, torsion = ct.text(), ct.two_torsion
    else:
        body, s, torsion = canonicalize_rooted(sign, tree)
        text = to_text(body)
    if args.json:
        _emit(args, json.dumps(
            {"canonical": text, "sign": s, "two_torsion": torsion}, indent=2))
    else:
        _emit(args, ("+" if s > 0 else "-") + text + (" (2-torsion)" if torsion else ""))
    return 0


def cmd_reduce(args):
    sign, tree = _read_tree_arg(args)
    if not isinstance(tree, DecoratedTree):
        raise TowerError("reduce expects an unrooted tree, e.g. inner((1,2),(3,4),)")
    ct, s = canonicalize(SignedTree(sign, tree))
    ts = reduce_to_simple(ct).scale(s)
    if args.json:
        _emit(args, json.dumps(
            [{"tree": t.text(), "coeff": c} for t, c in ts.items()], indent=2))
    else:
        _emit(args, ts.text())
    return 0


def cmd_groups(args):
    gs = group_structure(args.order, args.labels, args.nonrepeating, _bounds(args))
    if args.json:
        mat = presentation(args.order, args.labels, args.nonrepeating, _bounds(args))
        _emit(args, json.dumps({
            "order": args.order,
            "labels": args.labels,
            "free_rank": gs.free_rank,
            "torsion": list(gs.torsion),
            "generator_count": mat.ncols,
            "relator_count": len(mat.rows),
        }, indent=2))
    else:
        _emit(args, gs.text())
    return 0


def cmd_tau(args):
    with open(args.file, encoding="utf-8") as fh:
        model = load_tower(fh.read())
    ts = tau(model)
    zero = None
    if model.trivially_decorated():
        try:
            zero = is_zero(ts, model.order, model.m, _bounds(args))
        except BoundsError:
            zero = None
    if args.json:
        _emit(args, json.dumps({
            "m": model.m,
            "order": model.order,
            "tau": [{"tree": t.text(), "coeff": c} for t, c in ts.items()],
            "is_zero": zero,
        }, indent=2))
    else:
        line = f"tau = {ts.text()}"
        if zero is not None:
            line += f"\nzero in the order-{model.order} group: {str(zero).lower()}"
        _emit(args, line)
    return 0


def cmd_certify(args):
    with open(args.file, encoding="utf-8") as fh:
        model = load_tower(fh.read())
    try:
        cert = certify_raise_order(model)
    except ObstructionNonzero as exc:
        print(f"obstruction nonzero: {exc.normal_form.text()}")
        return 2
    _emit(args, certificate_to_json(cert))
    return 0


def cmd_verify(args):
    with open(args.model, encoding="utf-8") as fh:
        model = load_tower(fh.read())
    with open(args.certificate, encoding="utf-8") as fh:
        cert = certificate_from_json(fh.read())
    res = verify_certificate(model, cert)
    if args.json:
        _emit(args, json.dumps({"ok": res.ok, "reason": res.reason}, indent=2))
    else:
        _emit(args, "OK" if res.ok else f"FAIL: {res.reason}")
    return 0 if res.ok else 1


def cmd_glue(args):
    with open(args.a, encoding="utf-8") as fh:
        a = load_tower(fh.read())
    with open(args.b, encoding="utf-8") as fh:
        b = load_tower(fh.read())
    _emit(args, model_to_json(glue(a, b)))
    return 0


def cmd_bch(args):
    sigma = [parse_signed(t) for t in args.trees]
    for _, t in sigma:
        if not isinstance(t, DecoratedTree):
            raise TowerError(f"{to_text(t)!r} is not an unrooted tree")
    model = bch_tower([(s, t) for s, t in sigma], args.order, args.labels)
    _emit(args, model_to_json(model))
    return 0


def cmd_rank(args):
    rk = lie.rational_rank_bound(args.order, args.labels, _bounds(args))
    if args.json:
        _emit(args, json.dumps({"order": args.order, "labels": args.labels, "rank": rk}))
    else:
        _emit(args, str(rk))
    return 0


def build_parser():
    parser = _Parser(prog="towertrees",
                     description="exact computations in graded tree groups and "
                                 "split Whitney tower models")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, out=True):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if out:
            p.add_argument("--out", metavar="FILE", help="write output to FILE")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for randomized suites (reserved)")
        p.add_argument("--max-order", type=int, default=4, help="enumeration bound")
        p.add_argument("--max-labels", type=int, default=6, help="enumeration bound")

    p = sub.add_parser("canon", help="canonical form of a signed tree")
    p.add_argument("tree", nargs="?", help="tree in the grammar (stdin if omitted)")
    common(p)
    p.set_defaults(fn=cmd_canon)

    p = sub.add_parser("reduce", help="rewrite a tree over simple trees")
    p.add_argument("tree", nargs="?")
    common(p)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("groups", help="structure of the order-n tree group")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--labels", type=int, required=True)
    p.add_argument("--nonrepeating", action="store_true",
                   help="restrict to pairwise distinct labels")
    common(p)
    p.set_defaults(fn=cmd_groups)

    p = sub.add_parser("tau", help="intersection sum of a tower file")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=cmd_tau)

    p = sub.add_parser("certify", help="plan an order-raising certificate")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("verify", help="replay a certificate against a tower")
    p.add_argument("model")
    p.add_argument("certificate")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("glue", help="glue two towers, reversing the second")
    p.add_argument("a")
    p.add_argument("b")
    common(p)
    p.set_defaults(fn=cmd_glue)

    p = sub.add_parser("bch", help="tower realizing the given signed trees")
    p.add_argument("trees", nargs="+", help="signed trees in the grammar")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--labels", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_bch)

    p = sub.add_parser("rank", help="rank of the Lie images of all order-n trees")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--labels", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_rank)
    return parser


_TREE_ARG = re.compile(r"^-\s*(\(|\d|inner)")


def _stash_tree_args(argv):
    """Hide negative-signed tree literals from option parsing."""
    stash = {}
    out = []
    for a in argv:
        if _TREE_ARG.match(a):
            key = f"@tree{len(stash)}"
            stash[key] = a
            out.append(key)
        else:
            out.append(a)
    return out, stash


def _unstash(value, stash):
    if isinstance(value, str):
        return stash.get(value, value)
    if isinstance(value, list):
        return [_unstash(v, stash) for v in value]
    return value


def run(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    argv, stash = _stash_tree_args(argv)
    try:
        args = parser.parse_args(argv)
        for name, value in vars(args).items():
            setattr(args, name, _unstash(value, stash))
        return args.fn(args)
    except SystemExit as exc:
        return exc.code or 0
    except (ParseError, BoundsError, TowerError, MoveError, PlannerError,
            ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()

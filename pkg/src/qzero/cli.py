"""Command-line front end: `qzero <verb> ...` with JSON report output.

Exit codes: 0 all checks pass, 1 at least one failed check, 2 invalid
parameters, 3 pole obstruction during a module build.
"""

import argparse
import json
import os
import sys

from . import algebra, pcoeff, qops, tensors
from .field import FieldContext
from .fock import PoleObstruction, build_module, verify_module
from .parser import ParseError, parse_expr
from .report import Report


class ParamError(ValueError):
    pass


def _validate(n, h, allow_n1=False):
    low = 1 if allow_n1 else 2
    if n < low:
        raise ParamError(f"n must be >= {low}")
    if h < n + 1:
        raise ParamError("h must exceed n")


def _common(parser, max_len=False):
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--h", type=int, required=True)
    parser.add_argument("--out")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-depth", type=int, default=None)
    if max_len:
        parser.add_argument("--max-len", type=int, default=4)


def _emit(report, args):
    text = (report.to_json() if args.format == "json"
            else "\n".join(report.summary_lines()))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.ok() else 1


def _system(args):
    kwargs = {}
    if args.max_depth is not None:
        kwargs["max_depth"] = args.max_depth
    return qops.get_system(args.n, args.h, **kwargs)


def _stamp(report, args):
    report.params["seed"] = args.seed
    report.params["threads"] = qops._threads()
    return report


def cmd_eval(args):
    _validate(args.n, args.h, allow_n1=True)
    elem = parse_expr(args.expr, n=args.n, h=args.h)
    result = elem.normal_form() if args.normal_form else elem
    if args.format == "json":
        rep = Report("eval", {"n": args.n, "h": args.h, "expr": args.expr})
        _stamp(rep, args)
        rep.info("result", detail={"normal_form": args.normal_form,
                                   "value": str(result)})
        return _emit(rep, args)
    text = str(result)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_fock_build(args):
    _validate(args.n, args.h)
    kwargs = {}
    if args.max_depth is not None:
        kwargs["max_depth"] = args.max_depth
    mod = build_module(args.n, args.h, chirality=args.chirality, **kwargs)
    payload = mod.to_json()
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if mod.complete else 1


def cmd_qcheck(args):
    _validate(args.n, args.h)
    suite = args.suite
    if suite == "n2-suite" and args.n != 2:
        raise ParamError("n2-suite requires --n 2")
    if suite in ("nilpotency", "lemma1", "lemma2", "n2-suite"):
        qs = _system(args)
        if suite == "nilpotency":
            rep = qops.check_nilpotency(args.n, args.h, qs=qs)
        elif suite == "lemma1":
            rep = qops.check_lemma1(args.n, args.h, qs=qs)
        elif suite == "lemma2":
            rep = qops.check_lemma2(args.n, args.h, qs=qs)
        else:
            rep = qops.n2_suite(args.h, qs=qs)
    elif suite == "relations":
        qs = _system(args)
        rep = verify_module(qs.left)
    else:  # rmatrix
        ctx = FieldContext(args.n, args.h)
        rep = Report("qcheck-rmatrix", {"n": args.n, "h": args.h})
        rep.extend(tensors.verify_rmatrix_structure(ctx).checks)
        rep.extend(algebra.check_rmatrix_exchange(ctx).checks)
    return _emit(_stamp(rep, args), args)


def cmd_conjecture(args):
    _validate(args.n, args.h)
    rep = qops.conjecture_scan(args.n, args.h, args.max_len, qs=_system(args))
    return _emit(_stamp(rep, args), args)


def cmd_diag(args):
    _validate(args.n, args.h)
    _, rep = qops.diag_sector(args.n, args.h, args.max_len, qs=_system(args))
    return _emit(_stamp(rep, args), args)


def cmd_plactic(args):
    _validate(args.n, args.h)
    rep = qops.plactic_compare(args.n, args.h, max_len=args.max_len,
                               qs=_system(args))
    return _emit(_stamp(rep, args), args)


def cmd_identities(args):
    _validate(args.n, args.h)
    ctx = FieldContext(args.n, args.h)
    rep = Report("identities", {"n": args.n, "h": args.h})
    rep.extend(pcoeff.verify_q_identities(ctx))
    rep.extend(algebra.check_genex(ctx, max_m=4).checks)
    rep.extend(algebra.check_confluence_samples(ctx, seed=args.seed).checks)
    return _emit(_stamp(rep, args), args)


def build_argparser():
    ap = argparse.ArgumentParser(
        prog="qzero",
        description="Exact checks for the zero-mode algebras at roots of unity",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="parse and print an algebra expression")
    p.add_argument("expr")
    p.add_argument("--normal-form", action="store_true")
    _common(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("fock", help="vacuum-module operations")
    fsub = p.add_subparsers(dest="fock_verb", required=True)
    fp = fsub.add_parser("build", help="build a module and dump it as JSON")
    fp.add_argument("--chirality", choices=("left", "right"), default="left")
    _common(fp)
    fp.set_defaults(fn=cmd_fock_build)

    p = sub.add_parser("qcheck", help="run a verification suite")
    p.add_argument("suite", choices=("nilpotency", "lemma1", "lemma2",
                                     "n2-suite", "relations", "rmatrix"))
    _common(p)
    p.set_defaults(fn=cmd_qcheck)

    p = sub.add_parser("conjecture", help="off-diagonal monomial vacuum scan")
    _common(p, max_len=True)
    p.set_defaults(fn=cmd_conjecture)

    p = sub.add_parser("diag", help="diagonal sector and its annihilated part")
    _common(p, max_len=True)
    p.set_defaults(fn=cmd_diag)

    p = sub.add_parser("plactic", help="hop-algebra relations on the diagonal sector")
    _common(p)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(fn=cmd_plactic)

    p = sub.add_parser("identities", help="symbolic identity suite")
    _common(p)
    p.set_defaults(fn=cmd_identities)
    return ap


def main(argv=None):
    ap = build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParamError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PoleObstruction as exc:
        print(f"pole obstruction: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Exit status: 0 success, 1 parse error, 2 sort error, 3 validation or
budget error (and any other library error).
"""
import argparse
import json
import os
import sys
from fractions import Fraction

from . import congruence as cg
from . import words
from .errors import LiePDError, ParseError, SortError, ValidationError
from .projder import FreePD, PDHom, functor_F, functor_F_hom, functor_Finv_hom
from .freelie import LieElement
from .representation import FinRep, FreeRep, RepHom, coproduct, hom_check, rank_invariants
from .scalars import field_from_name, format_scalar
from .terms import (evaluate, format_term, parse_rep_spec, parse_term, pd_context, rep_context,
                    sort_of)


def default_degree():
    value = os.environ.get("LIEPD_DEGREE")
    return int(value) if value else 3


# -- file formats ------------------------------------------------------------

def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.lineno, exc.colno) from None
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _target(spec, field):
    if isinstance(spec, dict):
        return FinRep.from_dict(spec)
    return parse_rep_spec(spec, field)


def _value(target, image, sort):
    """An image given in a hom file: a term for free targets, a coordinate
    list for finite ones."""
    if isinstance(target, FreeRep):
        node = parse_term(image, "rep")
        found = sort_of(node, "rep")
        if found not in (sort, "any"):
            raise SortError(f"expected an {sort}-sorted image", format_term(node))
        if found == "any":
            return target.lzero() if sort == "L" else target.vzero()
        return evaluate(node, target, "rep")
    coords = [target.field(Fraction(c) if isinstance(c, str) else c) for c in image]
    return target.lvec(coords) if sort == "L" else target.vvec(coords)


def load_hom(path):
    """RepHom from a file with fields source, target, field, phi, psi."""
    data = _read_json(path)
    try:
        field = field_from_name(str(data.get("field", "Q")))
        source = parse_rep_spec(data["source"], field)
        target = _target(data["target"], field)
        if target.field != field:
            source = parse_rep_spec(data["source"], target.field)
        phi = {int(k.lstrip("x")): _value(target, v, "L") for k, v in data.get("phi", {}).items()}
        psi = {int(k.lstrip("y")): _value(target, v, "V") for k, v in data.get("psi", {}).items()}
    except KeyError as exc:
        raise ValidationError(f"{path}: missing field {exc}") from None
    return RepHom(source, target, phi, psi)


def load_pd_hom(path):
    """PDHom from a file with fields source (rank), target (rank), images."""
    data = _read_json(path)
    try:
        field = field_from_name(str(data.get("field", "Q")))
        src = FreePD.on(int(data["source"]), field)
        tgt = FreePD.on(int(data["target"]), field)
        images = [evaluate(parse_term(t, "pd"), tgt, "pd") for t in data["images"]]
    except KeyError as exc:
        raise ValidationError(f"{path}: missing field {exc}") from None
    return PDHom.from_generators(src, tgt, images)


# -- commands -------------------------------------------------------------------

def cmd_nf(args, out):
    mode = "pd" if args.pd else "rep"
    node = parse_term(args.term, mode)
    ctx = pd_context(node) if mode == "pd" else rep_context(node)
    print(evaluate(node, ctx, mode), file=out)


def cmd_check_hom(args, out):
    h = load_hom(args.file)
    print(hom_check(h, args.degree), file=out)


def cmd_f_apply(args, out):
    if args.rep:
        W = parse_rep_spec(args.rep)
        if W.balanced:
            F = functor_F(W, free=True)
            gens = ", ".join(f"m{k} = {m}" for k, m in enumerate(F.generators(), 1))
            print(f"F({W!r}) free on {gens}" if gens else f"F({W!r}) = 0", file=out)
        else:
            print(f"F({W!r}) (no free generator set: |X| != |Y|)", file=out)
        return
    h = load_hom(args.hom)
    f = functor_F_hom(h)
    W = h.source
    for i in W.X:
        print(f"x{i} -> {f(f.source.from_L(W.x(i)))}", file=out)
    for j in W.Y:
        print(f"y{j} -> {f(f.source.from_V(W.y(j)))}", file=out)
    if isinstance(f.source, FreePD):
        for k, m in enumerate(f.source.generators(), 1):
            print(f"m{k} -> {f(m)}", file=out)


def cmd_finv_apply(args, out):
    if args.pd is not None:
        print(repr(FreePD.on(args.pd).base), file=out)
        return
    h = functor_Finv_hom(load_pd_hom(args.hom))
    for i, v in sorted(h.phi.items()):
        print(f"x{i} -> {v}", file=out)
    for j, v in sorted(h.psi.items()):
        print(f"y{j} -> {v}", file=out)


def cmd_rank(args, out):
    W = parse_rep_spec(args.rep)
    rx, ry = rank_invariants(W, args.degree)
    print(f"{rx} {ry}", file=out)


def cmd_word_classify(args, out):
    R = range(-args.range, args.range + 1)
    rows, survivors = words.classify(R, args.degree)
    print("candidate\tverdict", file=out)
    for row in rows:
        print(row, file=out)
    print(f"survivors: {len(survivors)}", file=out)
    for W, (sc, pf, bf, qf), inner in survivors:
        print(f"alpha={format_scalar(bf.alpha)}\tplus=m1+m2\tproj=p\tscalar={sc[0]}/{sc[1]}"
              f"\tinner={'yes' if inner.passed else 'no'}", file=out)


def cmd_closure(args, out):
    field = field_from_name(args.field)
    H = FinRep.from_dict(_read_json(args.finrep))
    if H.field != field:
        raise ValidationError(f"representation is over {H.field.name}, not {field.name}")
    W = parse_rep_spec(args.rep, field)
    gensL, gensV = [], []
    for text in args.gens or []:
        node = parse_term(text, "rep")
        value = evaluate(node, W, "rep")
        (gensL if isinstance(value, LieElement) else gensV).append(value)
    T = cg.CongruencePair(W, gensL, gensV, args.degree)
    report = cg.closure_report(T, H, args.budget)
    for line in report.lines():
        print(line, file=out)
    if args.beta:
        h1, h2 = (load_hom(p) for p in args.beta)
        print(f"beta: {'yes' if cg.beta_related(h1, h2, report.double) else 'no'}", file=out)


def cmd_coproduct(args, out):
    W1, W2 = (parse_rep_spec(s) for s in args.rep)
    cop = coproduct(W1, W2)
    print(repr(cop.obj), file=out)
    for name, inj in (("inj1", cop.inj1), ("inj2", cop.inj2)):
        parts = [f"x{i}->{v}" for i, v in sorted(inj.phi.items())]
        parts += [f"y{j}->{v}" for j, v in sorted(inj.psi.items())]
        print(f"{name}: " + ", ".join(parts), file=out)


def build_parser():
    deg = default_degree()
    ap = argparse.ArgumentParser(prog="liepd", description="Exact computations with free 2-sorted "
                                 "representations and Lie algebras with projection-derivation.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form of a term")
    p.add_argument("term")
    p.add_argument("--pd", action="store_true", help="read m/p()/r() terms in F(m1..mn)")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("check-hom", help="check a hom file up to a degree")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=deg)
    p.set_defaults(func=cmd_check_hom)

    p = sub.add_parser("f-apply", help="apply F to a free representation or a hom file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--rep")
    g.add_argument("--hom")
    p.set_defaults(func=cmd_f_apply)

    p = sub.add_parser("finv-apply", help="apply F^-1 to a free PD algebra or a PD hom file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pd", type=int, metavar="N")
    g.add_argument("--hom")
    p.set_defaults(func=cmd_finv_apply)

    p = sub.add_parser("rank", help="IBN invariants dim L/[L,L] and dim V/<X>V")
    p.add_argument("--rep", required=True)
    p.add_argument("--degree", type=int, default=deg)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("word-classify", help="classify candidate word systems")
    p.add_argument("--range", type=int, default=2)
    p.add_argument("--degree", type=int, default=deg)
    p.set_defaults(func=cmd_word_classify)

    p = sub.add_parser("closure", help="T', T'' and beta over a finite model")
    p.add_argument("--field", required=True)
    p.add_argument("--finrep", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--gens", action="append")
    p.add_argument("--degree", type=int, default=deg)
    p.add_argument("--budget", type=int, default=cg.DEFAULT_BUDGET)
    p.add_argument("--beta", nargs=2, metavar=("HOM1", "HOM2"))
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("coproduct", help="coproduct of two free representations")
    p.add_argument("--rep", action="append", required=True)
    p.set_defaults(func=cmd_coproduct)
    return ap


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "coproduct" and len(args.rep) != 2:
        print("error: coproduct needs exactly two --rep options", file=err)
        return 3
    try:
        args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 1
    except SortError as exc:
        sub = f" in {exc.subterm}" if exc.subterm is not None else ""
        print(f"sort error: {exc}{sub}", file=err)
        return 2
    except (LiePDError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

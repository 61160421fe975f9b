"""Command-line front end.

Subcommands: normal-form, pair, gram, act, verma, projector, verify.
Exit codes: 0 success, 1 failed check, 2 usage/parse error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .algebra import (
    double,
    heis_lower,
    heis_upper,
    heisenberg,
    letter,
    lower,
    upper,
)
from .doubles import (
    closed_form_action_sl2,
    double_act_on_heisenberg,
    from_split_heis,
    schrodinger_act,
    to_split_double,
    to_split_heis,
)
from .errors import (
    DepthCapExceeded,
    HeightCapExceeded,
    InvalidRange,
    ParseError,
    QdoubleError,
    StepBudgetExceeded,
)
from .omodules import maximal_vectors, projector_sl2, verma
from .pairing import pairing_engine
from .rootdata import datum_from_config, load_datum, parse_weight, root_datum
from .scalars import RatFunc, format_scalar
from .textio import _word_str, format_element, parse_element

SCHEMA = 1

_AMBIENTS = {
    frozenset(): "double",
    frozenset("E"): "upper", frozenset(["E", "K'"]): "upper",
    frozenset(["K'"]): "upper",
    frozenset("F"): "lower", frozenset(["F", "K"]): "lower",
    frozenset(["K"]): "lower",
    frozenset(["e"]): "heis_upper", frozenset(["e", "w'"]): "heis_upper",
    frozenset(["w'"]): "heis_upper",
    frozenset(["f"]): "heis_lower", frozenset(["f", "w"]): "heis_lower",
    frozenset(["w"]): "heis_lower",
}


def _load_datum(args):
    if getattr(args, "config", None):
        return load_datum(args.config)
    return root_datum(args.datum)


def _infer_ambient(text, datum, override):
    from .textio import _GEN, _tokenize, _gen_letter
    fams = set()
    for tok in _tokenize(text):
        if _GEN.match(tok):
            fams.add(_gen_letter(tok, datum.rank)[0])
    if override and override != "auto":
        name = override
    else:
        name = _AMBIENTS.get(frozenset(fams))
        if name is None:
            if fams <= {"E", "F", "K", "K'"}:
                name = "double"
            elif fams <= {"e", "f", "w", "w'"}:
                name = "heisenberg"
            else:
                raise ParseError(
                    f"cannot infer an ambient for generators {sorted(fams)}")
    factory = {"upper": upper, "lower": lower, "double": double,
               "heis_upper": heis_upper, "heis_lower": heis_lower,
               "heisenberg": heisenberg}[name]
    return factory(datum)


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_normal_form(args):
    datum = _load_datum(args)
    ambient = _infer_ambient(args.element, datum, args.ambient)
    x = parse_element(args.element, ambient)
    nf = x.nf(budget=args.budget)
    out = format_element(nf)
    _emit(args, {"schema": SCHEMA, "ambient": ambient.name, "input": args.element,
                 "normal_form": out}, [out])
    return 0


def cmd_pair(args):
    datum = _load_datum(args)
    left = parse_element(args.left, _infer_ambient(args.left, datum, None))
    right = parse_element(args.right, _infer_ambient(args.right, datum, None))
    eng = pairing_engine(datum)
    val = eng.pair(left, right)
    out = format_scalar(val)
    _emit(args, {"schema": SCHEMA, "left": args.left, "right": args.right,
                 "value": out}, [out])
    return 0


def cmd_gram(args):
    datum = _load_datum(args)
    beta = parse_weight(args.degree, datum)
    eng = pairing_engine(datum)
    g = eng.gram(beta, side=args.side, height_cap=args.height_cap)
    rad = eng.radical_basis(g)
    payload = {
        "schema": SCHEMA,
        "degree": args.degree,
        "side": args.side,
        "rows": [_word_str(w) for w in g.row_words],
        "cols": [_word_str(w) for w in g.col_words],
        "matrix": [[format_scalar(x) for x in row] for row in g.matrix],
        "rank": g.rank(),
        "radical": [format_element(x) for x in rad],
    }
    lines = [f"degree {args.degree} ({args.side}-pairing): "
             f"{len(g.row_words)} x {len(g.col_words)}, rank {payload['rank']}"]
    for rw, row in zip(payload["rows"], payload["matrix"]):
        lines.append(f"  {rw}: [" + ", ".join(row) + "]")
    lines.append(f"radical dimension {len(rad)}")
    for x in payload["radical"]:
        lines.append(f"  {x}")
    _emit(args, payload, lines)
    return 0


def cmd_act(args):
    datum = _load_datum(args)
    actor = parse_element(args.actor, double(datum))
    target_amb = _infer_ambient(args.target, datum, None)
    target = parse_element(args.target, target_amb)
    if args.rep == "schrodinger":
        side = "on_A" if target_amb.name == "heis_upper" else "on_B"
        result = schrodinger_act(to_split_double(actor), target, side)
    else:
        result = from_split_heis(
            double_act_on_heisenberg(actor, to_split_heis(
                parse_element(args.target, heisenberg(datum)))))
    out = format_element(result)
    payload = {"schema": SCHEMA, "actor": args.actor, "target": args.target,
               "rep": args.rep, "result": out}
    lines = [out]
    code = 0
    if args.oracle:
        verdict = _oracle_verdict(args, datum, result)
        payload["oracle"] = verdict
        lines.append(verdict)
        code = 0 if verdict == "MATCH" else 1
    _emit(args, payload, lines)
    return code


def _oracle_verdict(args, datum, result):
    from .textio import _GEN, _tokenize
    if datum.rank != 1:
        raise ParseError("--oracle needs the rank-1 datum")

    def shape(text):
        toks = _tokenize(text)
        fam = None
        power = 0
        i = 0
        while i < len(toks):
            tok = toks[i]
            if not _GEN.match(tok):
                raise ParseError(f"--oracle needs a pure power, got {tok!r}")
            this = tok[0]
            p = 1
            if i + 1 < len(toks) and toks[i + 1] == "^":
                p = int(toks[i + 2])
                i += 2
            if fam is None:
                fam = this
            elif fam != this:
                raise ParseError("--oracle needs a single-generator power")
            power += p
            i += 1
        return fam, power

    afam, m = shape(args.actor)
    tfam, n = shape(args.target)
    which = {"E": "E_on_", "F": "F_on_"}[afam] + {"e": "e", "f": "f"}[tfam]
    coeff, power = closed_form_action_sl2(which, m, n, datum)
    pres = heis_upper(datum) if tfam == "e" else heis_lower(datum)
    base = pres.e(0) if tfam == "e" else pres.f(0)
    expected = (base ** power).scale(coeff)
    got = result if result.ambient is pres else \
        parse_element(format_element(result), pres)
    return "MATCH" if got == expected else "MISMATCH"


def cmd_verma(args):
    datum = _load_datum(args)
    lam = parse_weight(args.lam, datum)
    module = verma(datum, lam, args.depth)
    payload = {"schema": SCHEMA, "lambda": args.lam, "depth": args.depth,
               "dim": module.dim}
    lines = [f"H(lambda) truncated at depth {args.depth}: dimension {module.dim}"]
    if args.report in ("weights", "all"):
        spaces = []
        for wt, idxs in sorted(module.weight_spaces().items(),
                               key=lambda kv: kv[0].coords, reverse=True):
            from .rootdata import format_weight
            spaces.append({"weight": format_weight(wt), "dim": len(idxs)})
        payload["weights"] = spaces
        lines += [f"  {s['weight']}: dim {s['dim']}" for s in spaces]
    if args.report in ("maximal", "all"):
        from .rootdata import format_weight
        vecs = []
        for kv in maximal_vectors(module):
            vecs.append({
                "weight": format_weight(kv.weight()),
                "coords": {f"{module.basis[i][0]}:{_word_str(module.basis[i][1])}":
                           format_scalar(c) for i, c in sorted(kv.coords.items())},
            })
        payload["maximal"] = vecs
        lines.append(f"maximal vectors: {len(vecs)}")
        for v in vecs:
            lines.append(f"  weight {v['weight']}: {v['coords']}")
    if args.report in ("projector", "all"):
        if datum.rank != 1:
            raise InvalidRange("the projector report needs the rank-1 datum")
        mats = []
        idempotent = True
        for wt, idxs in sorted(module.weight_spaces().items(),
                               key=lambda kv: kv[0].coords, reverse=True):
            mat = []
            for i in idxs:
                img = projector_sl2(module.basis_vector(i), module)
                mat.append([format_scalar(img.coords.get(j, RatFunc.zero(datum.m)))
                            for j in idxs])
                again = projector_sl2(img, module)
                idempotent &= again == img
            from .rootdata import format_weight
            mats.append({"weight": format_weight(wt), "matrix": mat})
        payload["projector"] = {"idempotent": idempotent, "blocks": mats}
        lines.append(f"projector idempotent: {idempotent}")
    _emit(args, payload, lines)
    return 0


def cmd_projector(args):
    datum = _load_datum(args)
    if datum.rank != 1:
        raise InvalidRange("the closed-form projector needs the rank-1 datum")
    lam = parse_weight(args.lam, datum)
    module = verma(datum, lam, args.depth)
    v = module.generator()
    rows = []
    ok = projector_sl2(v, module) == v
    rows.append(("P(v) = v", ok))
    all_ok = ok
    for n in range(1, args.depth):
        vec = module.vector_from_fword((letter("f", 0),) * n)
        ok = projector_sl2(vec, module).is_zero
        rows.append((f"P(f^{n} v) = 0", ok))
        all_ok &= ok
    payload = {"schema": SCHEMA, "lambda": args.lam, "depth": args.depth,
               "checks": [{"name": n, "pass": bool(p)} for n, p in rows],
               "passed": bool(all_ok)}
    lines = [f"{'PASS' if p else 'FAIL'}  {n}" for n, p in rows]
    _emit(args, payload, lines)
    return 0 if all_ok else 1


def cmd_verify(args):
    try:
        rows = verify_mod.run_suite(args.suite)
    except KeyError:
        print(f"unknown suite {args.suite!r}", file=sys.stderr)
        return 2
    passed = all(r.passed for r in rows)
    payload = {"schema": SCHEMA, "suite": args.suite,
               "checks": [{"name": r.name, "detail": r.detail,
                           "pass": bool(r.passed)} for r in rows],
               "passed": bool(passed)}
    width = max(len(r.name) for r in rows)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}  {r.detail}"
             for r in rows]
    lines.append(f"{len(rows)} checks, "
                 f"{sum(1 for r in rows if not r.passed)} failed")
    _emit(args, payload, lines)
    return 0 if passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qdouble",
        description="Exact engine for two-parameter quantum groups, "
                    "Kashiwara algebras and quantized Weyl algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, depth=False, height=False, budget=False):
        p.add_argument("--datum", default="A1",
                       help="built-in type name (A1, A2, A3, B2, C2, B3)")
        p.add_argument("--config", help="JSON root-datum config file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if depth:
            p.add_argument("--depth", type=int, default=5)
        if height:
            p.add_argument("--height-cap", type=int, default=6,
                           dest="height_cap")
        if budget:
            p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("normal-form", help="rewrite an element to normal form")
    common(p, budget=True)
    p.add_argument("--ambient", default="auto",
                   choices=("auto", "upper", "lower", "double",
                            "heis_upper", "heis_lower", "heisenberg"))
    p.add_argument("element")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("pair", help="evaluate the skew Hopf pairing")
    common(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("gram", help="graded Gram matrix, rank and radical")
    common(p, height=True)
    p.add_argument("--degree", required=True, help='degree like "a1+a2"')
    p.add_argument("--side", choices=("U", "W"), default="U")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("act", help="act by a double element")
    common(p)
    p.add_argument("--actor", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--rep", choices=("schrodinger", "diagonal"),
                   default="schrodinger")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the closed rank-1 formulas")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("verma", help="build a truncated highest-weight module")
    common(p, depth=True)
    p.add_argument("--lambda", dest="lam", required=True,
                   help='weight like "1/2 a1"')
    p.add_argument("--report", choices=("weights", "maximal", "projector", "all"),
                   default="weights")
    p.set_defaults(func=cmd_verma)

    p = sub.add_parser("projector", help="extremal projector checks")
    common(p, depth=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_projector)

    p = sub.add_parser("verify", help="run a named identity suite")
    common(p)
    p.add_argument("--suite", default="all",
                   choices=("all", "hopf", "pairing", "actions",
                            "modules", "projector"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StepBudgetExceeded, HeightCapExceeded, DepthCapExceeded) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except (ParseError, InvalidRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QdoubleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Exit codes: 0 = success / property holds, 1 = property fails (witness on
stdout), 2 = input or usage error. Identical inputs produce byte-identical
output; '-' means stdin wherever a path is accepted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core, green, constructions, hull, order, terms, words


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read JSON from {path}: {exc}") from None


def _load_semigroup(path: str):
    obj = _load_json(path)
    S = core.from_dict(obj)
    ordered = None
    if "order" in obj and obj["order"] is not None:
        ordered = order.ordered(S, [tuple(p) for p in obj["order"]])
    return S, ordered


def _emit(args, obj, text_lines=None) -> None:
    if args.format == "json" or text_lines is None:
        print(json.dumps(obj))
    else:
        for line in text_lines:
            print(line)


def _flat_lines(obj, prefix=""):
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            lines.extend(_flat_lines(v, f"{prefix}{k}."))
    else:
        lines.append(f"{prefix[:-1]} = {json.dumps(obj)}")
    return lines


# --- analyze -------------------------------------------------------------------

def cmd_analyze(args) -> int:
    S, _ = _load_semigroup(args.path)
    gs = green.green_structure(S)
    ker = green.kernel(S)
    cs = green.is_completely_simple(S)
    report = {
        "input": args.path,
        "size": len(S),
        "green": {
            "r_classes": len(set(gs.r_class)),
            "l_classes": len(set(gs.l_class)),
            "j_classes": len(set(gs.j_class)),
            "h_classes": len(set(gs.h_class)),
            "idempotents": len(S.idempotents()),
            "kernel_size": len(ker),
        },
        "completely_simple": cs,
    }
    if cs:
        rm, _ = green.rees_coordinatize(S)
        report["rees"] = {
            "a": rm.a_size,
            "b": rm.b_size,
            "group_order": len(rm.group),
        }
        report["torsion"] = hull.torsion_checks(S)
    report["classification"] = hull.classify(S)
    report["reductivity"] = hull.reductivity(S)
    orderable, _ = order.is_orderable(S)
    report["orderable"] = orderable
    if args.pv:
        names = terms.pseudovariety_names() if args.pv == "all" else args.pv.split(",")
        memberships = {}
        for name in names:
            ok, _ = terms.pseudovariety_membership(S, name, jobs=args.jobs)
            memberships[name] = ok
        report["pseudovarieties"] = memberships
    _emit(args, report, _flat_lines(report))
    return 0


# --- construct -------------------------------------------------------------------

def _group_from_text(text: str) -> core.FiniteSemigroup:
    if text == "trivial":
        return core.trivial()
    if text.startswith("z:"):
        return core.cyclic_group(int(text[2:]))
    S, _ = _load_semigroup(text)
    return S


def cmd_construct(args) -> int:
    if args.what == "kp":
        S = constructions.k_p(int(args.args[0]))
    elif args.what == "rees":
        group = _group_from_text(args.group)
        if args.sandwich:
            sandwich = json.loads(args.sandwich)
        else:
            e = group.identity
            sandwich = [[e] * args.a for _ in range(args.b)]
        S = constructions.rees_matrix(args.a, group, args.b, sandwich)
    elif args.what == "synthesis":
        s_part, _ = _load_semigroup(args.args[0])
        t_part, _ = _load_semigroup(args.args[1])
        fobj = _load_json(args.args[2])
        s1 = core.adjoin_identity(s_part)
        t1 = core.adjoin_identity(t_part)
        fmap = [t1.index_of(fobj[s1.elements[i]]) for i in range(len(s1))]
        S = constructions.synthesis(s_part, t_part, fmap).carrier
    elif args.what == "semidirect":
        s_part, _ = _load_semigroup(args.args[0])
        t_part, _ = _load_semigroup(args.args[1])
        aobj = _load_json(args.args[2])
        action = {
            t: tuple(s_part.index_of(lbl) for lbl in aobj[t_part.elements[t]])
            for t in range(len(t_part))
        }
        S = constructions.semidirect_product(s_part, t_part, action)
    elif args.what == "product":
        a, _ = _load_semigroup(args.args[0])
        b, _ = _load_semigroup(args.args[1])
        S = core.direct_product(a, b)
    elif args.what == "adjoin":
        a, _ = _load_semigroup(args.args[0])
        S = core.adjoin_new_identity(a) if args.fresh else core.adjoin_identity(a)
    else:
        raise ValueError(f"unknown construct subcommand {args.what!r}")
    print(json.dumps(core.to_dict(S)))
    return 0


# --- check ---------------------------------------------------------------------

def cmd_check(args) -> int:
    if args.what == "id":
        S, _ = _load_semigroup(args.args[0])
        ok, witness = terms.satisfies_identity(
            S, terms.parse_term(args.args[1]), terms.parse_term(args.args[2]), jobs=args.jobs
        )
        if ok:
            _emit(args, {"holds": True}, ["holds"])
            return 0
        print(json.dumps({"holds": False, "witness": witness}))
        return 1
    if args.what == "ineq":
        S, ordered_s = _load_semigroup(args.args[0])
        if ordered_s is None:
            raise ValueError("inequality check needs an 'order' field in the semigroup JSON")
        ok, witness = terms.satisfies_inequality(
            ordered_s, terms.parse_term(args.args[1]), terms.parse_term(args.args[2])
        )
        if ok:
            _emit(args, {"holds": True}, ["holds"])
            return 0
        print(json.dumps({"holds": False, "witness": witness}))
        return 1
    if args.what == "pv":
        S, _ = _load_semigroup(args.args[0])
        ok, failing = terms.pseudovariety_membership(S, args.args[1], jobs=args.jobs)
        if ok:
            _emit(args, {"member": True}, ["member"])
            return 0
        print(json.dumps({"member": False, "failing": failing}))
        return 1
    if args.what == "crh":
        h = terms.GroupSpec.from_text(args.h)
        equal, cond = terms.equal_in_crh(args.args[0], args.args[1], h)
        if equal:
            _emit(args, {"equal": True}, ["equal"])
            return 0
        print(json.dumps({"equal": False, "failed_condition": cond}))
        return 1
    if args.what == "vdn":
        T, _ = _load_semigroup(args.in_path)
        res = terms.check_vdn(
            terms.parse_term(args.args[0]), terms.parse_term(args.args[1]), args.n, T,
            jobs=args.jobs,
        )
        obj = {"i_t_equal": res.i_t_equal, "encoded_identity_holds": res.encoded_identity_holds}
        if res.i_t_equal and res.encoded_identity_holds:
            _emit(args, obj, [f"i_t_equal={res.i_t_equal}", f"encoded_identity_holds={res.encoded_identity_holds}"])
            return 0
        print(json.dumps(obj))
        return 1
    raise ValueError(f"unknown check subcommand {args.what!r}")


# --- words ----------------------------------------------------------------------

def cmd_words(args) -> int:
    sub = args.what
    a = args.args
    if sub == "content":
        out = sorted(words.content(a[0]))
        _emit(args, {"content": out}, [",".join(out)])
    elif sub in ("lbf", "rbf"):
        f = (words.left_basic_factorization if sub == "lbf" else words.right_basic_factorization)(a[0])
        obj = {"prefix": str(f.prefix), "marker": f.marker, "remainder": str(f.remainder)}
        _emit(args, obj, [f"{f.prefix}|{f.marker}|{f.remainder}"])
    elif sub == "zero":
        prefix, marker = words.zero_funcs(a[0])
        _emit(args, {"zero": str(prefix), "marker": marker}, [f"{prefix}|{marker}"])
    elif sub == "one":
        suffix, marker = words.one_funcs(a[0])
        _emit(args, {"one": str(suffix), "marker": marker}, [f"{suffix}|{marker}"])
    elif sub == "chi":
        seq = words.characteristic_sequence(a[0])
        obj = [{"factor": str(w), "start": s, "end": e} for w, s, e in seq]
        _emit(args, obj, [" ".join(f"{w}[{s},{e}]" for w, s, e in seq)])
    elif sub == "debruijn":
        enc = words.debruijn_encode(a[1], int(a[0]))
        _emit(args, {"encoded": ".".join(enc.letters)}, [".".join(enc.letters)])
    elif sub == "stretch":
        avoid = args.avoid.split(",") if args.avoid else []
        r = words.stretch_word(a[0], avoid, a[1])
        _emit(args, {"r": str(r)}, [str(r)])
    elif sub == "connect":
        t = words.connect_word(a[0], a[1], a[2])
        _emit(args, {"t": str(t)}, [str(t)])
    elif sub == "subword":
        ok = words.is_subword(a[0], a[1])
        _emit(args, {"subword": ok}, [str(ok).lower()])
        return 0 if ok else 1
    else:
        raise ValueError(f"unknown words subcommand {sub!r}")
    return 0


# --- hull / classify ---------------------------------------------------------------

def cmd_hull(args) -> int:
    if args.rees:
        rm = green.rees_from_dict(_load_json(args.path))
        S = constructions.realize(rm)
        bits = hull.enumerate_hull_rees(rm)
    else:
        S, _ = _load_semigroup(args.path)
        bits = hull.enumerate_hull(S, bound=args.bound)
    inner = {hull.inner_bitranslation(S, s) for s in range(len(S))}
    red = hull.reductivity(S)
    obj = {"hull_size": len(bits), "inner_image_size": len(inner), "reductivity": red}
    _emit(
        args,
        obj,
        [
            f"|Omega(S)|={len(bits)}",
            f"inner image size={len(inner)}",
            f"reductivity={json.dumps(red)}",
        ],
    )
    return 0


def cmd_classify(args) -> int:
    S, _ = _load_semigroup(args.path)
    flags = hull.classify(S)
    obj = dict(flags)
    if green.is_completely_simple(S):
        obj["torsion"] = hull.torsion_checks(S)
    _emit(args, obj, _flat_lines(obj))
    return 0


# --- syntactic / orders --------------------------------------------------------------

def cmd_syntactic(args) -> int:
    d = order.dfa_from_dict(_load_json(args.path))
    if args.concat_letter:
        d = order.concat_letter(d, args.concat_letter)
    os_, gens = order.syntactic_semigroup(d)
    obj = core.to_dict(os_.semigroup, order=os_.leq)
    obj["generators"] = gens
    print(json.dumps(obj))
    return 0


def cmd_orderable(args) -> int:
    S, _ = _load_semigroup(args.path)
    ok, witness = order.is_orderable(S)
    if ok:
        print(json.dumps({"orderable": True, "order": sorted(list(p) for p in witness.leq)}))
        return 0
    print(json.dumps({"orderable": False}))
    return 1


def cmd_orders(args) -> int:
    S, _ = _load_semigroup(args.path)
    found = order.enumerate_stable_orders(S, limit=args.limit)
    print(json.dumps({"count": len(found), "orders": [sorted(list(p) for p in o.leq) for o in found]}))
    return 0


# --- wiring ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="eggbox", description=__doc__)
    top.add_argument("--format", choices=("text", "json"), default="text")
    top.add_argument("--jobs", type=int, default=1, help="workers for identity scans")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full structural report of a semigroup JSON")
    p.add_argument("path")
    p.add_argument("--pv", help="comma-separated registry names, or 'all'")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="emit semigroup JSON for a construction")
    p.add_argument("what", choices=("kp", "rees", "synthesis", "semidirect", "product", "adjoin"))
    p.add_argument("args", nargs="*")
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--group", default="trivial", help="trivial | z:<n> | path")
    p.add_argument("--sandwich", help="JSON matrix of group element indices")
    p.add_argument("--fresh", action="store_true", help="adjoin: always add a new identity")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="identity / inequality / membership / word problems")
    p.add_argument("what", choices=("id", "ineq", "pv", "crh", "vdn"))
    p.add_argument("args", nargs="*")
    p.add_argument("--h", default="trivial", help="crh: trivial | ab:<n> | groups")
    p.add_argument("--n", type=int, default=1, help="vdn: the D_n depth")
    p.add_argument("--in", dest="in_path", help="vdn: semigroup JSON to instantiate V")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("words", help="word combinatorics")
    p.add_argument(
        "what",
        choices=("content", "lbf", "rbf", "zero", "one", "chi", "debruijn", "stretch", "connect", "subword"),
    )
    p.add_argument("args", nargs="*")
    p.add_argument("--avoid", help="stretch: comma-separated words to avoid")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("hull", help="translational hull summary")
    p.add_argument("path")
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--rees", action="store_true", help="input is Rees JSON; use the parametrized path")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("classify", help="LM/RM/GGM/WGGM and torsion flags")
    p.add_argument("path")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("syntactic", help="syntactic ordered semigroup of a DFA JSON")
    p.add_argument("path")
    p.add_argument("--concat-letter", dest="concat_letter")
    p.set_defaults(func=cmd_syntactic)

    p = sub.add_parser("orderable", help="decide orderability")
    p.add_argument("path")
    p.set_defaults(func=cmd_orderable)

    p = sub.add_parser("orders", help="enumerate stable partial orders")
    p.add_argument("path")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_orders)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

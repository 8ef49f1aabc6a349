"""Command line interface.

Exit codes: 0 success, 1 failed verification, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import charlib, gkm, hess, rootsys, verify, weyl
from .rootsys import RootSystemError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _system(args) -> rootsys.RootSystem:
    if args.family is None or args.rank is None:
        raise InputError("--family and --rank are required")
    return rootsys.root_system(args.family, args.rank)


def _element(args, rs):
    """The Weyl group element named by --word or --perm."""
    given = [x for x in (args.word, getattr(args, "perm", None)) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --word / --perm")
    if args.word is not None:
        return weyl.from_word(rs, weyl.parse_word(args.word))
    p = _ints(args.perm)
    if rs.family != "A" or len(p) != rs.rank + 1:
        raise InputError(f"--perm needs a permutation of 1..{rs.rank + 1} in type A")
    return hess.permutation_to_element(p)


def _ideal(args, rs):
    """Root set from exactly one of --ideal / --word / --perm / --h."""
    given = [k for k in ("ideal", "word", "perm", "h") if getattr(args, k, None) is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --ideal / --word / --perm / --h")
    kind = given[0]
    if kind == "ideal":
        return hess.parse_ideal(rs, args.ideal), None
    if kind == "h":
        h = _ints(args.h)
        M = hess.ideal_from_hessenberg_function(h)
        if M.rs is not rs:
            raise InputError(f"--h of length {len(h)} does not match {rs.name}")
        return M, None
    w = _element(args, rs)
    return hess.m_w(rs, w), w


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


# --- subcommands ------------------------------------------------------------

def cmd_roots(args):
    rs = _system(args)
    print(json.dumps(rootsys.to_json(rs)))
    return EXIT_OK


def cmd_weyl_enum(args):
    rs = _system(args)
    if args.length is None:
        elems = weyl.all_elements(rs, args.cache_dir)
    else:
        elems = weyl.enumerate_by_length(rs, args.length, args.cache_dir)
    words = [list(w.reduced_word) for w in elems]
    _emit(args, [weyl.format_word(w) for w in words], words)
    return EXIT_OK


def cmd_bruhat(args):
    rs = _system(args)
    v = weyl.from_word(rs, weyl.parse_word(args.v))
    w = weyl.from_word(rs, weyl.parse_word(args.w))
    result = weyl.bruhat_leq(v, w)
    _emit(args, [str(result).lower()], result)
    return EXIT_OK


def cmd_mw(args):
    rs = _system(args)
    w = _element(args, rs)
    M = hess.m_w(rs, w)
    payload = {
        "word": list(w.reduced_word),
        "length": w.length,
        "ideal": [list(r) for r in M.roots],
        "valid": hess.is_valid_ideal(rs, M),
        "rationally_smooth": hess.rationally_smooth(rs, w),
    }
    _emit(args, [hess.format_ideal(M)], payload)
    return EXIT_OK


def cmd_hess_validate(args):
    rs = _system(args)
    M, _ = _ideal(args, rs)
    ok = hess.is_valid_ideal(rs, M)
    _emit(args, ["valid" if ok else "invalid"], {"ideal": [list(r) for r in M.roots], "valid": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_codominant(args):
    if (args.h is None) == (args.perm is None):
        raise InputError("give exactly one of --h / --perm")
    if args.h is not None:
        h = hess.check_hessenberg_function(_ints(args.h))
        p = hess.codominant_from_hessenberg_function(h)
    else:
        p = hess.check_permutation(_ints(args.perm))
        h = hess.hessenberg_function_from_codominant(p)
    word = hess.codominant_word(h)
    payload = {"h": list(h), "perm": list(p), "word": list(word)}
    _emit(args, [
        f"h = {','.join(map(str, h))}",
        f"w_h = {''.join(map(str, p))}",
        f"word = {weyl.format_word(word)}",
    ], payload)
    return EXIT_OK


def _coweight(args, g):
    if args.xi is None:
        return gkm.default_coweight(g)
    xi = _ints(args.xi)
    if len(xi) != g.rs.rank:
        raise InputError(f"--xi needs {g.rs.rank} coordinates")
    return xi


def cmd_gkm(args):
    rs = _system(args)
    M, w = _ideal(args, rs)
    g = gkm.gkm_lusztig(rs, w) if w is not None else gkm.gkm_hessenberg(rs, M)
    if args.dot:
        Path(args.dot).write_text(gkm.export_graph(g, "dot"))
    if args.json_out:
        Path(args.json_out).write_text(gkm.export_graph(g, "json"))
    degrees = sorted(set(g.degrees().values()))
    summary = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "degrees": degrees,
        "ideal": [list(r) for r in M.roots],
    }
    _emit(args, [
        f"{rs.name}: {len(g.vertices)} vertices, {len(g.edges)} edges, degrees {degrees}",
    ], summary)
    return EXIT_OK


def cmd_poincare(args):
    rs = _system(args)
    M, w = _ideal(args, rs)
    g = gkm.gkm_lusztig(rs, w) if w is not None else gkm.gkm_hessenberg(rs, M)
    xi = _coweight(args, g)
    try:
        P = gkm.poincare_polynomial(g, xi)
    except gkm.NonGenericCoweight as exc:
        raise InputError(str(exc)) from exc
    _emit(args, [str(P)], {"coefficients": P.coefficient_list(), "xi": list(xi)})
    return EXIT_OK


def _lambda(args, rs):
    lam = _ints(args.lam)
    if len(lam) != rs.rank:
        raise InputError(f"--lambda needs {rs.rank} coordinates")
    return lam


def cmd_dimv(args):
    rs = _system(args)
    w = _element(args, rs)
    c = charlib.v_w_character(rs, w, _lambda(args, rs))
    _emit(args, [str(c.dim)], c.dim)
    return EXIT_OK


def cmd_charv(args):
    rs = _system(args)
    w = _element(args, rs)
    c = charlib.v_w_character(rs, w, _lambda(args, rs))
    print(json.dumps(c.to_list()))
    if args.check_symmetry and not charlib.check_weight_symmetry(rs, c):
        print("weight multiplicities are not W-symmetric", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _report(args, rep):
    if args.json:
        print(json.dumps({
            "title": rep.title,
            "ok": rep.ok,
            "checks": [{"label": l, "ok": ok, "detail": d} for l, ok, d in rep.checks],
            "notes": rep.notes,
        }))
    else:
        print(rep)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(args):
    suite = args.suite
    if suite == "c3":
        rep = verify.verify_c3(args.cache_dir)
    elif suite == "codominant":
        rep = verify.verify_codominant(args.n)
    elif suite == "flag":
        systems = verify.FLAG_SYSTEMS if args.family is None else ((args.family, args.rank),)
        rep = verify.verify_flag(systems)
    elif suite == "gkm":
        rs = _system(args)
        rep = verify.verify_gkm(rs.family, rs.rank, args.coweights, args.seed)
    else:
        rs = _system(args)
        rep = verify.verify_characters(rs.family, rs.rank, args.bound, seed=args.seed)
    return _report(args, rep)


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", type=str.upper, choices=list(rootsys.FAMILIES))
    common.add_argument("--rank", type=int)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--cache-dir", default=None,
                        help=f"Weyl group cache directory (default ${weyl.CACHE_ENV})")
    common.add_argument("--xi", help="coweight, comma separated")

    parser = argparse.ArgumentParser(
        prog="hesslusztig",
        description="Combinatorics of regular semisimple Lusztig and Hessenberg varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="dump the positive roots as JSON")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("weyl", help="Weyl group enumeration")
    wsub = p.add_subparsers(dest="weyl_command", required=True)
    q = wsub.add_parser("enum", parents=[common], help="elements of a given length")
    q.add_argument("--length", type=int)
    q.set_defaults(func=cmd_weyl_enum)

    p = sub.add_parser("bruhat", parents=[common], help="test v <= w")
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_bruhat)

    p = sub.add_parser("mw", parents=[common], help="root set M_w")
    p.add_argument("--word")
    p.add_argument("--perm")
    p.set_defaults(func=cmd_mw)

    p = sub.add_parser("hess", help="Hessenberg spaces")
    hsub = p.add_subparsers(dest="hess_command", required=True)
    q = hsub.add_parser("validate", parents=[common], help="test B-stability of a root set")
    for flag in ("--ideal", "--word", "--perm", "--h"):
        q.add_argument(flag)
    q.set_defaults(func=cmd_hess_validate)

    p = sub.add_parser("codominant", parents=[common], help="h <-> codominant permutation")
    p.add_argument("--h")
    p.add_argument("--perm")
    p.set_defaults(func=cmd_codominant)

    for name, func, text in (("gkm", cmd_gkm, "GKM graph"),
                             ("poincare", cmd_poincare, "Poincare polynomial")):
        p = sub.add_parser(name, parents=[common], help=text)
        for flag in ("--ideal", "--word", "--perm", "--h"):
            p.add_argument(flag)
        if name == "gkm":
            p.add_argument("--dot", help="write DOT to this file")
            p.add_argument("--json-out", help="write graph JSON to this file")
        p.set_defaults(func=func)

    for name, func in (("dimv", cmd_dimv), ("charv", cmd_charv)):
        p = sub.add_parser(name, parents=[common], help="sections of L_lambda on Y_w(s)")
        p.add_argument("--word")
        p.add_argument("--perm")
        p.add_argument("--lambda", dest="lam", required=True)
        if name == "charv":
            p.add_argument("--check-symmetry", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="verification suites")
    vsub = p.add_subparsers(dest="suite", required=True)
    vsub.add_parser("c3", parents=[common]).set_defaults(func=cmd_verify)
    q = vsub.add_parser("codominant", parents=[common])
    q.add_argument("--n", type=int, default=5)
    q.set_defaults(func=cmd_verify)
    vsub.add_parser("flag", parents=[common]).set_defaults(func=cmd_verify)
    q = vsub.add_parser("gkm", parents=[common])
    q.add_argument("--coweights", type=int, default=20)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_verify)
    q = vsub.add_parser("characters", parents=[common])
    q.add_argument("--bound", type=int, default=2)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, RootSystemError, ValueError, IndexError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

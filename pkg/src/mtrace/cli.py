"""Command line interface: ``mtrace {validate,decompose,trace,check,eval,examples}``.

Reports are JSON on stdout (sorted keys, seed embedded).  Exit codes:
0 success, 1 invalid input, 2 failed check, 3 unmet precondition.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .corpus import Session, load_algebra
from .diagdsl import DSLSyntaxError, TypeCheckError, evaluate, parse, typecheck
from .errors import (AxiomViolation, HomNotLine, MtraceError, NotAbsIndec, NotInIdeal,
                     NotSplit, SchemaError, UnsupportedCharacteristic, ZeroMorphism)
from .repcat import abs_indec_report, decompose, hom_space, socle_head, tensor
from .suites import SUITES, run_suites
from .traces import RightTrace, mtrace

EXIT_OK, EXIT_INVALID, EXIT_CHECK, EXIT_PRECONDITION = 0, 1, 2, 3

EXAMPLES = [
    ("left snake", "(id(P0) (x) ev_l(P0)) . (coev_l(P0) (x) id(P0))", "id(P0)"),
    ("right snake", "(ev_r(P0) (x) id(P0)) . (id(P0) (x) coev_r(P0))", "id(P0)"),
    ("dual snake", "(ev_l(P0) (x) id(dual(P0))) . (id(dual(P0)) (x) coev_l(P0))", "id(dual(P0))"),
    ("pivotal map", "(ev_r(P0) (x) id(dual(dual(P0)))) . (id(P0) (x) coev_l(dual(P0)))", "phi(P0)"),
    ("dimension of P0", "ptr_r(P0, id(P0))", None),
    ("dimension of reg", "ptr_r(reg, id(reg))", None),
    ("gamma", "gamma(P0, P1)", None),
]


def _default_seed() -> int:
    try:
        return int(os.environ.get("MTRACE_SEED", "0"))
    except ValueError:
        return 0


def _emit(doc: dict, args) -> None:
    doc = dict(doc)
    doc["seed"] = args.seed
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    if getattr(args, "pretty", False):
        _table(doc)


def _table(doc: dict, prefix: str = "") -> None:
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, dict):
            _table(v, f"{prefix}{k}.")
        else:
            sys.stderr.write(f"{prefix + k:<48} {v}\n")


def _fail(args, code: int, exc: BaseException, **extra) -> int:
    doc = {"ok": False, "error": type(exc).__name__, "message": str(exc)}
    doc.update(extra)
    _emit(doc, args)
    return code


def _session(args) -> Session:
    H = load_algebra(args.algebra, args.builtin, args.sabotage)
    S = Session(H, args.seed)
    for spec in args.module_file or []:
        name, _, path = spec.partition("=")
        if not path:
            raise SchemaError(f"--module-file expects NAME=PATH, got {spec!r}")
        S.load_module_file(name, path)
    return S


def _encode(F, x):
    return F.encode(x)


def _matrix_doc(F, m) -> list:
    return [[_encode(F, m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


# -- commands --------------------------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        H = load_algebra(args.algebra, args.builtin, args.sabotage)
        H.validate()
    except AxiomViolation as exc:
        return _fail(args, EXIT_INVALID, exc, axiom=exc.axiom, witness=list(exc.witness), valid=False)
    except (MtraceError, OSError, ValueError) as exc:
        return _fail(args, EXIT_INVALID, exc, valid=False)
    _emit({"ok": True, "valid": True, "algebra": H.name, "dim": H.dim, "field": str(H.field),
           "basis": list(H.basis)}, args)
    return EXIT_OK


def cmd_decompose(args) -> int:
    S = _session(args)
    M = S.module(args.module)
    D = decompose(M, args.seed)
    summands = []
    for X in D.summands:
        summands.append({"dim": X.dim, "abs_indec": list(abs_indec_report(X).as_tuple())})
    soc, head = socle_head(M)
    doc = {"ok": D.check(), "module": args.module, "dim": M.dim, "summands": summands,
           "socle_dims": [X.dim for X in soc.summands], "head_dims": [X.dim for X in head.summands],
           "projectives": [{"name": f"P{t}", "dim": R.P.dim, "head_dim": R.head.dim,
                            "socle_dim": R.socle.dim} for t, R in enumerate(S.projectives())]}
    _emit(doc, args)
    return EXIT_OK if doc["ok"] else EXIT_CHECK


def _tuple(S: Session, args):
    if args.tuple:
        parts = [p.strip() for p in args.tuple.split(",")]
        if len(parts) != 3:
            raise SchemaError("--tuple expects P,ALPHA,BETA")
        return S.named_tuple(*parts)
    return S.auto_tuple()


def cmd_trace(args) -> int:
    S = _session(args)
    try:
        T = _tuple(S, args)
    except (HomNotLine, NotAbsIndec, ZeroMorphism) as exc:
        return _fail(args, EXIT_PRECONDITION, exc)
    V = S.module(args.module)
    F = S.algebra.field
    tr = RightTrace(T)
    w = tr.witness(V)
    if not w.member:
        exc = NotInIdeal(f"{args.module} is not in the ideal of the tuple")
        return _fail(args, EXIT_PRECONDITION, exc, module=args.module,
                     in_I_alpha=w.in_I_alpha, in_I_beta=w.in_I_beta)
    if args.expr:
        f = evaluate(args.expr, S.env())
        fs = [f]
    else:
        fs = list(hom_space(tensor(T.alpha, V), tensor(T.beta, V)))
    reports = [mtrace(T, V, f, samples=args.samples, seed=args.seed, tr=tr) for f in fs]
    checks: dict = {}
    for r in reports:
        for k, v in r.checks.items():
            checks[k] = checks.get(k, True) and v
    doc = {"tuple": T.names(), "module": args.module,
           "via_s": [_encode(F, r.via_s) for r in reports],
           "via_t": [_encode(F, r.via_t) for r in reports]}
    if args.expr:
        doc["value"] = _encode(F, reports[0].value)
        doc["via_s"], doc["via_t"] = doc["via_s"][0], doc["via_t"][0]
    else:
        doc["values"] = [_encode(F, r.value) for r in reports]
    if args.check:
        suites = SUITES if args.check == "all" else (args.check,)
        res = run_suites(S, suites, n=args.n, seed=args.seed)
        checks.update(res["checks"])
        if res["errors"]:
            doc["errors"] = res["errors"]
    doc["checks"] = checks
    doc["ok"] = all(checks.values())
    _emit(doc, args)
    return EXIT_OK if doc["ok"] else EXIT_CHECK


def cmd_check(args) -> int:
    S = _session(args)
    if args.tuple:
        try:
            _tuple(S, args)
        except (HomNotLine, NotAbsIndec, ZeroMorphism) as exc:
            return _fail(args, EXIT_PRECONDITION, exc)
    suites = SUITES if args.suite == "all" else (args.suite,)
    res = run_suites(S, suites, n=args.n, seed=args.seed)
    doc = {"algebra": S.algebra.name, "suite": args.suite, "n": args.n}
    doc.update(res)
    _emit(doc, args)
    return EXIT_OK if res["ok"] else EXIT_CHECK


def cmd_eval(args) -> int:
    S = _session(args)
    if args.auto_proj_cover or args.tuple:
        _tuple(S, args)
    env = S.env()
    t = typecheck(parse(args.expr), env)
    F = S.algebra.field
    if t.is_object:
        _emit({"ok": True, "kind": "object", "name": t.dom.name, "dim": t.dom.dim}, args)
        return EXIT_OK
    f = evaluate(args.expr, env)
    doc = {"ok": True, "kind": "morphism", "dom": f.dom.name, "cod": f.cod.name,
           "shape": [f.matrix.rows, f.matrix.cols], "matrix": _matrix_doc(F, f.matrix)}
    if args.equals:
        doc["equals"] = f == evaluate(args.equals, env)
        doc["ok"] = doc["equals"]
    _emit(doc, args)
    return EXIT_OK if doc["ok"] else EXIT_CHECK


def cmd_examples(args) -> int:
    S = _session(args)
    env = S.env()
    F = S.algebra.field
    rows = []
    for label, src, rhs in EXAMPLES:
        if "P1" in src and "P1" not in env.modules:
            continue
        f = evaluate(src, env)
        row = {"name": label, "expr": src, "dom": f.dom.name, "cod": f.cod.name}
        if rhs is not None:
            row["equals"] = rhs
            row["holds"] = f == evaluate(rhs, env)
        elif f.matrix.shape == (1, 1):
            row["value"] = _encode(F, f.matrix[0, 0])
        rows.append(row)
    ok = all(r.get("holds", True) for r in rows)
    _emit({"ok": ok, "algebra": S.algebra.name, "modules": sorted(env.modules), "examples": rows}, args)
    return EXIT_OK if ok else EXIT_CHECK


# -- argument parsing --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("algebra", nargs="?", help="Hopf algebra JSON file")
    common.add_argument("--builtin", nargs="+", metavar="NAME", help="sweedler | taft N | group_z N")
    common.add_argument("--seed", type=int, default=_default_seed(), help="default: $MTRACE_SEED or 0")
    common.add_argument("--sabotage", choices=["pivot"], help="replace the pivot by 1 (negative control)")
    common.add_argument("--module-file", action="append", metavar="NAME=PATH", help="register a module JSON")
    common.add_argument("--pretty", action="store_true", help="also print a table on stderr")

    p = argparse.ArgumentParser(prog="mtrace", description="Modified traces over pivotal Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="load and validate an algebra")
    d = sub.add_parser("decompose", parents=[common], help="decompose a module")
    d.add_argument("--module", default="reg")

    for name in ("trace", "check", "eval"):
        q = sub.add_parser(name, parents=[common])
        q.add_argument("--auto-proj-cover", action="store_true", help="use the projective cover of the unit")
        q.add_argument("--tuple", metavar="P,ALPHA,BETA", help="trace tuple from registered names")
        q.add_argument("--n", type=int, default=10, help="random samples per check")
        if name == "trace":
            q.add_argument("--module", required=True)
            g = q.add_mutually_exclusive_group()
            g.add_argument("--expr", help="morphism alpha (x) V -> beta (x) V in the DSL")
            g.add_argument("--basis", action="store_true", help="evaluate on a hom-space basis (default)")
            q.add_argument("--check", choices=list(SUITES) + ["all"])
            q.add_argument("--samples", type=int, default=3, help="property samples per value")
        elif name == "check":
            q.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
        else:
            q.add_argument("--expr", required=True)
            q.add_argument("--equals", help="second expression to compare against")
    sub.add_parser("examples", parents=[common], help="evaluate the built-in DSL examples")
    return p


COMMANDS = {"validate": cmd_validate, "decompose": cmd_decompose, "trace": cmd_trace,
            "check": cmd_check, "eval": cmd_eval, "examples": cmd_examples}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not args.algebra and not args.builtin:
        args.builtin = ["sweedler"] if args.command == "examples" else None
        if not args.builtin:
            sys.stderr.write("mtrace: give an algebra file or --builtin\n")
            return EXIT_INVALID
    try:
        return COMMANDS[args.command](args)
    except NotInIdeal as exc:
        return _fail(args, EXIT_PRECONDITION, exc)
    except (HomNotLine, NotAbsIndec, ZeroMorphism, NotSplit, UnsupportedCharacteristic) as exc:
        return _fail(args, EXIT_PRECONDITION, exc)
    except AxiomViolation as exc:
        return _fail(args, EXIT_INVALID, exc, axiom=exc.axiom, witness=list(exc.witness))
    except (DSLSyntaxError, TypeCheckError, MtraceError, KeyError, OSError, ValueError) as exc:
        return _fail(args, EXIT_INVALID, exc)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success or when every check passes, 1 when a check fails,
2 for bad arguments (including unparsable shapes and non-generic parameters).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import suites
from .bratteli import export_dot, young_graph_power
from .combinatorics import MPartition, ShapeError, standard_tableaux
from .forms import gram_matrix
from .matrix import matrix_rank
from .repn import build_representation, idempotent, jm_matrices, specialize_module, word_trace
from .scalar import GenericityError, ParamSpec, ParseError, check_genericity, require_generic
from .serialize import decomposition_to_list, gram_to_dict, matrix_rows, rep_to_dict, scalar_text
from .smash import build_tensor_module, decompose, expected_decomposition


class UsageError(Exception):
    pass


def _shape(args, text=None) -> MPartition:
    text = args.shape if text is None else text
    shape = MPartition.parse(text, args.m)
    n = getattr(args, "n", None)
    if n is not None and shape.size != n:
        raise UsageError(f"shape {text} has size {shape.size}, not n = {n}")
    return shape


def _spec(args, m: int, n: int) -> ParamSpec | None:
    if args.q is None and args.v is None:
        return None
    if args.q is None or args.v is None:
        raise UsageError("--q and --v must be given together")
    try:
        spec = ParamSpec.parse(args.q, args.v)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad parameter values: {e}") from None
    if spec.m != m:
        raise UsageError(f"--v has {spec.m} values but m = {m}")
    require_generic(spec, n, m)
    return spec


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _matrix_text(name: str, rows: list) -> str:
    width = max((len(x) for r in rows for x in r), default=1)
    lines = [f"{name}:"]
    lines += ["  [ " + "  ".join(x.rjust(width) for x in r) + " ]" for r in rows]
    return "\n".join(lines)


# subcommands ------------------------------------------------------------------

def cmd_tableaux(args) -> int:
    shape = _shape(args)
    basis = standard_tableaux(shape)
    if args.format == "json":
        _emit(json.dumps([{"index": i, "tableau": t.to_text(), "contents": [list(c) for c in t.content_string()]}
                          for i, t in enumerate(basis)], indent=2))
    else:
        _emit(f"{len(basis)} standard tableaux of shape {shape.to_text()}")
        for i, t in enumerate(basis):
            _emit(f"{i}: {t.to_text()}")
    return 0


def cmd_rep(args) -> int:
    shape = _shape(args)
    spec = _spec(args, shape.m, shape.size)
    rep = build_representation(shape, spec, args.vacuum)
    if args.format == "json":
        _emit(json.dumps(rep_to_dict(rep), indent=2))
        return 0
    _emit(f"shape {shape.to_text()}, dimension {rep.dim}")
    for i, t in enumerate(rep.basis):
        _emit(f"basis {i}: {t.to_text()}")
    for name, g in rep.generators():
        _emit(_matrix_text(name, matrix_rows(g)))
    return 0


def cmd_jm(args) -> int:
    shape = _shape(args)
    spec = _spec(args, shape.m, shape.size)
    rep = build_representation(shape, spec)
    jms = jm_matrices(rep)
    out = []
    ok = True
    for j, t in enumerate(rep.basis):
        vals = [J[j, j] for J in jms]
        ok = ok and all(J.is_diagonal() for J in jms)
        out.append({"tableau": t.to_text(), "eigenvalues": [scalar_text(x) for x in vals]})
    if args.format == "json":
        _emit(json.dumps({"diagonal": ok, "spectrum": out}, indent=2))
    else:
        _emit(f"JM elements diagonal: {'yes' if ok else 'no'}")
        for row in out:
            _emit(f"{row['tableau']}: " + ", ".join(row["eigenvalues"]))
    return 0 if ok else 1


def cmd_gram(args) -> int:
    shape = _shape(args)
    spec = _spec(args, shape.m, shape.size)
    G = gram_matrix(shape, spec)
    data = gram_to_dict(G)
    if args.format == "json":
        _emit(json.dumps(data, indent=2))
    else:
        for i, t in enumerate(G.basis):
            _emit(f"{i}: {t.to_text()}  {data['diagonal'][str(i)]}")
    return 0


def cmd_bratteli(args) -> int:
    if args.m < 1 or args.depth < 0:
        raise UsageError("need --m >= 1 and --depth >= 0")
    g = young_graph_power(args.m, args.depth)
    _emit(export_dot(g) if args.dot else g.to_json())
    return 0


def cmd_tensor(args) -> int:
    shapes = [_shape(args, s) for s in args.shapes]
    m, n = shapes[0].m, shapes[0].size
    if any(s.size != n for s in shapes):
        raise UsageError("all shapes must have the same size")
    spec = _spec(args, m, n)
    module = build_tensor_module(shapes, spec)
    out: dict = {"shapes": [s.to_text() for s in shapes], "dimension": module.dim}
    status = 0
    if args.decompose:
        dspec = spec or suites.default_spec(m)
        require_generic(dspec, n, m)
        dec = decompose(module if spec else specialize_module(module, dspec))
        out["decomposition"] = decomposition_to_list(dec)
        out["expected"] = decomposition_to_list(expected_decomposition(shapes))
        status = 0 if dec == expected_decomposition(shapes) else 1
    if args.dump:
        out["basis"] = [[t.to_text() for t in b] for b in module.basis]
        out["generators"] = {name: matrix_rows(g) for name, g in module.generators()}
    _emit(json.dumps(out, indent=2))
    return status


def cmd_idempotents(args) -> int:
    shape = _shape(args)
    spec = _spec(args, shape.m, shape.size) or suites.default_spec(shape.m)
    require_generic(spec, shape.size, shape.m)
    rep = build_representation(shape, spec)
    from .repn import verify_idempotents
    report = verify_idempotents(rep)
    rows = [{"tableau": t.to_text(), "rank": matrix_rank(idempotent(t, rep))} for t in rep.basis]
    if args.format == "json":
        _emit(json.dumps({"params": str(spec), "ok": bool(report), "idempotents": rows}, indent=2))
    else:
        _emit(f"at {spec}: {report}")
        for r in rows:
            _emit(f"{r['tableau']}: rank {r['rank']}")
    return 0 if report else 1


def cmd_trace(args) -> int:
    shape = _shape(args)
    spec = _spec(args, shape.m, shape.size)
    rep = build_representation(shape, spec)
    try:
        value = word_trace(rep, args.word)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(scalar_text(value))
    return 0


def cmd_verify(args) -> int:
    if args.m < 1 or args.max_n < 1:
        raise UsageError("need --m >= 1 and --max-n >= 1")
    spec = None
    if args.q is not None or args.v is not None:
        spec = _spec(args, args.m, args.max_n)
    tasks = suites.plan(args.suite, args.m, args.max_n, spec)
    failed = passed = 0
    for check in suites.run(tasks, args.jobs):
        if check.ok:
            passed += 1
        else:
            failed += 1
        if args.verbose or not check.ok:
            _emit(check.line())
    _emit(f"{passed} passed, {failed} failed")
    return 1 if failed else 0


def cmd_spec_check(args) -> int:
    try:
        spec = ParamSpec.parse(args.q, args.v)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad parameter values: {e}") from None
    bad = check_genericity(spec, args.n)
    if args.format == "json":
        _emit(json.dumps({"params": str(spec), "n": args.n, "generic": not bad,
                          "violations": [{"condition": v.condition,
                                          "detail": {k: str(x) for k, x in v.detail.items()}} for v in bad]},
                         indent=2))
    else:
        _emit(f"{spec}, n={args.n}: {'generic' if not bad else 'not generic'}")
        for v in bad:
            _emit(f"  violates {v}")
    return 0 if not bad else 1


# parser -----------------------------------------------------------------------

def _add_params(p):
    p.add_argument("--q", help="value of q, e.g. 2 or 3/2 (symbolic if omitted)")
    p.add_argument("--v", help="comma-separated values of v1..vm")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclohecke", description="Seminormal representations of H(m,1,n).")
    sub = ap.add_subparsers(dest="command", required=True)

    def shape_cmd(name, help_text, fmt=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--shape", required=True, help='m-partition such as "[[2,1],[1]]"')
        p.add_argument("--m", type=int, help="number of components (checked against the shape)")
        p.add_argument("--n", type=int, help="size (checked against the shape)")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = shape_cmd("tableaux", "list standard m-tableaux in basis order")
    p.set_defaults(func=cmd_tableaux)

    p = shape_cmd("rep", "generator matrices of a seminormal representation")
    _add_params(p)
    p.add_argument("--vacuum", choices=("q", "-q^-1"), default="q")
    p.set_defaults(func=cmd_rep)

    p = shape_cmd("jm", "Jucys-Murphy eigenvalues on the basis")
    _add_params(p)
    p.set_defaults(func=cmd_jm)

    p = shape_cmd("gram", "diagonal of the invariant form")
    _add_params(p)
    p.set_defaults(func=cmd_gram)

    p = shape_cmd("idempotents", "ranks of E_X and the matrix-unit checks")
    _add_params(p)
    p.set_defaults(func=cmd_idempotents)

    p = shape_cmd("trace", "trace of a generator word", fmt=False)
    _add_params(p)
    p.add_argument("--word", required=True, help='e.g. "sigma1 sigma3" or "tau sigma1^-1"')
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("bratteli", help="m-th power of the Young graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="Graphviz output instead of JSON")
    p.set_defaults(func=cmd_bratteli)

    p = sub.add_parser("tensor", help="tensor-product module of several shapes")
    p.add_argument("shapes", nargs="+", help="shapes, leftmost factor first")
    p.add_argument("--m", type=int)
    _add_params(p)
    p.add_argument("--decompose", action="store_true")
    p.add_argument("--dump", action="store_true", help="include basis and generator matrices")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=suites.SUITES + ("all",))
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verbose", action="store_true", help="print passing checks too")
    _add_params(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spec-check", help="genericity conditions for numeric parameters")
    p.add_argument("--q", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_spec_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ShapeError, ParseError) as e:
        pos = getattr(e, "pos", None)
        where = f" (position {pos})" if pos is not None and "position" not in str(e) else ""
        sys.stderr.write(f"cyclohecke: error: {e}{where}\n")
        return 2
    except (UsageError, GenericityError) as e:
        sys.stderr.write(f"cyclohecke: error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

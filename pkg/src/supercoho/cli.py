"""Command-line front end.

Exit codes: 0 success, 1 computational error (including failed verification),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import SupercohoError

CSV_HEADER = "# exact values are integers; decimal columns, if any, are for reading only"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _emit(obj, args, csv_rows=None):
    from .serialize import dumps
    fmt = getattr(args, "format", "json")
    if fmt == "csv" and csv_rows is not None:
        text = CSV_HEADER + "\n" + "\n".join(",".join(str(c) for c in row) for row in csv_rows) + "\n"
    else:
        text = dumps(obj)
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _algebra(args):
    from .serialize import parse_algebra
    try:
        return parse_algebra(args.algebra)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _module(spec, g):
    from .serialize import parse_module
    try:
        return parse_module(spec, g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _module_and_algebra(args):
    """Resolve --module (and --algebra, possibly taken from a module file)."""
    from .serialize import parse_algebra
    if args.algebra:
        g = _algebra(args)
    elif args.module.startswith("@") and "*" not in args.module:
        obj = json.loads(Path(args.module[1:]).read_text())
        ref = obj["algebra"]
        from .serialize import algebra_from_json
        g = algebra_from_json(ref) if isinstance(ref, dict) else parse_algebra(ref)
    else:
        raise UsageError("--algebra is required unless --module names a JSON file")
    return g, _module(args.module, g)


def _pair(g, name):
    """(algebra to take cohomology of, relative subalgebra, module restriction target or None)."""
    from .algebra import (basis_subalgebra, detecting_e, detecting_f, detecting_f_W, detecting_fbar,
                          graded_part, zero_subalgebra)
    name = name.lower()
    if name == "g0":
        if g.zdegree is None:
            raise UsageError("pair g0 needs a Z-graded algebra")
        return g, graded_part(g, [0], name="g0"), None
    if name == "none":
        return g, zero_subalgebra(g), None
    if name == "gplus":
        gp = graded_part(g, [0, 1], name="g+")
        a = basis_subalgebra(gp.algebra, [i for i, d in enumerate(gp.algebra.zdegree) if d == 0], name="g0")
        return gp.algebra, a, gp
    if name in ("f", "fbar", "e"):
        if g.kind and g.kind[0] == "W" and name == "f":
            h = detecting_f_W(g)
        elif name == "f":
            h = detecting_f(g)
        elif name == "fbar":
            h = detecting_fbar(g)
        else:
            h = detecting_e(g)[0]
        return h.algebra, basis_subalgebra(h.algebra, h.even_indices(), name=f"{h.name}_0"), h
    raise UsageError(f"unknown pair {name!r} (g0, none, gplus, f, fbar, e)")


def _subalgebra(g, name):
    from .algebra import detecting_e, detecting_f, detecting_f_W, detecting_fbar
    name = name.lower()
    if name == "fbar":
        return detecting_fbar(g)
    if name == "e":
        return detecting_e(g)[0]
    if name == "f":
        return detecting_f_W(g) if g.kind and g.kind[0] == "W" else detecting_f(g)
    raise UsageError(f"unknown subalgebra {name!r} (fbar, e, f)")


# ---------------------------------------------------------------------------
# subcommands

def cmd_algebra(args):
    from .serialize import algebra_to_json
    g = _algebra(args)
    if args.check:
        g.verify()
    _emit(algebra_to_json(g), args)


def cmd_module(args):
    from .serialize import module_to_json
    g = _algebra(args)
    kind = args.kind
    if kind in ("kac", "dualkac", "simple"):
        if args.weight is None:
            raise UsageError(f"--weight is required for kind {kind}")
        spec = f"{kind}:{args.weight}"
    elif kind == "character":
        from .modules import character_module
        from .serialize import parse_weight
        if args.weight is None:
            raise UsageError("--weight is required for kind character")
        M = character_module(g, parse_weight(args.weight))
        _emit(module_to_json(M), args)
        return
    else:
        spec = kind
    _emit(module_to_json(_module(spec, g)), args)


def cmd_cohomology(args):
    from .cohomology import build_relative_complex
    from .modules import restrict
    g, M = _module_and_algebra(args)
    alg, a, h = _pair(g, args.pair)
    Mh = restrict(M, h) if h is not None else M
    cx = build_relative_complex(alg, a, Mh, args.max_degree + 1)
    res = cx.cohomology()
    obj = {"algebra": args.algebra or g.name, "pair": args.pair, "module": args.module,
           "dims": res.dims, "complexDims": cx.dims[:args.max_degree + 1]}
    rows = [["degree", "dim", "complex_dim"]] + [[p, res.dims[p], cx.dims[p]] for p in range(len(res.dims))]
    _emit(obj, args, rows)


def cmd_restriction(args):
    from .cohomology import restriction
    g, M = _module_and_algebra(args)
    galg, ga, gh = _pair(g, args.source)
    if gh is not None or galg is not g:
        raise UsageError("--from must be g0 or none")
    halg, ha, h = _pair(g, args.target)
    if h is None:
        raise UsageError("--to must be f, fbar or e")
    r = restriction((g, ga), (h, ha), M, args.max_degree + 1)
    obj = r.to_json()
    obj.update({"algebra": args.algebra or g.name, "module": args.module, "from": args.source, "to": args.target})
    rows = [["degree", "dim_g", "dim_h", "injective"]] + [
        [p, r.dims_g[p], r.dims_h[p], int(r.injective[p])] for p in range(len(r.injective))]
    _emit(obj, args, rows)


def cmd_invariants(args):
    from .algebra import detecting_e, detecting_f_W, normalizer_group_W
    from .cohomology import invariant_ring_dims, torus_action_on
    g = _algebra(args)
    space = args.space.lower()
    if space == "odd":
        odd = g.indices_of_parity(1)
        acting = [i for i, p in enumerate(g.parity) if p == 0]
        dims = invariant_ring_dims(len(odd), torus_action_on(g, odd, acting), None, args.max_degree)
    elif space == "e1":
        e, W = detecting_e(g)
        dims = invariant_ring_dims(len(e.odd_indices()), [], W, args.max_degree)
    elif space == "f1":
        if not (g.kind and g.kind[0] == "W"):
            raise UsageError("space f1 is available for w:n")
        f = detecting_f_W(g)
        fa = f.algebra
        acts = torus_action_on(fa, f.odd_indices(), f.even_indices())
        dims = invariant_ring_dims(len(f.odd_indices()), acts, normalizer_group_W(g.kind[1]), args.max_degree)
    else:
        raise UsageError(f"unknown space {space!r} (odd, e1, f1)")
    rows = [["degree", "dim"]] + [[d, v] for d, v in enumerate(dims)]
    _emit({"algebra": args.algebra, "space": space, "dims": dims}, args, rows)


def cmd_rank_variety(args):
    from .varieties import probe_points, rank_variety_probe
    g, M = _module_and_algebra(args)
    h = _subalgebra(g, args.subalgebra)
    try:
        pts = probe_points(args.points, len(h.odd_indices()))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = rank_variety_probe(M, h, pts)
    from .linalg import rat_str
    obj = {"subalgebra": args.subalgebra, "module": args.module, "oddBasis": [h.algebra.labels[i] for i in h.odd_indices()],
           "points": [{"point": r.point.to_json(), "member": m, "projective": r.projective, "method": r.method,
                       "selfBracket": [[g.labels[k], rat_str(c)] for k, c in sorted(r.self_bracket.items())]}
                      for r, m in zip(res.reports, res.membership)],
           "zeroMember": True}
    rows = [["point", "member", "method"]] + [[" ".join(r.point.to_json()), int(m), r.method]
                                              for r, m in zip(res.reports, res.membership)]
    _emit(obj, args, rows)


def cmd_support(args):
    from .varieties import support_variety
    g, M = _module_and_algebra(args)
    sv = support_variety(M, args.points)
    obj = sv.to_json()
    obj["module"] = args.module
    _emit(obj, args)


def cmd_atypicality(args):
    from .serialize import parse_weight
    from .varieties import atypicality
    try:
        w = parse_weight(args.weight)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad weight: {exc}") from None
    if len(w) != args.m + args.n:
        raise UsageError(f"weight needs {args.m + args.n} coordinates")
    rep = atypicality(w, args.m, args.n)
    _emit(rep.to_json() if args.verbose else {"atypicality": rep.atypicality}, args)


def cmd_verify(args):
    from .verify import run_suite
    try:
        report = run_suite(args.suite)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    _emit(report, args)
    return 0 if report["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="supercoho", description="Exact relative cohomology and support computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, module=True, algebra_required=False):
        sp.add_argument("--algebra", required=algebra_required, help="gl:m,n | w:n | s:n | @file.json")
        if module:
            sp.add_argument("--module", required=True, help="module reference, e.g. dualkac:-1,1 or natural*dual")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("algebra", help="print an algebra as JSON")
    sp.add_argument("--name", dest="algebra", required=True, help="gl:m,n | w:n | s:n | @file.json")
    sp.add_argument("--check", action="store_true", help="verify Jacobi and grading first")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_algebra)

    sp = sub.add_parser("module", help="build a module and print it as JSON")
    sp.add_argument("action", choices=["build"])
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--kind", required=True,
                    choices=["trivial", "natural", "dual", "adjoint", "kac", "dualkac", "simple", "character"])
    sp.add_argument("--weight")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_module)

    sp = sub.add_parser("cohomology", help="dimensions of relative cohomology")
    common(sp)
    sp.add_argument("--pair", default="g0", help="g0 | none | gplus | f | fbar | e")
    sp.add_argument("--max-degree", type=int, default=4)
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("restriction-check", help="injectivity of restriction to a detecting subalgebra")
    common(sp)
    sp.add_argument("--from", dest="source", default="g0")
    sp.add_argument("--to", dest="target", default="f")
    sp.add_argument("--max-degree", type=int, default=4)
    sp.set_defaults(func=cmd_restriction)

    sp = sub.add_parser("invariants", help="dimensions of invariant polynomials")
    common(sp, module=False, algebra_required=True)
    sp.add_argument("--space", default="odd", help="odd | e1 | f1")
    sp.add_argument("--max-degree", type=int, default=4)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("rank-variety", help="rank-variety membership at probe points")
    common(sp)
    sp.add_argument("--subalgebra", default="fbar", help="fbar | e | f")
    sp.add_argument("--points", default="axes")
    sp.set_defaults(func=cmd_rank_variety)

    sp = sub.add_parser("support", help="sampled support variety over e modulo W")
    common(sp)
    sp.add_argument("--points", default="axes+grid+random:0:8")
    sp.set_defaults(func=cmd_support)

    sp = sub.add_parser("atypicality", help="atypicality of a gl(m|n) weight")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--verbose", action="store_true", help="include rho and the edge list")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_atypicality)

    sp = sub.add_parser("verify", help="run a bundled verification suite")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)
    return p


def _join_negative_values(argv):
    """Let ``--weight -1,1`` through argparse, which would read "-1,1" as a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--weight", "--points"):
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_negative_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_degree", 1) < 1:
        parser.print_usage(sys.stderr)
        print("supercoho: error: --max-degree must be at least 1", file=sys.stderr)
        return 2
    try:
        code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"supercoho: error: {exc}", file=sys.stderr)
        return 2
    except (SupercohoError, ValueError, ArithmeticError) as exc:
        print(f"supercoho: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"supercoho: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())

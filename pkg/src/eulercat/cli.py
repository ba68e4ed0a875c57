"""Command-line front end.

Exit codes: 0 success, 1 the mathematics says no (a ``reason:`` line
follows on stderr), 2 broken input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Callable

from . import builders, core, formats, functors, lefschetz, mobius
from .errors import InputError, MathNegative, NoCoweighting, NoWeighting, UndefinedChi
from .exact import AffineSolutionSet, QMat, fmt


class Result:
    """Something to print: plain text plus a JSON-able structure."""

    def __init__(self, text: str, data=None):
        self.text = text if text.endswith("\n") or not text else text + "\n"
        self.data = data if data is not None else text.rstrip("\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _read_or_fail(path: str) -> str:
    try:
        return _read_text(path)
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def load_category(path: str) -> core.FinCat:
    return formats.parse_category(_read_or_fail(path), path)


def load_functor(path: str) -> functors.SetFunctor:
    return formats.parse_set_functor(_read_or_fail(path), path)


def load_endofunctor(path: str) -> core.Functor:
    return formats.parse_endofunctor(_read_or_fail(path), path)


def _vector(labels, values) -> Result:
    text = "\n".join(f"{a}  {fmt(v)}" for a, v in zip(labels, values))
    return Result(text, {str(a): fmt(v) for a, v in zip(labels, values)})


def _matrix(M: QMat) -> Result:
    return Result(M.render(), M.to_json())


def _category(C: core.FinCat) -> Result:
    return Result(formats.dump_category(C), {
        "name": C.name, "objects": list(C.objects),
        "arrows": [[a.id, a.source, a.target] for a in C.arrows],
        "identities": dict(C.identities),
        "composition": [[g, f, h] for (g, f), h in sorted(C.composition.items())]})


def _solutions(sol: AffineSolutionSet, negative) -> Result:
    if not sol.exists:
        raise negative
    lines = [f"kind: {sol.kind}"] + [f"{a}  {fmt(v)}" for a, v in zip(sol.labels, sol.particular)]
    for i, v in enumerate(sol.nullspace_basis):
        lines.append(f"null{i}: " + ", ".join(fmt(x) for x in v))
    return Result("\n".join(lines), sol.to_json())


def _chi(value) -> Result:
    if isinstance(value, mobius.Undefined):
        raise UndefinedChi(str(value))
    return Result(fmt(value), fmt(value))


# ---------------------------------------------------------------- commands

def cmd_validate(a):
    C = load_category(a.file)
    return Result(f"ok: {C.name}, {len(C.objects)} objects, {len(C.arrows)} arrows",
                  {"ok": True, "name": C.name, "objects": len(C.objects), "arrows": len(C.arrows)})


def cmd_profile(a):
    p = core.structural_profile(load_category(a.file))
    d = p.to_json()
    return Result("\n".join(f"{k}: {v}" for k, v in d.items()), d)


def cmd_zeta(a):
    return _matrix(mobius.zeta(load_category(a.file)))


def cmd_mobius(a):
    return _matrix(mobius.mobius_matrix(load_category(a.file)))


def cmd_mobius_paths(a):
    return _matrix(mobius.mobius_by_paths(load_category(a.file)))


def cmd_mobius_fs(a):
    C = load_category(a.file)
    E = a.epis.split(",") if a.epis else None
    M = a.monos.split(",") if a.monos else None
    if a.fin_sets:
        E, M = builders.fin_sets_factorization(C)
    return _matrix(mobius.mobius_by_factorization(C, E, M))


def cmd_weighting(a):
    C = load_category(a.file)
    return _solutions(mobius.weighting(C), NoWeighting(f"{C.name} has no weighting"))


def cmd_coweighting(a):
    C = load_category(a.file)
    return _solutions(mobius.coweighting(C), NoCoweighting(f"{C.name} has no coweighting"))


def cmd_euler(a):
    return _chi(mobius.euler_characteristic(load_category(a.file)))


def cmd_nerve_euler(a):
    n = mobius.nerve_euler(load_category(a.file))
    return Result(str(n), n)


def cmd_graph_euler(a):
    G = formats.parse_digraph(_read_or_fail(a.file), a.file)
    return _chi(mobius.euler_of_graph(G))


def cmd_elements(a):
    return _category(functors.elements(load_functor(a.file)).category)


def cmd_colim(a):
    q = functors.colimit(load_functor(a.file))
    classes = [[f"{x}@{y}" for x, y in cl] for cl in q.classes]
    text = f"{len(classes)} classes\n" + "\n".join("{" + ", ".join(c) + "}" for c in classes)
    return Result(text, {"cardinality": len(classes), "classes": classes})


def cmd_colim_card(a):
    X = load_functor(a.file)
    n = len(functors.colimit(X))
    w = functors.colimit_cardinality_via_weighting(X, verify=False)
    text = f"union-find: {n}\nweighted: {fmt(w)}"
    return Result(text, {"union_find": n, "weighted": fmt(w), "agree": w == n})


def cmd_nondegen(a):
    nd = functors.is_nondegenerate(load_functor(a.file))
    if not nd.ok:
        text = f"degenerate: {nd.condition} condition fails at {nd.witness}"
        return Result(text, {"nondegenerate": False, "condition": nd.condition, "witness": repr(nd.witness)})
    return Result("nondegenerate", {"nondegenerate": True})


def cmd_fr(a):
    d = functors.fr_decompose(load_functor(a.file))
    return _vector(list(d.coefficients), list(d.coefficients.values()))


def cmd_repcoeffs(a):
    X = load_functor(a.file)
    r = functors.representation_coefficients(X)
    return _vector(list(r), list(r.values()))


def derangement_oracle(n: int) -> int:
    return sum(all(p[i] != i for i in range(n)) for p in itertools.permutations(range(n)))


def cmd_derangements(a):
    X = builders.symmetric_action(a.N)
    r = functors.representation_coefficients(X)
    rows = [(n, r[str(n)], derangement_oracle(n)) for n in range(a.N + 1)]
    text = "n  r(n)  derangements\n" + "\n".join(f"{n}  {fmt(x)}  {d}" for n, x, d in rows)
    return Result(text, [{"n": n, "r": fmt(x), "oracle": d} for n, x, d in rows])


def cmd_tensor(a):
    Y, X = load_functor(a.y), load_functor(a.x)
    q = functors.tensor(Y, X)
    return Result(str(len(q)), {"cardinality": len(q)})


def cmd_chi_elements(a):
    return _chi(functors.chi_of_elements(load_functor(a.file)))


def cmd_fix(a):
    return _category(lefschetz.fixed_category(load_endofunctor(a.file)))


def cmd_lefschetz(a):
    return _chi(lefschetz.lefschetz_number(load_endofunctor(a.file)))


def cmd_alg(a):
    return _category(lefschetz.algebra_category(load_endofunctor(a.file)))


def cmd_coalg(a):
    return _category(lefschetz.coalgebra_category(load_endofunctor(a.file)))


def cmd_op(a):
    return _category(core.opposite(load_category(a.file)))


def cmd_sum(a):
    return _category(core.sum_categories([load_category(p) for p in a.files]))


def cmd_product(a):
    return _category(core.product_categories([load_category(p) for p in a.files], arrow_cap=a.arrow_cap))


def cmd_interval(a):
    C = load_category(a.file)
    for x in (a.a, a.c):
        if x not in C.object_index:
            raise InputError(f"no object {x!r} in {C.name}")
    return _category(core.interval(C, a.a, a.c))


def cmd_adjoin(a):
    return _category(core.adjoin_bounds(load_category(a.file), initial=not a.no_initial,
                                        terminal=not a.no_terminal))


def cmd_collage(a):
    P = formats.parse_profunctor(_read_or_fail(a.file), a.file)
    return _category(core.collage(P, arrow_cap=a.arrow_cap))


def cmd_free_cat(a):
    G = formats.parse_digraph(_read_or_fail(a.file), a.file)
    return _category(core.free_category(G, arrow_cap=a.arrow_cap))


def cmd_cll(a):
    C = load_category(a.file)
    inc = mobius.cll_mobius(C)
    return _vector(C.arrow_ids, [inc[f] for f in C.arrow_ids])


def cmd_galois_check(a):
    A, B = load_category(a.a), load_category(a.b)
    F, G = formats.parse_map_pair(_read_or_fail(a.maps), a.maps)
    rep = mobius.galois_identity_check(A, B, F, G)
    text = f"pairs checked: {rep.pairs_checked}\nviolations: {len(rep.violations)}"
    data = {"pairs_checked": rep.pairs_checked,
            "violations": [[x, y, fmt(l), fmt(r)] for x, y, l, r in rep.violations]}
    if rep.violations:
        text += "\n" + "\n".join(f"{x} {y}: {fmt(l)} != {fmt(r)}" for x, y, l, r in rep.violations)
    return Result(text, data)


def cmd_build(a):
    params = [int(p) for p in a.params]
    if a.functor:
        X = builders.build_functor(a.name, *params)
        return Result(formats.dump_set_functor(X), formats.dump_set_functor(X))
    return _category(builders.build(a.name, *params))


def cmd_verify(a):
    from .verify import VerifyConfig, render_table, run_suite

    res = run_suite(VerifyConfig(workers=a.workers))
    failed = [r for r in res if not r.ok]
    shown = res if a.all else failed
    text = render_table(shown) if shown else f"{len(res)} checks, 0 failed\n"
    data = {"checks": len(res), "failed": [[r.category, r.check, r.detail] for r in failed]}
    if failed:
        raise _VerifyFailed(Result(text, data))
    return Result(text, data)


class _VerifyFailed(Exception):
    def __init__(self, result):
        self.result = result


# ------------------------------------------------------------------ parser

def _add(sub, name: str, fn: Callable, help: str, *args: str):
    p = sub.add_parser(name, help=help)
    for arg in args:
        p.add_argument(arg, help="file path, or - for standard input" if arg in ("file", "y", "x") else None)
    p.set_defaults(fn=fn)
    return p


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eulercat", description="Euler characteristics of finite categories.")
    ap.add_argument("--json", action="store_true", help="emit a JSON rendering of the result")
    ap.add_argument("-o", "--output", help="write the result to this file instead of standard output")
    sub = ap.add_subparsers(dest="verb", required=True)
    _add(sub, "validate", cmd_validate, "check the category laws", "file")
    _add(sub, "profile", cmd_profile, "structural properties", "file")
    _add(sub, "zeta", cmd_zeta, "hom-set counts", "file")
    _add(sub, "mobius", cmd_mobius, "Möbius matrix by exact inversion", "file")
    _add(sub, "mobius-paths", cmd_mobius_paths, "Möbius matrix by path sums", "file")
    p = _add(sub, "mobius-fs", cmd_mobius_fs, "Möbius matrix from a factorization system", "file")
    p.add_argument("--epis", help="comma-separated arrow ids for E (default: all epimorphisms)")
    p.add_argument("--monos", help="comma-separated arrow ids for M (default: all monomorphisms)")
    p.add_argument("--fin-sets", action="store_true", help="use surjections and injections of a fin_sets category")
    _add(sub, "weighting", cmd_weighting, "solve for weightings", "file")
    _add(sub, "coweighting", cmd_coweighting, "solve for coweightings", "file")
    _add(sub, "euler", cmd_euler, "Euler characteristic", "file")
    _add(sub, "nerve-euler", cmd_nerve_euler, "alternating nondegenerate path count", "file")
    _add(sub, "graph-euler", cmd_graph_euler, "Euler characteristic of a free category on a graph", "file")
    _add(sub, "elements", cmd_elements, "category of elements of a functor", "file")
    _add(sub, "colim", cmd_colim, "colimit of a Set-valued functor", "file")
    _add(sub, "colim-card", cmd_colim_card, "colimit size two ways", "file")
    _add(sub, "nondegen", cmd_nondegen, "diagram-completion check", "file")
    _add(sub, "fr", cmd_fr, "decompose as a sum of representables", "file")
    _add(sub, "repcoeffs", cmd_repcoeffs, "representation coefficients", "file")
    p = _add(sub, "derangements", cmd_derangements, "derangement counts from the symmetric-group functor")
    p.add_argument("N", type=int)
    _add(sub, "tensor", cmd_tensor, "size of the tensor product of Y (on A^op) and X (on A)", "y", "x")
    _add(sub, "chi-elements", cmd_chi_elements, "chi of the category of elements via the fibration formula", "file")
    _add(sub, "fix", cmd_fix, "strict fixed-point category", "file")
    _add(sub, "lefschetz", cmd_lefschetz, "Lefschetz number", "file")
    _add(sub, "alg", cmd_alg, "category of algebras", "file")
    _add(sub, "coalg", cmd_coalg, "category of coalgebras", "file")
    _add(sub, "op", cmd_op, "opposite category", "file")
    p = _add(sub, "sum", cmd_sum, "disjoint union")
    p.add_argument("files", nargs="+")
    p = _add(sub, "product", cmd_product, "product category")
    p.add_argument("files", nargs="+")
    p.add_argument("--arrow-cap", type=int, default=core.DEFAULT_ARROW_CAP)
    p = _add(sub, "interval", cmd_interval, "full subcategory of objects between a and c", "file", "a", "c")
    p = _add(sub, "adjoin", cmd_adjoin, "adjoin an initial and a terminal object", "file")
    p.add_argument("--no-initial", action="store_true")
    p.add_argument("--no-terminal", action="store_true")
    p = _add(sub, "collage", cmd_collage, "collage of a profunctor", "file")
    p.add_argument("--arrow-cap", type=int, default=core.DEFAULT_ARROW_CAP)
    p = _add(sub, "free-cat", cmd_free_cat, "free category on a circuit-free graph", "file")
    p.add_argument("--arrow-cap", type=int, default=core.DEFAULT_ARROW_CAP)
    _add(sub, "cll", cmd_cll, "arrow-level Möbius function", "file")
    _add(sub, "galois-check", cmd_galois_check, "Möbius identity for a Galois connection", "a", "b", "maps")
    p = _add(sub, "build", cmd_build, "emit a catalog category (or functor with --functor)", "name")
    p.add_argument("params", nargs="*")
    p.add_argument("--functor", action="store_true")
    p = _add(sub, "verify", cmd_verify, "run the invariant suite")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--all", action="store_true", help="list passing checks too")
    return ap


def _emit(res: Result, args) -> None:
    out = json.dumps(res.data, indent=2, sort_keys=False) + "\n" if args.json else res.text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        res = args.fn(args)
    except _VerifyFailed as e:
        _emit(e.result, args)
        print("reason: VERIFY_FAILED", file=sys.stderr)
        return 1
    except MathNegative as e:
        print(f"eulercat: {e}", file=sys.stderr)
        print(f"reason: {e.reason}", file=sys.stderr)
        if args.json:
            sys.stdout.write(json.dumps({"error": str(e), "reason": e.reason}) + "\n")
        return 1
    except (InputError, ValueError) as e:
        reason = getattr(e, "reason", "INPUT_ERROR")
        print(f"eulercat: {e}", file=sys.stderr)
        print(f"reason: {reason}", file=sys.stderr)
        return 2
    _emit(res, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())

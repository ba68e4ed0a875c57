"""Named categories and functors, generated programmatically.

``build(name, *params)`` and ``build_functor(name, *params)`` dispatch
through :data:`CATALOG` and :data:`FUNCTOR_CATALOG`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .core import (Arrow, DirectedGraph, FinCat, Functor, make_category, opposite)
from .errors import ParamOutOfRange, UnknownName
from .functors import CatFunctor, SetFunctor, cat_functor, set_functor


def _digits(t: Sequence[int]) -> str:
    return "".join(str(i) for i in t)


def concrete_category(name: str, objects: Sequence[str], homs: Mapping[tuple, Sequence],
                      compose: Callable, identity: Callable, label: Callable,
                      check: bool = True) -> FinCat:
    """Category whose arrows are data values composed by ``compose(g, f)``.

    ``homs[(a, b)]`` lists the data of arrows a -> b; ``identity(a)`` is the
    data of id_a (named ``id_a``); ``label(a, b, data)`` names the rest.
    """
    arrows, by_data, ids = [], {}, {}
    for a in objects:
        d = identity(a)
        ids[a] = f"id_{a}"
        by_data[(a, a, d)] = f"id_{a}"
        arrows.append(Arrow(f"id_{a}", a, a))
    for a in objects:
        for b in objects:
            for d in homs.get((a, b), ()):
                if (a, b, d) in by_data:
                    continue
                aid = label(a, b, d)
                by_data[(a, b, d)] = aid
                arrows.append(Arrow(aid, a, b))
    data = {aid: key for key, aid in by_data.items()}
    out: dict = {x: [] for x in objects}
    for ar in arrows:
        out[ar.source].append(ar.id)
    comp = {}
    for ar in arrows:
        a, b, fd = data[ar.id]
        for g in out[b]:
            _, c, gd = data[g]
            comp[(g, ar.id)] = by_data[(a, c, compose(gd, fd))]
    return make_category(name, objects, arrows, comp, ids, check=check)


# ----------------------------------------------------------------- catalog

def discrete(n: int) -> FinCat:
    return make_category(f"discrete({n})", [str(i) for i in range(1, n + 1)], [], {}, check=False)


def codiscrete(n: int) -> FinCat:
    """n objects, exactly one arrow between any two (a connected groupoid)."""
    objs = [str(i) for i in range(1, n + 1)]
    return concrete_category(f"codiscrete({n})", objs, {(a, b): [(a, b)] for a in objs for b in objs},
                             lambda g, f: (f[0], g[1]), lambda a: (a, a), lambda a, b, d: f"{a}>{b}")


def monoid(table: Sequence[Sequence[int]], name: str = "M", labels: Sequence[str] | None = None) -> FinCat:
    """One-object category from a multiplication table; ``table[g][f] = g.f``
    and element 0 must be the unit."""
    n = len(table)
    labels = list(labels) if labels is not None else ["id_*"] + [f"m{i}" for i in range(1, n)]
    if any(len(r) != n for r in table):
        raise ParamOutOfRange("multiplication table must be square")
    arrows = [Arrow(labels[i], "*", "*") for i in range(n)]
    comp = {(labels[g], labels[f]): labels[table[g][f]] for g in range(n) for f in range(n)}
    return make_category(name, ["*"], arrows, comp, {"*": labels[0]})


def cyclic_group(n: int) -> FinCat:
    labels = ["id_*"] + [f"g{k}" for k in range(1, n)]
    return monoid([[(g + f) % n for f in range(n)] for g in range(n)], f"Z/{n}", labels)


def symmetric_group(n: int) -> FinCat:
    """S_n as a one-object category; arrows ``p`` + one-line notation."""
    perms = list(itertools.permutations(range(1, n + 1)))
    labels = ["id_*"] + ["p" + _digits(p) for p in perms[1:]]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(g[f[i] - 1] for i in range(n))] for f in perms] for g in perms]
    return monoid(table, f"S{n}", labels)


def idempotent_monoid() -> FinCat:
    """{1, e} with e.e = e."""
    return monoid([[0, 1], [1, 1]], "Idem", ["id_*", "e"])


def split_epi_category() -> FinCat:
    """Freely generated by a split epimorphism: e: a -> b, i: b -> a, e.i = 1."""
    arrows = [("e", "a", "b"), ("i", "b", "a"), ("ie", "a", "a")]
    comp = {("e", "i"): "id_b", ("i", "e"): "ie", ("ie", "ie"): "ie", ("e", "ie"): "e", ("ie", "i"): "i"}
    return make_category("SplitEpi", ["a", "b"], arrows, comp)


def poset(elements: Sequence[str], relation, name: str = "P") -> FinCat:
    """Thin category from a relation, closed reflexively and transitively.
    Arrows are named ``x<y``.  Preorders (cycles) are allowed."""
    els = list(elements)
    leq = {(x, x) for x in els} | {tuple(p) for p in relation}
    changed = True
    while changed:
        changed = False
        for (x, y), (y2, z) in itertools.product(list(leq), repeat=2):
            if y == y2 and (x, z) not in leq:
                leq.add((x, z))
                changed = True
    return thin_category(name, els, leq)


def thin_category(name: str, els: Sequence[str], leq) -> FinCat:
    leq = set(leq)
    arrows = [Arrow(f"id_{x}", x, x) for x in els]
    arrows += [Arrow(f"{x}<{y}", x, y) for x in els for y in els if x != y and (x, y) in leq]
    aid = {(a.source, a.target): a.id for a in arrows}
    out: dict = {x: [] for x in els}
    for a in arrows:
        out[a.source].append(a)
    comp = {}
    for a in arrows:
        for g in out[a.target]:
            comp[(g.id, a.id)] = aid[(a.source, g.target)]
    return FinCat(name, tuple(els), tuple(arrows), {x: f"id_{x}" for x in els}, comp)


def chain(n: int) -> FinCat:
    """The ordinal 0 < 1 < ... < n-1."""
    els = [str(i) for i in range(n)]
    return thin_category(f"chain({n})", els, {(a, b) for i, a in enumerate(els) for b in els[i:]})


def _subset_name(s) -> str:
    return "S" + _digits(sorted(s))


def subsets_poset(n: int) -> FinCat:
    """P_n: nonempty subsets of {1..n} under inclusion, by size then lexicographically."""
    subs = [frozenset(c) for k in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), k)]
    els = [_subset_name(s) for s in subs]
    leq = {(_subset_name(s), _subset_name(t)) for s in subs for t in subs if s <= t}
    return thin_category(f"P{n}", els, leq)


def boolean_lattice(n: int) -> FinCat:
    """All subsets of {1..n}, including the empty one (named ``S``)."""
    subs = [frozenset(c) for k in range(0, n + 1) for c in itertools.combinations(range(1, n + 1), k)]
    els = [_subset_name(s) for s in subs]
    leq = {(_subset_name(s), _subset_name(t)) for s in subs for t in subs if s <= t}
    return thin_category(f"B{n}", els, leq)


def divisor_lattice(n: int) -> FinCat:
    divs = [d for d in range(1, n + 1) if n % d == 0]
    els = [str(d) for d in divs]
    return thin_category(f"Div({n})", els, {(str(a), str(b)) for a in divs for b in divs if b % a == 0})


def delta_inj(N: int) -> FinCat:
    """Objects 0..N; arrows a -> b are the order-preserving injections
    {1..a} -> {1..b}, given by their image, named ``i<a>><b>[image]``."""
    objs = [str(a) for a in range(N + 1)]
    homs = {(str(a), str(b)): list(itertools.combinations(range(1, b + 1), a))
            for a in range(N + 1) for b in range(N + 1)}
    return concrete_category(f"Dinj({N})", objs, homs,
                             lambda g, f: tuple(g[i - 1] for i in f),
                             lambda a: tuple(range(1, int(a) + 1)),
                             lambda a, b, d: f"i{a}>{b}[{_digits(d)}]")


def _surjections(a: int, b: int) -> list:
    """Order-preserving surjections {1..a} -> {1..b} as value tuples."""
    if a == 0 or b == 0:
        return [()] if a == b else []
    out = []
    for cuts in itertools.combinations(range(1, a), b - 1):
        vals, level, cs = [], 1, set(cuts)
        for i in range(1, a + 1):
            vals.append(level)
            if i in cs:
                level += 1
        out.append(tuple(vals))
    return out


def delta_surj(N: int) -> FinCat:
    """Objects 0..N; order-preserving surjections, named ``s<a>><b>[values]``."""
    objs = [str(a) for a in range(N + 1)]
    homs = {(str(a), str(b)): _surjections(a, b) for a in range(N + 1) for b in range(N + 1)}
    return concrete_category(f"Dsurj({N})", objs, homs,
                             lambda g, f: tuple(g[i - 1] for i in f),
                             lambda a: tuple(range(1, int(a) + 1)),
                             lambda a, b, d: f"s{a}>{b}[{_digits(d)}]")


def fin_sets(N: int) -> FinCat:
    """F_N: the sets {1..n}, n = 1..N, and all functions, listed
    lexicographically by value tuple; named ``f<i>><j>[values]``."""
    objs = [str(n) for n in range(1, N + 1)]
    homs = {(str(i), str(j)): list(itertools.product(range(1, j + 1), repeat=i))
            for i in range(1, N + 1) for j in range(1, N + 1)}
    return concrete_category(f"F{N}", objs, homs,
                             lambda g, f: tuple(g[i - 1] for i in f),
                             lambda a: tuple(range(1, int(a) + 1)),
                             lambda a, b, d: f"f{a}>{b}[{_digits(d)}]")


def fin_sets_factorization(C: FinCat) -> tuple[tuple, tuple]:
    """(surjections, injections) of a :func:`fin_sets` category, read off the
    value tuples in the arrow names."""
    E, M = [], []
    for a in C.arrows:
        n, m = int(a.source), int(a.target)
        vals = tuple(range(1, n + 1)) if C.is_identity(a.id) else tuple(int(c) for c in a.id.split("[")[1][:-1])
        if set(vals) == set(range(1, m + 1)):
            E.append(a.id)
        if len(set(vals)) == n:
            M.append(a.id)
    return tuple(E), tuple(M)


def sphere_poset(n: int) -> FinCat:
    """S^n: c_i, d_i (i = 0..n) with c_i, d_i < c_j, d_j whenever i < j."""
    if n < -1:
        raise ParamOutOfRange("sphere dimension must be >= -1")
    els = [f"{p}{i}" for i in range(n + 1) for p in "cd"]
    leq = {(x, x) for x in els} | {(f"{p}{i}", f"{q}{j}") for i in range(n + 1) for j in range(i + 1, n + 1)
                                   for p in "cd" for q in "cd"}
    return thin_category(f"Sphere({n})", els, leq)


def pushout_shape() -> FinCat:
    """L: b1 <- a -> b2."""
    return make_category("L", ["a", "b1", "b2"], [("f1", "a", "b1"), ("f2", "a", "b2")], {})


def parallel_pair() -> FinCat:
    """B: a => b."""
    return make_category("B", ["a", "b"], [("f", "a", "b"), ("g", "a", "b")], {})


def no_weighting_example() -> FinCat:
    """Four objects a1..a4; every composite of two non-identities i -> j -> k
    is f_ik, where f33 and f44 are identities."""
    objs = ["a1", "a2", "a3", "a4"]
    names = ["f11", "f22", "f12", "g12", "f21", "g21", "f13", "f31", "f23", "f32", "f14", "f24", "g24", "f34"]
    arrows = [(nm, f"a{nm[1]}", f"a{nm[2]}") for nm in names]
    ends = {nm: (int(nm[1]), int(nm[2])) for nm in names}
    comp = {}
    for p in names:
        for q in names:
            i, j = ends[p]
            j2, k = ends[q]
            if j == j2:
                comp[(q, p)] = f"id_a{k}" if i == k and k in (3, 4) else f"f{i}{k}"
    return make_category("NoWeighting", objs, arrows, comp)


def terminal() -> FinCat:
    return make_category("1", ["*"], [], {})


def empty() -> FinCat:
    return FinCat("0", (), (), {}, {})


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple  # parameter names
    ranges: tuple  # (lo, hi) per parameter
    construct: Callable
    doc: str = ""


def _e(name, construct, params=(), ranges=(), doc=""):
    return CatalogEntry(name, tuple(params), tuple(ranges), construct, doc)


CATALOG: dict[str, CatalogEntry] = {e.name: e for e in [
    _e("discrete", discrete, ["n"], [(0, 50)]),
    _e("codiscrete", codiscrete, ["n"], [(1, 12)]),
    _e("cyclic_group", cyclic_group, ["n"], [(1, 60)]),
    _e("symmetric_group", symmetric_group, ["n"], [(1, 4)]),
    _e("idempotent_monoid", idempotent_monoid),
    _e("split_epi_category", split_epi_category),
    _e("chain", chain, ["n"], [(0, 40)]),
    _e("subsets_poset", subsets_poset, ["n"], [(0, 6)]),
    _e("boolean_lattice", boolean_lattice, ["n"], [(0, 6)]),
    _e("divisor_lattice", divisor_lattice, ["n"], [(1, 10_000)]),
    _e("delta_inj", delta_inj, ["N"], [(0, 8)]),
    _e("delta_surj", delta_surj, ["N"], [(0, 8)]),
    _e("fin_sets", fin_sets, ["N"], [(1, 4)]),
    _e("sphere_poset", sphere_poset, ["n"], [(-1, 12)]),
    _e("pushout_shape", pushout_shape),
    _e("parallel_pair", parallel_pair),
    _e("no_weighting_example", no_weighting_example),
    _e("terminal", terminal),
    _e("empty", empty),
]}


def _check_params(entry: CatalogEntry, params: Sequence[int]) -> None:
    if len(params) != len(entry.params):
        raise ParamOutOfRange(f"{entry.name} takes {len(entry.params)} parameter(s) {list(entry.params)}")
    for p, nm, (lo, hi) in zip(params, entry.params, entry.ranges):
        if not lo <= p <= hi:
            raise ParamOutOfRange(f"{entry.name}: {nm} = {p} outside [{lo}, {hi}]")


def build(name: str, *params: int) -> FinCat:
    """Catalog lookup; ``monoid`` takes n followed by the n*n table."""
    if name == "monoid":
        if not params:
            raise ParamOutOfRange("monoid takes n followed by n*n table entries")
        n = params[0]
        flat = params[1:]
        if len(flat) != n * n or any(not 0 <= v < n for v in flat):
            raise ParamOutOfRange("monoid table must have n*n entries in 0..n-1")
        return monoid([list(flat[i * n:(i + 1) * n]) for i in range(n)])
    if name not in CATALOG:
        raise UnknownName(f"no catalog category named {name!r}")
    entry = CATALOG[name]
    _check_params(entry, params)
    return entry.construct(*params)


# ---------------------------------------------------------------- functors

def _perm_name(p: Sequence[int]) -> str:
    return "p" + _digits(p)


def symmetric_action(N: int) -> SetFunctor:
    """On Dinj(N): S(n) is the permutations of {1..n}; an injection f sends
    tau to the permutation acting as tau on im f and fixing the rest."""
    D = delta_inj(N)
    sets = {str(n): tuple(_perm_name(p) for p in itertools.permutations(range(1, n + 1))) for n in range(N + 1)}
    acts = {}
    for a in D.arrows:
        m, n = int(a.source), int(a.target)
        img = tuple(range(1, m + 1)) if D.is_identity(a.id) else tuple(int(c) for c in a.id.split("[")[1][:-1])
        table = {}
        for tau in itertools.permutations(range(1, m + 1)):
            sigma = list(range(1, n + 1))
            for i in range(m):
                sigma[img[i] - 1] = img[tau[i] - 1]
            table[_perm_name(tau)] = _perm_name(sigma)
        acts[a.id] = table
    return set_functor(D, sets, acts, check=N <= 4)


def group_action(G: FinCat, elements: Sequence[str], action: Mapping[str, Mapping[str, str]]) -> SetFunctor:
    """A finite G-set; ``action[g]`` is the permutation of ``elements`` by g."""
    return set_functor(G, {G.objects[0]: tuple(elements)}, action)


def cyclic_action(n: int, m: int, copies: int = 1) -> SetFunctor:
    """Z/n acting on ``copies`` disjoint copies of Z/m by rotation (m | n).
    Free exactly when m = n."""
    if m < 1 or n % m:
        raise ParamOutOfRange("cyclic_action needs m dividing n")
    G = cyclic_group(n)
    els = [f"c{c}r{r}" for c in range(copies) for r in range(m)]
    action = {}
    for k, g in enumerate(G.arrow_ids):
        action[g] = {f"c{c}r{r}": f"c{c}r{(r + k) % m}" for c in range(copies) for r in range(m)}
    return group_action(G, els, action)


def intersection_diagram(sets: Sequence[Sequence[str]]) -> SetFunctor:
    """On P_n^op: J |-> intersection of S_j for j in J, maps are inclusions."""
    n = len(sets)
    P = subsets_poset(n)
    Pop = opposite(P)
    subs = {_subset_name(c): c for k in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), k)}
    vals = {}
    for nm, J in subs.items():
        common = set(sets[J[0] - 1])
        for j in J[1:]:
            common &= set(sets[j - 1])
        vals[nm] = tuple(sorted(common))
    acts = {a.id: {x: x for x in vals[a.source]} for a in Pop.arrows}
    return set_functor(Pop, vals, acts)


def pushout_data(xa: Sequence[str], xb1: Sequence[str], xb2: Sequence[str],
                 f1: Mapping[str, str], f2: Mapping[str, str]) -> SetFunctor:
    L = pushout_shape()
    return set_functor(L, {"a": xa, "b1": xb1, "b2": xb2}, {"f1": f1, "f2": f2})


def parallel_pair_data(xa: Sequence[str], xb: Sequence[str], f: Mapping[str, str], g: Mapping[str, str]) -> SetFunctor:
    B = parallel_pair()
    return set_functor(B, {"a": xa, "b": xb}, {"f": f, "g": g})


def _to_terminal(C: FinCat) -> Functor:
    T = terminal()
    return Functor(C, T, {x: "*" for x in C.objects}, {f: "id_*" for f in C.arrow_ids})


def sphere_diagram(n: int) -> CatFunctor:
    """X: L -> Cat with Xa = S^(n-1) and Xb1 = Xb2 = 1; elt(X) is S^n."""
    L = pushout_shape()
    S = sphere_poset(n - 1)
    T = terminal()
    cats = {"a": S, "b1": T, "b2": T}
    return cat_functor(L, cats, {"f1": _to_terminal(S), "f2": _to_terminal(S)})


def weak_quotient_diagram(n: int, m: int, copies: int = 1) -> SetFunctor:
    """The Z/n-set of :func:`cyclic_action`; its elt is the weak quotient S//M."""
    return cyclic_action(n, m, copies)


@dataclass(frozen=True)
class FunctorEntry:
    name: str
    params: tuple
    ranges: tuple
    construct: Callable


FUNCTOR_CATALOG: dict[str, FunctorEntry] = {e.name: e for e in [
    FunctorEntry("symmetric_action", ("N",), ((0, 7),), symmetric_action),
    FunctorEntry("cyclic_action", ("n", "m", "copies"), ((1, 60), (1, 60), (1, 20)), cyclic_action),
]}


def build_functor(name: str, *params) -> SetFunctor:
    """Catalog functors.  ``intersection_diagram`` takes set sizes as
    alternating (start, stop) integer ranges; ``pushout_data`` and
    ``group_action`` are Python-level (see their functions)."""
    if name == "intersection_diagram":
        if len(params) % 2:
            raise ParamOutOfRange("intersection_diagram takes (start, stop) pairs")
        sets = [[str(i) for i in range(params[k], params[k + 1])] for k in range(0, len(params), 2)]
        return intersection_diagram(sets)
    if name not in FUNCTOR_CATALOG:
        raise UnknownName(f"no catalog functor named {name!r}")
    e = FUNCTOR_CATALOG[name]
    if len(params) != len(e.params) or any(not lo <= p <= hi for p, (lo, hi) in zip(params, e.ranges)):
        raise ParamOutOfRange(f"{name} takes {list(e.params)} within {list(e.ranges)}")
    return e.construct(*params)


# ------------------------------------------------------------------ graphs

def random_dag(n_vertices: int, n_edges: int, rng: random.Random) -> DirectedGraph:
    """Random circuit-free multigraph: edges go forward in a shuffled order."""
    order = [f"v{i}" for i in range(n_vertices)]
    rng.shuffle(order)
    pos = {v: i for i, v in enumerate(order)}
    edges = []
    if n_vertices >= 2:
        for k in range(n_edges):
            s, t = rng.sample(order, 2)
            if pos[s] > pos[t]:
                s, t = t, s
            edges.append((f"e{k}", s, t))
    return DirectedGraph(tuple(sorted(order, key=lambda v: int(v[1:]))), tuple(edges))


def monotone_maps(P: FinCat) -> list[dict]:
    """All order-preserving self-maps of a finite poset, by backtracking."""
    els = list(P.objects)
    leq = {(a.source, a.target) for a in P.arrows}
    out: list[dict] = []
    current: dict = {}

    def rec(i):
        if i == len(els):
            out.append(dict(current))
            return
        x = els[i]
        for y in els:
            if all(((w, x) not in leq or (current[w], y) in leq) and ((x, w) not in leq or (y, current[w]) in leq)
                   for w in els[:i]):
                current[x] = y
                rec(i + 1)
        current.pop(x, None)

    rec(0)
    return out


def posets_up_to_iso(n: int) -> list[FinCat]:
    """All posets on n elements up to isomorphism (n <= 5 is quick)."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    result = []
    perms = list(itertools.permutations(range(n)))
    for mask in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
        if any((i, j) in rel and (j, k) in rel and (i, k) not in rel
               for i in range(n) for j in range(n) for k in range(n)):
            continue
        canon = min(tuple(sorted((p[i], p[j]) for i, j in rel)) for p in perms)
        if canon in seen:
            continue
        seen.add(canon)
        els = [str(i) for i in range(n)]
        leq = {(str(i), str(i)) for i in range(n)} | {(str(i), str(j)) for i, j in rel}
        result.append(thin_category(f"poset{n}#{len(result)}", els, leq))
    return result

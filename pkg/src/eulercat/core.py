"""Finite categories as explicit composition tables, plus constructions on them.

Object and arrow identifiers are strings without whitespace, commas or
colons (so that they survive the text format).  The declared order of
``objects`` is the indexing of every matrix computed from a category.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .errors import (CyclicGraph, InvalidCategory, NotFunctorial, SizeOverflow,
                     SubcategoryNotClosed)

DEFAULT_ARROW_CAP = 20_000


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Violation:
    kind: str
    cells: tuple
    message: str

    def __str__(self):
        return f"{self.kind}{self.cells}: {self.message}"


@dataclass(frozen=True, eq=True)
class FinCat:
    """A finite category given by its full composition table.

    ``composition[(g, f)]`` is ``g . f`` and is defined exactly when
    ``target(f) == source(g)``.
    """

    name: str
    objects: tuple
    arrows: tuple
    identities: Mapping[str, str]
    composition: Mapping[tuple, str] = field(repr=False)

    __hash__ = None  # type: ignore[assignment]

    @cached_property
    def _arrow(self) -> dict:
        return {a.id: a for a in self.arrows}

    @cached_property
    def object_index(self) -> dict:
        return {x: i for i, x in enumerate(self.objects)}

    @cached_property
    def arrow_index(self) -> dict:
        return {a.id: i for i, a in enumerate(self.arrows)}

    @cached_property
    def _homs(self) -> dict:
        h: dict = {}
        for a in self.arrows:
            h.setdefault((a.source, a.target), []).append(a.id)
        return {k: tuple(v) for k, v in h.items()}

    @cached_property
    def _out(self) -> dict:
        d: dict = {x: [] for x in self.objects}
        for a in self.arrows:
            d[a.source].append(a.id)
        return {k: tuple(v) for k, v in d.items()}

    @cached_property
    def _in(self) -> dict:
        d: dict = {x: [] for x in self.objects}
        for a in self.arrows:
            d[a.target].append(a.id)
        return {k: tuple(v) for k, v in d.items()}

    @cached_property
    def _identity_set(self) -> frozenset:
        return frozenset(self.identities.values())

    def arrow(self, f: str) -> Arrow:
        return self._arrow[f]

    def source(self, f: str) -> str:
        return self._arrow[f].source

    def target(self, f: str) -> str:
        return self._arrow[f].target

    def identity(self, x: str) -> str:
        return self.identities[x]

    def is_identity(self, f: str) -> bool:
        return f in self._identity_set

    def compose(self, g: str, f: str) -> str:
        return self.composition[(g, f)]

    def compose_path(self, *fs: str) -> str:
        """``compose_path(f1, f2, f3)`` is ``f3 . f2 . f1`` (diagrammatic order)."""
        out = fs[0]
        for g in fs[1:]:
            out = self.composition[(g, out)]
        return out

    def hom(self, a: str, b: str) -> tuple:
        return self._homs.get((a, b), ())

    def out_arrows(self, a: str) -> tuple:
        return self._out[a]

    def in_arrows(self, a: str) -> tuple:
        return self._in[a]

    def endos(self, a: str) -> tuple:
        return self.hom(a, a)

    def zeta_counts(self) -> list[list[int]]:
        return [[len(self.hom(a, b)) for b in self.objects] for a in self.objects]

    @property
    def arrow_ids(self) -> tuple:
        return tuple(a.id for a in self.arrows)

    def __repr__(self) -> str:
        return f"FinCat({self.name!r}, {len(self.objects)} objects, {len(self.arrows)} arrows)"

    def same_table(self, other: "FinCat") -> bool:
        """Equality of everything except the name."""
        return (self.objects == other.objects and self.arrows == other.arrows
                and dict(self.identities) == dict(other.identities)
                and dict(self.composition) == dict(other.composition))

    def renamed(self, name: str) -> "FinCat":
        return FinCat(name, self.objects, self.arrows, self.identities, self.composition)


# ---------------------------------------------------------------- validation

def _check_ident(s) -> bool:
    return isinstance(s, str) and s != "" and not any(c in s for c in " \t\n,:#")


def check_laws(name, objects, arrows, identities, composition) -> list[Violation]:
    """List every violated category law.  Empty list means valid."""
    vs: list[Violation] = []
    objs = list(objects)
    objset = set(objs)
    if len(objset) != len(objs):
        dup = sorted({x for x in objs if objs.count(x) > 1})
        vs.append(Violation("DuplicateId", tuple(dup), "object identifiers repeated"))
    for x in objs:
        if not _check_ident(x):
            vs.append(Violation("BadIdentifier", (x,), "identifiers must be nonempty without spaces, commas, colons"))
    src: dict = {}
    tgt: dict = {}
    for a in arrows:
        if a.id in src:
            vs.append(Violation("DuplicateId", (a.id,), "arrow identifier repeated"))
        if not _check_ident(a.id):
            vs.append(Violation("BadIdentifier", (a.id,), "identifiers must be nonempty without spaces, commas, colons"))
        if a.source not in objset or a.target not in objset:
            vs.append(Violation("DanglingEndpoint", (a.id,), f"{a.source} -> {a.target} names an undeclared object"))
        src[a.id] = a.source
        tgt[a.id] = a.target
    if vs:
        return vs
    for x in objs:
        i = identities.get(x)
        if i is None or i not in src:
            vs.append(Violation("BadIdentity", (x,), "no identity arrow"))
        elif src[i] != x or tgt[i] != x:
            vs.append(Violation("BadIdentity", (x,), f"identity {i} is not an endomorphism of {x}"))
    for x in identities:
        if x not in objset:
            vs.append(Violation("DanglingEndpoint", (x,), "identity declared for an undeclared object"))
    if vs:
        return vs
    out: dict = {x: [] for x in objs}
    for a in arrows:
        out[a.source].append(a.id)
    for (g, f), h in composition.items():
        if g not in src or f not in src:
            vs.append(Violation("BadComposite", (g, f), "composite of undeclared arrows"))
        elif tgt[f] != src[g]:
            vs.append(Violation("BadComposite", (g, f), "composite defined for a non-composable pair"))
        elif h not in src:
            vs.append(Violation("BadComposite", (g, f), f"composite {h} is not a declared arrow"))
        elif src[h] != src[f] or tgt[h] != tgt[g]:
            vs.append(Violation("BadComposite", (g, f), f"{g} . {f} = {h} has the wrong endpoints"))
    for a in arrows:
        f = a.id
        for g in out[a.target]:
            if (g, f) not in composition:
                vs.append(Violation("MissingComposite", (g, f), "composite undefined"))
    if vs:
        return vs
    for a in arrows:
        f = a.id
        if composition[(f, identities[a.source])] != f:
            vs.append(Violation("BadIdentity", (a.source, f), f"{f} . id != {f}"))
        if composition[(identities[a.target], f)] != f:
            vs.append(Violation("BadIdentity", (a.target, f), f"id . {f} != {f}"))
    if vs:
        return vs
    comp = composition
    for a in arrows:
        f = a.id
        for g in out[a.target]:
            gf = comp[(g, f)]
            for h in out[tgt[g]]:
                if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                    vs.append(Violation("NonAssociative", (f, g, h), "h.(g.f) != (h.g).f"))
    return vs


def make_category(name: str, objects: Sequence[str], arrows: Iterable, composition: Mapping,
                  identities: Mapping | None = None, check: bool = True) -> FinCat:
    """Assemble a :class:`FinCat`, filling in composites with identities.

    ``arrows`` holds :class:`Arrow` records or ``(id, src, tgt)`` triples.
    Identity arrows named ``id_<x>`` are created (first, in object order)
    for objects without a declared identity.
    """
    objects = tuple(objects)
    arrows = [a if isinstance(a, Arrow) else Arrow(*a) for a in arrows]
    idents = dict(identities or {})
    ids = {a.id for a in arrows}
    pre = []
    for x in objects:
        if x not in idents:
            if f"id_{x}" in ids:
                idents[x] = f"id_{x}"
            else:
                pre.append(Arrow(f"id_{x}", x, x))
                idents[x] = f"id_{x}"
    arrows = pre + arrows
    comp = dict(composition)
    for a in arrows:
        i0 = idents.get(a.source)
        i1 = idents.get(a.target)
        if i0 is not None:
            comp.setdefault((a.id, i0), a.id)
        if i1 is not None:
            comp.setdefault((i1, a.id), a.id)
    if check:
        vs = check_laws(name, objects, arrows, idents, comp)
        if vs:
            raise InvalidCategory(vs)
    return FinCat(name, objects, tuple(arrows), idents, comp)


def validate_category(raw) -> FinCat:
    """Validate a raw description and return the category.

    ``raw`` may be a :class:`FinCat` (re-checked) or a mapping with keys
    ``name``, ``objects``, ``arrows``, ``composition`` and optionally
    ``identities``.  Raises :class:`InvalidCategory` listing every violation.
    """
    if isinstance(raw, FinCat):
        vs = check_laws(raw.name, raw.objects, raw.arrows, raw.identities, raw.composition)
        if vs:
            raise InvalidCategory(vs)
        return raw
    return make_category(raw.get("name", "C"), raw["objects"], raw["arrows"], raw.get("composition", {}),
                         raw.get("identities"), check=True)


def category_report(raw) -> list[Violation]:
    try:
        validate_category(raw)
    except InvalidCategory as e:
        return e.violations
    return []


# ------------------------------------------------------------- structure

@dataclass(frozen=True)
class StructuralProfile:
    is_skeletal: bool
    idempotents_are_identities: bool
    endos_are_autos: bool
    is_circuit_free: bool
    is_cauchy_complete: bool
    aut_orders: Mapping[str, int]
    only_identity_endos: bool
    witnesses: Mapping[str, tuple] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "is_skeletal": self.is_skeletal,
            "idempotents_are_identities": self.idempotents_are_identities,
            "endos_are_autos": self.endos_are_autos,
            "is_circuit_free": self.is_circuit_free,
            "is_cauchy_complete": self.is_cauchy_complete,
            "only_identity_endos": self.only_identity_endos,
            "aut_orders": dict(self.aut_orders),
        }


def automorphisms(C: FinCat, a: str) -> tuple:
    ida = C.identity(a)
    E = C.endos(a)
    return tuple(e for e in E if any(C.compose(g, e) == ida and C.compose(e, g) == ida for g in E))


def idempotents(C: FinCat) -> tuple:
    return tuple(e for x in C.objects for e in C.endos(x) if C.compose(e, e) == e)


def find_isomorphism(C: FinCat, a: str, b: str):
    """Some ``(f, g)`` with ``f: a -> b``, ``g . f = id``, ``f . g = id``, or None."""
    ia, ib = C.identity(a), C.identity(b)
    for f in C.hom(a, b):
        for g in C.hom(b, a):
            if C.compose(g, f) == ia and C.compose(f, g) == ib:
                return f, g
    return None


def splitting(C: FinCat, e: str):
    """``(b, s, i)`` with ``s: a -> b``, ``i: b -> a``, ``s.i = id_b``, ``i.s = e``; or None."""
    a = C.source(e)
    for b in C.objects:
        ib = C.identity(b)
        for s in C.hom(a, b):
            for i in C.hom(b, a):
                if C.compose(s, i) == ib and C.compose(i, s) == e:
                    return b, s, i
    return None


def reachability_graph(C: FinCat) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(C.objects)
    for a in C.arrows:
        if a.source != a.target:
            G.add_edge(a.source, a.target)
    return G


def structural_profile(C: FinCat) -> StructuralProfile:
    """Exhaustive structural checks: skeletality, idempotents, circuits, splittings."""
    wit: dict = {}
    skeletal = True
    for a, b in itertools.combinations(C.objects, 2):
        iso = find_isomorphism(C, a, b)
        if iso is not None:
            skeletal = False
            wit["isomorphism"] = (a, b) + iso
            break
    idem = idempotents(C)
    bad_idem = [e for e in idem if not C.is_identity(e)]
    auts = {x: automorphisms(C, x) for x in C.objects}
    non_auto = [e for x in C.objects for e in C.endos(x) if e not in auts[x]]
    if bad_idem:
        wit["idempotent"] = (bad_idem[0],)
    if non_auto:
        wit["non_invertible_endo"] = (non_auto[0],)
    only_id = all(len(C.endos(x)) == 1 for x in C.objects)
    circuit_free = only_id and nx.is_directed_acyclic_graph(reachability_graph(C))
    unsplit = [e for e in idem if splitting(C, e) is None]
    if unsplit:
        wit["unsplit_idempotent"] = (unsplit[0],)
    return StructuralProfile(
        is_skeletal=skeletal,
        idempotents_are_identities=not bad_idem,
        endos_are_autos=not non_auto,
        is_circuit_free=circuit_free,
        is_cauchy_complete=not unsplit,
        aut_orders={x: len(auts[x]) for x in C.objects},
        only_identity_endos=only_id,
        witnesses=wit,
    )


def is_thin(C: FinCat) -> bool:
    return all(len(v) <= 1 for v in C._homs.values())


def is_poset(C: FinCat) -> bool:
    """Thin and skeletal."""
    if not is_thin(C):
        return False
    return not any(C.hom(a, b) and C.hom(b, a) for a, b in itertools.combinations(C.objects, 2))


def is_groupoid(C: FinCat) -> bool:
    for a in C.arrows:
        if not any(C.compose(g, a.id) == C.identity(a.source) and C.compose(a.id, g) == C.identity(a.target)
                   for g in C.hom(a.target, a.source)):
            return False
    return True


def epimorphisms(C: FinCat) -> tuple:
    """Arrows e with g.e = h.e  =>  g = h, checked exhaustively."""
    out = []
    for a in C.arrows:
        e = a.id
        ok = True
        for c in C.objects:
            seen = {}
            for g in C.hom(a.target, c):
                ge = C.compose(g, e)
                if ge in seen:
                    ok = False
                    break
                seen[ge] = g
            if not ok:
                break
        if ok:
            out.append(e)
    return tuple(out)


def monomorphisms(C: FinCat) -> tuple:
    """Arrows m with m.g = m.h  =>  g = h, checked exhaustively."""
    out = []
    for a in C.arrows:
        m = a.id
        ok = True
        for c in C.objects:
            seen = set()
            for g in C.hom(c, a.source):
                mg = C.compose(m, g)
                if mg in seen:
                    ok = False
                    break
                seen.add(mg)
            if not ok:
                break
        if ok:
            out.append(m)
    return tuple(out)


# ----------------------------------------------------------- constructions

def _op_name(name: str) -> str:
    return name[:-3] if name.endswith("^op") else name + "^op"


def opposite(C: FinCat) -> FinCat:
    """Same identifiers, sources and targets swapped, composition transposed."""
    arrows = tuple(Arrow(a.id, a.target, a.source) for a in C.arrows)
    comp = {(f, g): h for (g, f), h in C.composition.items()}
    return FinCat(_op_name(C.name), C.objects, arrows, dict(C.identities), comp)


def full_subcategory(C: FinCat, objects: Iterable[str], name: str | None = None) -> FinCat:
    keep = set(objects)
    objs = tuple(x for x in C.objects if x in keep)
    arrows = tuple(a for a in C.arrows if a.source in keep and a.target in keep)
    comp = {(g, f): h for (g, f), h in C.composition.items()
            if C.source(f) in keep and C.target(f) in keep and C.target(g) in keep}
    ids = {x: C.identity(x) for x in objs}
    return FinCat(name or f"{C.name}|{{{'-'.join(objs)}}}", objs, arrows, ids, comp)


def subcategory(C: FinCat, arrows: Iterable[str], name: str | None = None) -> FinCat:
    """Wide subcategory on the given arrows; they must contain all identities
    and be closed under composition."""
    keep = set(arrows)
    missing = [x for x in C.objects if C.identity(x) not in keep]
    if missing:
        raise SubcategoryNotClosed(f"identity of {missing[0]} is not in the arrow set")
    unknown = keep - set(C.arrow_ids)
    if unknown:
        raise SubcategoryNotClosed(f"unknown arrows {sorted(unknown)[:5]}")
    comp = {}
    for a in C.arrows:
        if a.id not in keep:
            continue
        for g in C.out_arrows(a.target):
            if g in keep:
                h = C.compose(g, a.id)
                if h not in keep:
                    raise SubcategoryNotClosed(f"{g} . {a.id} = {h} leaves the arrow set")
                comp[(g, a.id)] = h
    return FinCat(name or f"{C.name}[sub]", C.objects, tuple(a for a in C.arrows if a.id in keep),
                  dict(C.identities), comp)


def terminal_category(name: str = "1") -> FinCat:
    return make_category(name, ["*"], [], {}, check=False)


def empty_category(name: str = "0") -> FinCat:
    return FinCat(name, (), (), {}, {})


def sum_categories(cats: Sequence[FinCat], name: str | None = None) -> FinCat:
    """Disjoint union.  Identifiers are kept when they do not collide across
    summands; otherwise every identifier of summand i gets the prefix ``i.``."""
    cats = list(cats)
    seen: set = set()
    clash = False
    for C in cats:
        names = set(C.objects) | set(C.arrow_ids)
        if names & seen:
            clash = True
            break
        seen |= names
    objects, arrows, ids, comp = [], [], {}, {}
    for i, C in enumerate(cats):
        p = (lambda s, i=i: f"{i}.{s}") if clash else (lambda s: s)
        objects += [p(x) for x in C.objects]
        arrows += [Arrow(p(a.id), p(a.source), p(a.target)) for a in C.arrows]
        ids.update({p(x): p(f) for x, f in C.identities.items()})
        comp.update({(p(g), p(f)): p(h) for (g, f), h in C.composition.items()})
    nm = name or ("+".join(C.name for C in cats) if cats else "0")
    return FinCat(nm, tuple(objects), tuple(arrows), ids, comp)


def _tuple_id(parts: Sequence[str]) -> str:
    return "<" + "|".join(parts) + ">"


def product_categories(cats: Sequence[FinCat], name: str | None = None,
                       arrow_cap: int = DEFAULT_ARROW_CAP) -> FinCat:
    """Cartesian product; objects ``<a|b|...>``, arrows ``<f|g|...>``."""
    cats = list(cats)
    total = 1
    for C in cats:
        total *= len(C.arrows)
    if total > arrow_cap:
        raise SizeOverflow(f"product would have {total} arrows (cap {arrow_cap})")
    objects = tuple(_tuple_id(t) for t in itertools.product(*[C.objects for C in cats]))
    arrows = []
    amap = {}
    for t in itertools.product(*[C.arrows for C in cats]):
        aid = _tuple_id([a.id for a in t])
        amap[tuple(a.id for a in t)] = aid
        arrows.append(Arrow(aid, _tuple_id([a.source for a in t]), _tuple_id([a.target for a in t])))
    ids = {_tuple_id(t): _tuple_id([C.identity(x) for C, x in zip(cats, t)])
           for t in itertools.product(*[C.objects for C in cats])}
    comp = {}
    for ft in amap:
        tg = [C.target(f) for C, f in zip(cats, ft)]
        for gt in itertools.product(*[C.out_arrows(x) for C, x in zip(cats, tg)]):
            h = tuple(C.compose(g, f) for C, g, f in zip(cats, gt, ft))
            comp[(amap[gt], amap[ft])] = amap[h]
    nm = name or ("x".join(C.name for C in cats) if cats else "1")
    return FinCat(nm, objects, tuple(arrows), ids, comp)


def interval(C: FinCat, a: str, c: str) -> FinCat:
    """Full subcategory on the objects b admitting arrows a -> b -> c."""
    objs = [b for b in C.objects if C.hom(a, b) and C.hom(b, c)]
    return full_subcategory(C, objs, name=f"{C.name}[{a},{c}]")


def _fresh(base: str, taken: set) -> str:
    s = base
    while s in taken:
        s += "'"
    return s


def adjoin_bounds(C: FinCat, initial: bool = True, terminal: bool = True,
                  bottom: str = "bot", top: str = "top") -> FinCat:
    """Freely adjoin a new initial object and/or a new terminal object.

    New arrows are named ``bot>x`` and ``x>top``; object order is
    bottom, the old objects, top.
    """
    taken = set(C.objects) | set(C.arrow_ids)
    bot = _fresh(bottom, taken) if initial else None
    top_ = _fresh(top, taken | {bot}) if terminal else None
    old = list(C.objects)
    objects = ([bot] if initial else []) + old + ([top_] if terminal else [])
    ids = dict(C.identities)
    head: list = []
    tail: list = []
    if initial:
        ids[bot] = _fresh(f"id_{bot}", taken)
        head = [Arrow(ids[bot], bot, bot)] + [Arrow(f"{bot}>{x}", bot, x) for x in objects[1:]]
    if terminal:
        ids[top_] = _fresh(f"id_{top_}", taken)
        tail = [Arrow(f"{x}>{top_}", x, top_) for x in old] + [Arrow(ids[top_], top_, top_)]
    arrows = head + list(C.arrows) + tail
    tgt = {a.id: a.target for a in arrows}
    out: dict = {x: [] for x in objects}
    for a in arrows:
        out[a.source].append(a.id)
    comp = dict(C.composition)
    for a in arrows:
        s = a.source
        for g in out[a.target]:
            key = (g, a.id)
            if key in comp:
                continue
            t = tgt[g]
            if a.id == ids[s]:
                comp[key] = g
            elif g == ids[t]:
                comp[key] = a.id
            elif initial and s == bot:
                comp[key] = f"{bot}>{t}"
            else:
                comp[key] = f"{s}>{top_}"
    if initial and terminal:
        name = f"{C.name}~"
    else:
        name = f"{C.name}_0" if initial else f"{C.name}_1"
    return FinCat(name, tuple(objects), tuple(arrows), ids, comp)


# ------------------------------------------------------------ profunctors

@dataclass(frozen=True)
class Profunctor:
    """``M: B^op x A -> Set``.

    ``elements[(b, a)]`` is M(b, a).  ``left[(beta, a)]`` maps M(b, a) to
    M(b', a) for ``beta: b' -> b`` in B; ``right[(b, alpha)]`` maps M(b, a)
    to M(b, a') for ``alpha: a -> a'`` in A.  Missing action entries are
    filled in when forced (identities, or a one-element target set).
    """

    left_cat: FinCat
    right_cat: FinCat
    elements: Mapping[tuple, tuple]
    left: Mapping[tuple, Mapping] = field(default_factory=dict)
    right: Mapping[tuple, Mapping] = field(default_factory=dict)

    __hash__ = None  # type: ignore[assignment]

    def M(self, b, a) -> tuple:
        return tuple(self.elements.get((b, a), ()))

    def act_left(self, beta, a, m):
        B = self.left_cat
        if B.is_identity(beta):
            return m
        tbl = self.left.get((beta, a))
        if tbl is not None and m in tbl:
            return tbl[m]
        tgt = self.M(B.source(beta), a)
        if len(tgt) == 1:
            return tgt[0]
        raise NotFunctorial(f"left action of {beta} on {m} at {a} is not given", (beta, a, m))

    def act_right(self, b, alpha, m):
        A = self.right_cat
        if A.is_identity(alpha):
            return m
        tbl = self.right.get((b, alpha))
        if tbl is not None and m in tbl:
            return tbl[m]
        tgt = self.M(b, A.target(alpha))
        if len(tgt) == 1:
            return tgt[0]
        raise NotFunctorial(f"right action of {alpha} on {m} at {b} is not given", (b, alpha, m))


def validate_profunctor(P: Profunctor) -> Profunctor:
    """Check that both actions are functorial and commute."""
    B, A = P.left_cat, P.right_cat
    for b in B.objects:
        for a in A.objects:
            for m in P.M(b, a):
                for beta in B.in_arrows(b):
                    m1 = P.act_left(beta, a, m)
                    if m1 not in P.M(B.source(beta), a):
                        raise NotFunctorial(f"left action of {beta} leaves M({B.source(beta)},{a})", (beta, m))
                    for beta2 in B.in_arrows(B.source(beta)):
                        if P.act_left(beta2, a, m1) != P.act_left(B.compose(beta, beta2), a, m):
                            raise NotFunctorial(f"left action not functorial at {beta}, {beta2}", (beta, beta2))
                    for alpha in A.out_arrows(a):
                        if P.act_right(B.source(beta), alpha, m1) != P.act_left(beta, A.target(alpha),
                                                                               P.act_right(b, alpha, m)):
                            raise NotFunctorial(f"actions of {beta} and {alpha} do not commute", (beta, alpha))
                for alpha in A.out_arrows(a):
                    m1 = P.act_right(b, alpha, m)
                    if m1 not in P.M(b, A.target(alpha)):
                        raise NotFunctorial(f"right action of {alpha} leaves M({b},{A.target(alpha)})", (alpha, m))
                    for alpha2 in A.out_arrows(A.target(alpha)):
                        if P.act_right(b, alpha2, m1) != P.act_right(b, A.compose(alpha2, alpha), m):
                            raise NotFunctorial(f"right action not functorial at {alpha}, {alpha2}", (alpha, alpha2))
    return P


def collage(P: Profunctor, arrow_cap: int = DEFAULT_ARROW_CAP) -> FinCat:
    """B and A side by side plus one arrow ``m@b>a: b -> a`` per element m of M(b, a)."""
    B, A = P.left_cat, P.right_cat
    base = sum_categories([B, A])
    clash = base.objects[:len(B.objects)] != B.objects or base.objects[len(B.objects):] != A.objects
    pb = (lambda s: f"0.{s}") if clash else (lambda s: s)
    pa = (lambda s: f"1.{s}") if clash else (lambda s: s)
    cross = []
    name_of = {}
    for b in B.objects:
        for a in A.objects:
            for m in P.M(b, a):
                cid = f"{m}@{pb(b)}>{pa(a)}"
                name_of[(b, a, m)] = cid
                cross.append(Arrow(cid, pb(b), pa(a)))
    if len(base.arrows) + len(cross) > arrow_cap:
        raise SizeOverflow(f"collage would have {len(base.arrows) + len(cross)} arrows (cap {arrow_cap})")
    comp = dict(base.composition)
    for (b, a, m), cid in name_of.items():
        for beta in B.in_arrows(b):
            comp[(cid, pb(beta))] = name_of[(B.source(beta), a, P.act_left(beta, a, m))]
        for alpha in A.out_arrows(a):
            comp[(pa(alpha), cid)] = name_of[(b, A.target(alpha), P.act_right(b, alpha, m))]
    return FinCat(f"coll({B.name},{A.name})", base.objects, base.arrows + tuple(cross),
                  dict(base.identities), comp)


def constant_profunctor(B: FinCat, A: FinCat, element: str = "*") -> Profunctor:
    return Profunctor(B, A, {(b, a): (element,) for b in B.objects for a in A.objects})


def functor_profunctor(F: "Functor") -> Profunctor:
    """M(b, a) = A(Fb, a), acted on by F(beta) on the left and by
    composition on the right."""
    B, A = F.source, F.target
    elements = {(b, a): A.hom(F.ob(b), a) for b in B.objects for a in A.objects}
    left = {(beta, a): {m: A.compose(m, F.ar(beta)) for m in elements[(B.target(beta), a)]}
            for beta in B.arrow_ids for a in A.objects}
    right = {(b, alpha): {m: A.compose(alpha, m) for m in elements[(b, A.source(alpha))]}
             for b in B.objects for alpha in A.arrow_ids}
    return validate_profunctor(Profunctor(B, A, elements, left, right))


# ---------------------------------------------------------------- graphs

@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple
    edges: tuple  # of (edge id, source, target)

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise InvalidCategory([Violation("DuplicateId", (), "vertex identifiers repeated")])
        eids = [e[0] for e in self.edges]
        if len(set(eids)) != len(eids):
            raise InvalidCategory([Violation("DuplicateId", (), "edge identifiers repeated")])
        for e, s, t in self.edges:
            if s not in vs or t not in vs:
                raise InvalidCategory([Violation("DanglingEndpoint", (e,), f"{s} -> {t}")])

    def to_networkx(self) -> nx.MultiDiGraph:
        G = nx.MultiDiGraph()
        G.add_nodes_from(self.vertices)
        for e, s, t in self.edges:
            G.add_edge(s, t, key=e)
        return G


def free_category(G: DirectedGraph, arrow_cap: int = DEFAULT_ARROW_CAP, name: str = "F(G)") -> FinCat:
    """Paths as arrows (edge ids joined by ``;`` in travel order)."""
    NG = G.to_networkx()
    try:
        cyc = nx.find_cycle(NG)
    except nx.NetworkXNoCycle:
        cyc = None
    if cyc is not None:
        raise CyclicGraph([c[2] if len(c) > 2 else c for c in cyc])
    out: dict = {v: [] for v in G.vertices}
    for e, s, t in G.edges:
        out[s].append((e, t))
    paths = []  # (edge tuple, src, tgt)
    count = 0
    for v in G.vertices:
        stack = [((), v)]
        while stack:
            p, at = stack.pop()
            if p:
                paths.append((p, v, at))
                count += 1
                if count + len(G.vertices) > arrow_cap:
                    raise SizeOverflow(f"free category exceeds {arrow_cap} arrows")
            for e, t in reversed(out[at]):
                stack.append((p + (e,), t))
    paths.sort(key=lambda x: (G.vertices.index(x[1]), len(x[0]), x[0]))
    ids = {v: f"id_{v}" for v in G.vertices}
    arrows = [Arrow(ids[v], v, v) for v in G.vertices] + [Arrow(";".join(p), s, t) for p, s, t in paths]
    path_of = {ids[v]: () for v in G.vertices}
    path_of.update({";".join(p): p for p, s, t in paths})
    by_path = {(p, s): a.id for (p, s), a in zip([((), v) for v in G.vertices] + [(p, s) for p, s, _ in paths],
                                                  arrows)}
    src = {a.id: a.source for a in arrows}
    outa: dict = {v: [] for v in G.vertices}
    for a in arrows:
        outa[a.source].append(a)
    comp = {}
    for a in arrows:
        for g in outa[a.target]:
            comp[(g.id, a.id)] = by_path[(path_of[a.id] + path_of[g.id], src[a.id])]
    return FinCat(name, tuple(G.vertices), tuple(arrows), ids, comp)


# --------------------------------------------------------------- functors

@dataclass(frozen=True)
class Functor:
    """A functor between finite categories given by its object and arrow maps."""

    source: FinCat
    target: FinCat
    object_map: Mapping[str, str]
    arrow_map: Mapping[str, str]

    __hash__ = None  # type: ignore[assignment]

    def __call__(self, x: str) -> str:
        if x in self.arrow_map:
            return self.arrow_map[x]
        return self.object_map[x]

    def ob(self, x: str) -> str:
        return self.object_map[x]

    def ar(self, f: str) -> str:
        return self.arrow_map[f]


def functor_from_object_map(A: FinCat, B: FinCat, object_map: Mapping[str, str],
                            arrow_map: Mapping[str, str] | None = None) -> Functor:
    """Complete an arrow map where each target hom-set has one element
    (always the case when B is thin)."""
    amap = dict(arrow_map or {})
    for a in A.arrows:
        if a.id in amap:
            continue
        if A.is_identity(a.id):
            amap[a.id] = B.identity(object_map[a.source])
            continue
        hom = B.hom(object_map[a.source], object_map[a.target])
        if len(hom) != 1:
            raise NotFunctorial(f"arrow {a.id} has {len(hom)} candidate images; give it explicitly", (a.id,))
        amap[a.id] = hom[0]
    return check_functor(Functor(A, B, dict(object_map), amap))


def check_functor(F: Functor) -> Functor:
    A, B = F.source, F.target
    for x in A.objects:
        if x not in F.object_map or F.object_map[x] not in B.object_index:
            raise NotFunctorial(f"object {x} has no valid image", (x,))
    for a in A.arrows:
        fa = F.arrow_map.get(a.id)
        if fa is None or fa not in B._arrow:
            raise NotFunctorial(f"arrow {a.id} has no valid image", (a.id,))
        if B.source(fa) != F.object_map[a.source] or B.target(fa) != F.object_map[a.target]:
            raise NotFunctorial(f"image of {a.id} has the wrong endpoints", (a.id,))
    for x in A.objects:
        if F.arrow_map[A.identity(x)] != B.identity(F.object_map[x]):
            raise NotFunctorial(f"identity of {x} not preserved", (A.identity(x),))
    for (g, f), h in A.composition.items():
        if B.compose(F.arrow_map[g], F.arrow_map[f]) != F.arrow_map[h]:
            raise NotFunctorial(f"composite {g} . {f} not preserved", (f, g))
    return F


def identity_functor(C: FinCat) -> Functor:
    return Functor(C, C, {x: x for x in C.objects}, {f: f for f in C.arrow_ids})


def compose_functors(G: Functor, F: Functor) -> Functor:
    """``G . F``."""
    return Functor(F.source, G.target, {x: G.ob(F.ob(x)) for x in F.source.objects},
                   {f: G.ar(F.ar(f)) for f in F.source.arrow_ids})


def isomorphism_classes(C: FinCat) -> list[tuple]:
    classes: list[list] = []
    for x in C.objects:
        for cl in classes:
            if find_isomorphism(C, cl[0], x) is not None:
                cl.append(x)
                break
        else:
            classes.append([x])
    return [tuple(c) for c in classes]

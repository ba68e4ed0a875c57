"""Endofunctors: strict fixed points, algebras, coalgebras, Lefschetz numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .core import (DEFAULT_ARROW_CAP, Arrow, FinCat, Functor, check_functor, compose_functors,
                   full_subcategory, functor_from_object_map, is_poset, subcategory)
from .errors import NotFunctorial, SizeOverflow
from .mobius import euler_characteristic

Endofunctor = Functor


def endofunctor(C: FinCat, object_map: Mapping[str, str], arrow_map: Mapping[str, str] | None = None) -> Functor:
    """Checked endofunctor; arrows may be omitted where the image is forced."""
    return functor_from_object_map(C, C, object_map, arrow_map)


def _require_endo(F: Functor) -> FinCat:
    if F.source is not F.target and not F.source.same_table(F.target):
        raise NotFunctorial("not an endofunctor: source and target differ", ())
    return F.source


def fixed_category(F: Functor) -> FinCat:
    C = _require_endo(F)
    objs = [x for x in C.objects if F.ob(x) == x]
    arrows = [a.id for a in C.arrows if F.ar(a.id) == a.id]
    # a fixed arrow has fixed endpoints, so the arrows live on objs
    return subcategory(full_subcategory(C, objs), arrows, name=f"Fix({C.name})")


def lefschetz_number(F: Functor):
    """chi(Fix F), or an ``Undefined`` value."""
    return euler_characteristic(fixed_category(F))


def fixed_path_count(F: Functor) -> int:
    """Alternating count of nondegenerate paths made of F-fixed arrows.

    A path is fixed by F exactly when each of its arrows is, so this counts
    fixed strings in the nerve.
    """
    C = _require_endo(F)
    from .mobius import nondegenerate_path_counts

    fixed = [a.id for a in C.arrows if F.ar(a.id) == a.id]
    fixed_objs = {x for x in C.objects if F.ob(x) == x}
    counts = nondegenerate_path_counts(full_subcategory(C, fixed_objs), fixed)
    return sum((-1) ** n * c for n, c in enumerate(counts))


def _structure_category(F: Functor, coalgebra: bool, arrow_cap: int) -> FinCat:
    C = _require_endo(F)
    kind = "Coalg" if coalgebra else "Alg"
    objs, carrier = [], {}
    for a in C.objects:
        hs = C.hom(a, F.ob(a)) if coalgebra else C.hom(F.ob(a), a)
        for h in hs:
            oid = f"{a}@{h}"
            objs.append(oid)
            carrier[oid] = (a, h)
    arrows, ids, info = [], {}, {}
    for x in objs:
        a, h = carrier[x]
        for y in objs:
            b, h2 = carrier[y]
            for f in C.hom(a, b):
                if coalgebra:
                    ok = C.compose(F.ar(f), h) == C.compose(h2, f)
                else:
                    ok = C.compose(h2, F.ar(f)) == C.compose(f, h)
                if not ok:
                    continue
                aid = f"{f}@{h}>{h2}"
                arrows.append(Arrow(aid, x, y))
                info[aid] = f
                if x == y and C.is_identity(f):
                    ids[x] = aid
                if len(arrows) > arrow_cap:
                    raise SizeOverflow(f"{kind} F exceeds {arrow_cap} arrows")
    by_key = {(a.source, a.target, info[a.id]): a.id for a in arrows}
    out: dict = {x: [] for x in objs}
    for a in arrows:
        out[a.source].append(a)
    comp = {}
    for a in arrows:
        for g in out[a.target]:
            comp[(g.id, a.id)] = by_key[(a.source, g.target, C.compose(info[g.id], info[a.id]))]
    return FinCat(f"{kind}({C.name})", tuple(objs), tuple(arrows), ids, comp)


def algebra_category(F: Functor, arrow_cap: int = DEFAULT_ARROW_CAP) -> FinCat:
    """Objects (a, h: Fa -> a); arrows f: a -> b with h' . Ff = f . h."""
    return _structure_category(F, False, arrow_cap)


def coalgebra_category(F: Functor, arrow_cap: int = DEFAULT_ARROW_CAP) -> FinCat:
    """Objects (a, h: a -> Fa); arrows f: a -> b with Ff . h = h' . f."""
    return _structure_category(F, True, arrow_cap)


def cyclicity_check(F: Functor, G: Functor) -> tuple:
    """(Λ(GF), Λ(FG)) together with a structural comparison of the two
    fixed categories: F and G restrict to mutually inverse isomorphisms
    Fix(GF) ⇄ Fix(FG)."""
    GF, FG = compose_functors(G, F), compose_functors(F, G)
    A, B = fixed_category(GF), fixed_category(FG)
    if sorted(F.ob(x) for x in A.objects) != sorted(B.objects):
        raise AssertionError("F does not carry Fix(GF) onto Fix(FG)")
    if sorted(F.ar(f) for f in A.arrow_ids) != sorted(B.arrow_ids):
        raise AssertionError("F does not carry the arrows of Fix(GF) onto Fix(FG)")
    return euler_characteristic(A), euler_characteristic(B)


# ------------------------------------------------- posets and monotone maps

def poset_leq(P: FinCat) -> set:
    return {(a.source, a.target) for a in P.arrows}


def monotone_endofunctor(P: FinCat, f: Mapping[str, str]) -> Functor:
    return functor_from_object_map(P, P, f)


def three_subposets(P: FinCat, f: Mapping[str, str]) -> tuple[FinCat, FinCat, FinCat]:
    """{f(a) <= a}, {f(a) = a}, {f(a) >= a} as full subposets."""
    if not is_poset(P):
        raise NotFunctorial("three_subposets needs a poset", ())
    leq = poset_leq(P)
    below = full_subcategory(P, [a for a in P.objects if (f[a], a) in leq])
    fixed = full_subcategory(P, [a for a in P.objects if f[a] == a])
    above = full_subcategory(P, [a for a in P.objects if (a, f[a]) in leq])
    return below, fixed, above


def check_identity_functor_number(C: FinCat) -> bool:
    from .core import identity_functor

    return lefschetz_number(check_functor(identity_functor(C))) == euler_characteristic(C)


class SubposetChi:
    """Memoized chi of the full subposets of a fixed poset, keyed by the
    set of objects kept (as a bitmask in object order)."""

    def __init__(self, P: FinCat):
        self.P = P
        self._cache: dict[int, Fraction] = {}

    def __call__(self, mask: int) -> Fraction:
        if mask not in self._cache:
            objs = [x for i, x in enumerate(self.P.objects) if mask >> i & 1]
            self._cache[mask] = euler_characteristic(full_subcategory(self.P, objs))
        return self._cache[mask]


@dataclass(frozen=True)
class SweepReport:
    poset: str
    maps: int
    pairs: int
    cyclicity_failures: int
    alg_coalg_failures: int


def monotone_sweep(P: FinCat, maps: list[dict] | None = None) -> SweepReport:
    """Every ordered pair (F, G) of monotone self-maps: compare Λ(GF) with
    Λ(FG).  Every single F: compare χ of {Fa <= a}, Fix F and {Fa >= a}.

    On a poset the fixed category of a monotone map is the full subposet
    of its fixed points, so each Λ is a chi of a full subposet; those are
    memoized by object set and the pairs are handled as numpy arrays.
    """
    from .builders import monotone_maps

    maps = monotone_maps(P) if maps is None else maps
    objs = list(P.objects)
    n = len(objs)
    pos = {x: i for i, x in enumerate(objs)}
    A = np.array([[pos[f[x]] for x in objs] for f in maps], dtype=np.int8).reshape(len(maps), n)
    chi = SubposetChi(P)
    codes: dict = {}
    table = np.array([codes.setdefault(chi(m), len(codes)) for m in range(1 << n)], dtype=np.int32)
    weights = (1 << np.arange(n)).astype(np.int32)
    M = len(maps)
    # comp[g, f, x] = G(F(x))
    comp = A[np.arange(M)[:, None, None], A[None, :, :].astype(np.intp)]
    mask_gf = ((comp == np.arange(n)) * weights).sum(axis=-1)
    lam = table[mask_gf]
    cyc_fail = int((lam != lam.T).sum())
    leq = poset_leq(P)
    alg_fail = 0
    for f in maps:
        below = sum(1 << pos[a] for a in objs if (f[a], a) in leq)
        fixed = sum(1 << pos[a] for a in objs if f[a] == a)
        above = sum(1 << pos[a] for a in objs if (a, f[a]) in leq)
        if not chi(below) == chi(fixed) == chi(above):
            alg_fail += 1
    return SweepReport(P.name, M, M * M, cyc_fail, alg_fail)

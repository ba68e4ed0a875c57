"""Set- and Cat-valued functors on finite categories and what they are for:
categories of elements, colimits, nondegeneracy, representations, tensors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from networkx.utils import UnionFind

from . import mobius
from .core import (Arrow, FinCat, Functor, check_functor, identity_functor, opposite,
                   structural_profile, DEFAULT_ARROW_CAP)
from .errors import (DomainNotCauchyComplete, InvariantViolation, NotFR, NotFunctorial,
                     SizeOverflow, UndefinedChi)


@dataclass(frozen=True)
class SetFunctor:
    """``X: A -> Set``.  ``sets[a]`` is Xa; ``actions[f]`` maps Xa to Xb.

    Identity actions may be left out; :func:`set_functor` fills them in.
    """

    domain: FinCat
    sets: Mapping[str, tuple]
    actions: Mapping[str, Mapping[str, str]]

    __hash__ = None  # type: ignore[assignment]

    def at(self, a: str) -> tuple:
        return self.sets[a]

    def act(self, f: str, x: str) -> str:
        return self.actions[f][x]

    def size(self, a: str) -> int:
        return len(self.sets[a])

    def sizes(self) -> dict:
        return {a: len(self.sets[a]) for a in self.domain.objects}


def set_functor(domain: FinCat, sets: Mapping, actions: Mapping | None = None,
                check: bool = True) -> SetFunctor:
    """Build a :class:`SetFunctor`, filling in identity actions and any
    action whose target set has exactly one element."""
    sets = {a: tuple(sets.get(a, ())) for a in domain.objects}
    acts = {f: dict(v) for f, v in (actions or {}).items()}
    for a in domain.arrows:
        if a.id in acts:
            continue
        if domain.is_identity(a.id):
            acts[a.id] = {x: x for x in sets[a.source]}
        elif len(sets[a.target]) == 1 or not sets[a.source]:
            acts[a.id] = {x: sets[a.target][0] for x in sets[a.source]}
        else:
            raise NotFunctorial(f"action of {a.id} is not given", (a.id,))
    X = SetFunctor(domain, sets, acts)
    return validate_functor(X) if check else X


def validate_functor(X):
    """Exhaustively check the functor laws; raises :class:`NotFunctorial`."""
    if isinstance(X, CatFunctor):
        return _validate_cat_functor(X)
    A = X.domain
    for a in A.objects:
        if len(set(X.sets[a])) != len(X.sets[a]):
            raise NotFunctorial(f"repeated element in X({a})", (a,))
    for arr in A.arrows:
        act = X.actions.get(arr.id)
        if act is None:
            raise NotFunctorial(f"no action for {arr.id}", (arr.id,))
        tgt = set(X.sets[arr.target])
        for x in X.sets[arr.source]:
            if x not in act or act[x] not in tgt:
                raise NotFunctorial(f"action of {arr.id} is not a function X({arr.source}) -> X({arr.target})",
                                    (arr.id, x))
    for a in A.objects:
        i = A.identity(a)
        if any(X.actions[i][x] != x for x in X.sets[a]):
            raise NotFunctorial(f"identity of {a} does not act trivially", (i,))
    for (g, f), h in A.composition.items():
        ag, af, ah = X.actions[g], X.actions[f], X.actions[h]
        for x in X.sets[A.source(f)]:
            if ag[af[x]] != ah[x]:
                raise NotFunctorial(f"X({g}) . X({f}) != X({g} . {f}) at {x}", (f, g))
    return X


@dataclass(frozen=True)
class CatFunctor:
    """Strict ``X: A -> Cat``: a category per object and a functor per arrow."""

    domain: FinCat
    cats: Mapping[str, FinCat]
    actions: Mapping[str, Functor]

    __hash__ = None  # type: ignore[assignment]


def cat_functor(domain: FinCat, cats: Mapping, actions: Mapping | None = None, check: bool = True) -> CatFunctor:
    acts = dict(actions or {})
    for a in domain.arrows:
        if a.id not in acts and domain.is_identity(a.id):
            acts[a.id] = identity_functor(cats[a.source])
    X = CatFunctor(domain, dict(cats), acts)
    return _validate_cat_functor(X) if check else X


def _validate_cat_functor(X: CatFunctor) -> CatFunctor:
    A = X.domain
    for arr in A.arrows:
        F = X.actions.get(arr.id)
        if F is None:
            raise NotFunctorial(f"no functor for {arr.id}", (arr.id,))
        if F.source is not X.cats[arr.source] and not F.source.same_table(X.cats[arr.source]):
            raise NotFunctorial(f"functor for {arr.id} has the wrong domain", (arr.id,))
        if F.target is not X.cats[arr.target] and not F.target.same_table(X.cats[arr.target]):
            raise NotFunctorial(f"functor for {arr.id} has the wrong codomain", (arr.id,))
        check_functor(F)
    for a in A.objects:
        F = X.actions[A.identity(a)]
        if any(F.ob(x) != x for x in X.cats[a].objects) or any(F.ar(f) != f for f in X.cats[a].arrow_ids):
            raise NotFunctorial(f"identity of {a} is not sent to an identity functor", (a,))
    for (g, f), h in A.composition.items():
        Fg, Ff, Fh = X.actions[g], X.actions[f], X.actions[h]
        src = X.cats[A.source(f)]
        if any(Fg.ob(Ff.ob(x)) != Fh.ob(x) for x in src.objects) or \
                any(Fg.ar(Ff.ar(u)) != Fh.ar(u) for u in src.arrow_ids):
            raise NotFunctorial(f"X({g}) . X({f}) != X({g} . {f})", (f, g))
    return X


def discrete_category(elements, name: str = "S") -> FinCat:
    objs = tuple(elements)
    return FinCat(name, objs, tuple(Arrow(f"id_{x}", x, x) for x in objs),
                  {x: f"id_{x}" for x in objs}, {(f"id_{x}", f"id_{x}"): f"id_{x}" for x in objs})


def as_cat_functor(X: SetFunctor) -> CatFunctor:
    """View a set-valued functor as Cat-valued (sets as discrete categories)."""
    cats = {a: discrete_category(X.sets[a], f"X({a})") for a in X.domain.objects}
    acts = {}
    for arr in X.domain.arrows:
        m = X.actions[arr.id]
        acts[arr.id] = Functor(cats[arr.source], cats[arr.target], dict(m),
                               {f"id_{x}": f"id_{y}" for x, y in m.items()})
    return CatFunctor(X.domain, cats, acts)


# --------------------------------------------------------------- elements

@dataclass(frozen=True)
class ElementsCategory:
    """``elt(X)`` with its projection back to the domain."""

    category: FinCat
    object_projection: Mapping[str, tuple]  # (a, x)
    arrow_projection: Mapping[str, str]

    __hash__ = None  # type: ignore[assignment]

    def projection(self, domain: FinCat) -> Functor:
        return Functor(self.category, domain, {o: ax[0] for o, ax in self.object_projection.items()},
                       dict(self.arrow_projection))


def element_id(a: str, x: str) -> str:
    return f"{a}@{x}"


def elements(X, arrow_cap: int = DEFAULT_ARROW_CAP) -> ElementsCategory:
    """Category of elements of a Set- or Cat-valued functor.

    Set-valued: objects ``a@x``; the arrow ``f: (a, x) -> (b, Xf(x))`` is
    named ``f@x``.  Cat-valued: arrows are pairs (f, xi) with
    ``xi: (Xf)(x) -> x'`` in Xb, named ``f@x|xi``.
    """
    if isinstance(X, CatFunctor):
        return _elements_cat(X, arrow_cap)
    A = X.domain
    objs, proj = [], {}
    for a in A.objects:
        for x in X.sets[a]:
            o = element_id(a, x)
            objs.append(o)
            proj[o] = (a, x)
    n = sum(len(X.sets[arr.source]) for arr in A.arrows)
    if n > arrow_cap:
        raise SizeOverflow(f"elements category would have {n} arrows (cap {arrow_cap})")
    arrows, aproj, ids = [], {}, {}
    for arr in A.arrows:
        for x in X.sets[arr.source]:
            aid = f"{arr.id}@{x}"
            arrows.append(Arrow(aid, element_id(arr.source, x), element_id(arr.target, X.actions[arr.id][x])))
            aproj[aid] = arr.id
    for a in A.objects:
        for x in X.sets[a]:
            ids[element_id(a, x)] = f"{A.identity(a)}@{x}"
    comp = {}
    for arr in A.arrows:
        f = arr.id
        for x in X.sets[arr.source]:
            y = X.actions[f][x]
            for g in A.out_arrows(arr.target):
                comp[(f"{g}@{y}", f"{f}@{x}")] = f"{A.compose(g, f)}@{x}"
    C = FinCat(f"elt({A.name})", tuple(objs), tuple(arrows), ids, comp)
    return ElementsCategory(C, proj, aproj)


def _elements_cat(X: CatFunctor, arrow_cap: int) -> ElementsCategory:
    A = X.domain
    objs, proj = [], {}
    for a in A.objects:
        for x in X.cats[a].objects:
            o = element_id(a, x)
            objs.append(o)
            proj[o] = (a, x)
    arrows, aproj, info = [], {}, {}
    for arr in A.arrows:
        F = X.actions[arr.id]
        B = X.cats[arr.target]
        for x in X.cats[arr.source].objects:
            fx = F.ob(x)
            for xi in B.out_arrows(fx):
                aid = f"{arr.id}@{x}|{xi}"
                arrows.append(Arrow(aid, element_id(arr.source, x), element_id(arr.target, B.target(xi))))
                aproj[aid] = arr.id
                info[aid] = (arr.id, x, xi)
                if len(arrows) > arrow_cap:
                    raise SizeOverflow(f"elements category exceeds {arrow_cap} arrows")
    ids = {}
    for a in A.objects:
        for x in X.cats[a].objects:
            ids[element_id(a, x)] = f"{A.identity(a)}@{x}|{X.cats[a].identity(x)}"
    out: dict = {o: [] for o in objs}
    for ar in arrows:
        out[ar.source].append(ar.id)
    comp = {}
    for ar in arrows:
        f, x, xi = info[ar.id]
        for gid in out[ar.target]:
            g, y, eta = info[gid]
            Cc = X.cats[A.target(g)]
            comp[(gid, ar.id)] = f"{A.compose(g, f)}@{x}|{Cc.compose(eta, X.actions[g].ar(xi))}"
    C = FinCat(f"elt({A.name})", tuple(objs), tuple(arrows), ids, comp)
    return ElementsCategory(C, proj, aproj)


# --------------------------------------------------------- common functors

def representable(A: FinCat, a: str) -> SetFunctor:
    """``A(a, -)``: elements are arrow ids, arrows act by post-composition."""
    sets = {b: A.hom(a, b) for b in A.objects}
    acts = {f.id: {u: A.compose(f.id, u) for u in sets[f.source]} for f in A.arrows}
    return SetFunctor(A, sets, acts)


def corepresentable(A: FinCat, b: str) -> SetFunctor:
    """``A(-, b)`` as a functor on ``A^op`` (arrows act by pre-composition)."""
    Aop = opposite(A)
    sets = {a: A.hom(a, b) for a in A.objects}
    acts = {f.id: {u: A.compose(u, f.id) for u in sets[f.target]} for f in A.arrows}
    return SetFunctor(Aop, sets, acts)


def functor_sum(functors) -> SetFunctor:
    """Coproduct; the i-th summand's elements are tagged ``i.x``."""
    functors = list(functors)
    A = functors[0].domain
    sets = {a: tuple(f"{i}.{x}" for i, X in enumerate(functors) for x in X.sets[a]) for a in A.objects}
    acts = {}
    for arr in A.arrows:
        m = {}
        for i, X in enumerate(functors):
            for x, y in X.actions[arr.id].items():
                m[f"{i}.{x}"] = f"{i}.{y}"
        acts[arr.id] = m
    return SetFunctor(A, sets, acts)


def constant_functor(A: FinCat, elements=("*",)) -> SetFunctor:
    els = tuple(elements)
    return SetFunctor(A, {a: els for a in A.objects}, {f: {x: x for x in els} for f in A.arrow_ids})


# ---------------------------------------------------------------- colimits

@dataclass(frozen=True)
class Quotient:
    """Equivalence classes of a finite set, each named by its least member."""

    classes: tuple

    @property
    def representatives(self) -> tuple:
        return tuple(c[0] for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def _classes(uf: UnionFind, members) -> Quotient:
    groups: dict = {}
    for m in members:
        groups.setdefault(uf[m], []).append(m)
    classes = sorted(tuple(sorted(g)) for g in groups.values())
    return Quotient(tuple(classes))


def colimit(X: SetFunctor) -> Quotient:
    """Connected components of elt(X), as classes of (object, element) pairs."""
    A = X.domain
    members = [(a, x) for a in A.objects for x in X.sets[a]]
    uf = UnionFind(members)
    for arr in A.arrows:
        if A.is_identity(arr.id):
            continue
        act = X.actions[arr.id]
        for x in X.sets[arr.source]:
            uf.union((arr.source, x), (arr.target, act[x]))
    return _classes(uf, members)


def tensor(Y: SetFunctor, X: SetFunctor) -> Quotient:
    """``Y (x) X``: pairs (a, y, x) modulo (b, y, Xf(x)) ~ (a, Yf(y), x)."""
    A = X.domain
    if not Y.domain.same_table(opposite(A)):
        raise NotFunctorial("Y must be defined on the opposite of X's domain")
    members = [(a, y, x) for a in A.objects for y in Y.sets[a] for x in X.sets[a]]
    uf = UnionFind(members)
    for arr in A.arrows:
        if A.is_identity(arr.id):
            continue
        a, b, f = arr.source, arr.target, arr.id
        for x in X.sets[a]:
            fx = X.actions[f][x]
            for y in Y.sets[b]:
                uf.union((b, y, fx), (a, Y.actions[f][y], x))
    return _classes(uf, members)


# ----------------------------------------------------------- nondegeneracy

@dataclass(frozen=True)
class Nondegeneracy:
    ok: bool
    condition: str | None = None  # "cospan" or "parallel"
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_nondegenerate(X: SetFunctor) -> Nondegeneracy:
    """Exhaustive check of the two completion conditions on elt(X).

    Cospan: whenever ``Xf(x) = Xf'(x')`` for ``f: a -> b``, ``f': a' -> b``
    there are ``g: c -> a``, ``g': c -> a'`` and z in Xc with ``fg = f'g'``,
    ``Xg(z) = x``, ``Xg'(z) = x'``.  Parallel: whenever ``Xf(x) = Xf'(x)``
    for parallel f, f' there are ``g: c -> a`` and z with ``fg = f'g`` and
    ``Xg(z) = x``.  The witness is the first diagram that cannot be completed.
    """
    A = X.domain
    # incoming[(b, y)] = list of (f, x) with Xf(x) = y
    incoming: dict = {(a, y): [] for a in A.objects for y in X.sets[a]}
    for arr in A.arrows:
        act = X.actions[arr.id]
        for x in X.sets[arr.source]:
            incoming[(arr.target, act[x])].append((arr.id, x))
    # spans_into[(a, x)] = {(c, z): [g, ...]}
    spans_into: dict = {}
    for key, lst in incoming.items():
        d: dict = {}
        for g, z in lst:
            d.setdefault((A.source(g), z), []).append(g)
        spans_into[key] = d
    comp = A.composition
    for (b, y), lst in incoming.items():
        for i in range(len(lst)):
            f, x = lst[i]
            a = A.source(f)
            from_a = spans_into[(a, x)]
            for j in range(i + 1, len(lst)):
                f2, x2 = lst[j]
                a2 = A.source(f2)
                from_a2 = spans_into[(a2, x2)]
                found = False
                for w, gs in from_a.items():
                    g2s = from_a2.get(w)
                    if not g2s:
                        continue
                    lhs = {comp[(f, g)] for g in gs}
                    if any(comp[(f2, g2)] in lhs for g2 in g2s):
                        found = True
                        break
                if not found:
                    return Nondegeneracy(False, "cospan", ((a, x, f), (a2, x2, f2), (b, y)))
    for a in A.objects:
        for x in X.sets[a]:
            into = [g for gs in spans_into[(a, x)].values() for g in gs]
            out = A.out_arrows(a)
            for i in range(len(out)):
                f = out[i]
                for j in range(i + 1, len(out)):
                    f2 = out[j]
                    if A.target(f) != A.target(f2) or X.actions[f][x] != X.actions[f2][x]:
                        continue
                    if not any(comp[(f, g)] == comp[(f2, g)] for g in into):
                        return Nondegeneracy(False, "parallel", ((a, x), f, f2))
    return Nondegeneracy(True)


@dataclass(frozen=True)
class FRDecomposition:
    """X is the sum over a of coefficients[a] copies of A(a, -)."""

    coefficients: Mapping[str, int]
    witnesses: tuple  # initial (a, x) of each component, in component order


def fr_decompose(X: SetFunctor, cross_check: bool = True) -> FRDecomposition:
    """Decompose X as a sum of representables by finding an initial object
    in every component of elt(X).  Requires a Cauchy-complete domain.

    With ``cross_check`` the verdict is compared with :func:`is_nondegenerate`.
    """
    A = X.domain
    prof = structural_profile(A)
    if not prof.is_cauchy_complete:
        raise DomainNotCauchyComplete(f"{A.name} has an idempotent that does not split",
                                      prof.witnesses.get("unsplit_idempotent"))
    comps = colimit(X)
    targets: dict = {}
    for arr in A.arrows:
        act = X.actions[arr.id]
        for x in X.sets[arr.source]:
            targets.setdefault((arr.source, x), []).append((arr.target, act[x]))
    coeffs = {a: 0 for a in A.objects}
    wit = []
    failure = None
    for cl in comps.classes:
        n = len(cl)
        init = None
        for w in cl:
            t = targets.get(w, [])
            if len(t) == n and len(set(t)) == n:
                init = w
                break
        if init is None:
            failure = cl
            break
        coeffs[init[0]] += 1
        wit.append(init)
    if cross_check:
        nd = is_nondegenerate(X)
        if nd.ok != (failure is None):
            raise InvariantViolation("familial representability and nondegeneracy disagree")
    if failure is not None:
        raise NotFR(f"component of {failure[0]} has no initial element", failure)
    sizes = X.sizes()
    for b in A.objects:
        if sum(coeffs[a] * len(A.hom(a, b)) for a in A.objects) != sizes[b]:
            raise InvariantViolation(f"decomposition does not reproduce |X{b}|")
    return FRDecomposition(coeffs, tuple(wit))


def representation_coefficients(X: SetFunctor) -> dict:
    """``r(a) = sum_b |Xb| mu(b, a)``, applied whether or not X is a sum of
    representables."""
    A = X.domain
    mu = mobius.mobius_matrix(A)
    sizes = X.sizes()
    return {a: sum((sizes[b] * mu[b, a] for b in A.objects), Fraction(0)) for a in A.objects}


def colimit_cardinality_via_weighting(X: SetFunctor, k: Mapping[str, Fraction] | None = None,
                                      verify: bool = True) -> Fraction:
    """``sum_a k^a |Xa|``.  With ``verify``, when the domain is
    Cauchy-complete and X nondegenerate the value is compared with the
    actual number of components of elt(X)."""
    A = X.domain
    if k is None:
        w = mobius.weighting(A)
        if not w.exists:
            from .errors import NoWeighting
            raise NoWeighting(f"{A.name} has no weighting")
        k = w.as_dict()
    zk = mobius.zeta(A).apply([k[a] for a in A.objects])
    if any(v != 1 for v in zk):
        raise ValueError("k is not a weighting")
    total = sum((Fraction(k[a]) * len(X.sets[a]) for a in A.objects), Fraction(0))
    if verify and structural_profile(A).is_cauchy_complete and is_nondegenerate(X).ok:
        n = len(colimit(X))
        if total != n:
            raise InvariantViolation(f"weighted count {total} != |colim X| = {n}")
    return total


def chi_of_elements(X, k: Mapping[str, Fraction] | None = None) -> Fraction:
    """``sum_a k^a chi(Xa)``, checked against chi(elt X)."""
    if isinstance(X, SetFunctor):
        X = as_cat_functor(X)
    A = X.domain
    if k is None:
        w = mobius.weighting(A)
        if not w.exists:
            raise UndefinedChi(f"{A.name} has no weighting")
        k = w.as_dict()
    total = Fraction(0)
    for a in A.objects:
        c = mobius.euler_characteristic(X.cats[a])
        if isinstance(c, mobius.Undefined):
            raise UndefinedChi(f"X({a}) = {X.cats[a].name} has no Euler characteristic")
        total += Fraction(k[a]) * c
    E = elements(X).category
    ce = mobius.euler_characteristic(E)
    if isinstance(ce, mobius.Undefined):
        raise UndefinedChi(f"elt(X) has no Euler characteristic ({ce})")
    if ce != total:
        raise InvariantViolation(f"chi(elt X) = {ce} but weighted sum is {total}")
    return total


def weighting_on_elements(X, k_domain: Mapping[str, Fraction], k_fibres: Mapping[str, Mapping]) -> dict:
    """``k^(a, x) = k^a k^x`` on elt(X) from weightings on A and on each Xa."""
    if isinstance(X, SetFunctor):
        X = as_cat_functor(X)
    E = elements(X)
    return {o: Fraction(k_domain[a]) * Fraction(k_fibres[a][x]) for o, (a, x) in E.object_projection.items()}

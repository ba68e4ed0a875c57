"""Zeta and Möbius functions, weightings and Euler characteristic.

Möbius inversion is decided by exact rank.  The structural algorithms
(:func:`mobius_by_paths`, :func:`mobius_by_factorization`,
:func:`nerve_euler`) are independent routes used to cross-check it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .core import (DirectedGraph, FinCat, Functor, Profunctor, automorphisms, check_functor,
                   epimorphisms, find_isomorphism, free_category, is_poset, isomorphism_classes,
                   monomorphisms, structural_profile, subcategory)
from .errors import (InvariantViolation, NoMobiusInversion, NotAdjoint, NotAFactorizationSystem,
                     NotAnEquivalence, NotInvertible, PreconditionFailed, Singular)
from .exact import UNIQUE, AffineSolutionSet, QMat, invert, rank, solve_affine


def zeta(C: FinCat) -> QMat:
    """Hom-set cardinalities, indexed by the declared object order."""
    return QMat.square(C.objects, C.zeta_counts())


def mobius_matrix(C: FinCat) -> QMat:
    Z = zeta(C)
    try:
        return invert(Z)
    except Singular as e:
        raise NoMobiusInversion(e.rank, e.size) from None


def has_mobius_inversion(C: FinCat) -> bool:
    return rank(zeta(C)) == len(C.objects)


def _aut_orders(C: FinCat) -> dict:
    return {x: len(automorphisms(C, x)) for x in C.objects}


def mobius_by_paths(C: FinCat) -> QMat:
    """Path-sum Möbius function for skeletal categories whose only
    idempotents are identities.

    Sums ``(-1)^n / |Aut(a_0)|...|Aut(a_n)|`` over paths through distinct
    objects.  Paths are grouped by their object sequence, which contributes
    the product of hom-set sizes; the sum is evaluated by recursion on the
    first step, which terminates because distinct-object paths cannot
    revisit an object in such a category.
    """
    prof = structural_profile(C)
    if not prof.is_skeletal:
        raise PreconditionFailed("category is not skeletal", prof.witnesses.get("isomorphism"))
    if not prof.idempotents_are_identities:
        raise PreconditionFailed("category has a non-identity idempotent", prof.witnesses.get("idempotent"))
    return _path_sum(C, prof.aut_orders)


def _path_sum(C: FinCat, aut: Mapping[str, int]) -> QMat:
    objs = C.objects
    Z = C.zeta_counts()
    n = len(objs)
    succ = [[j for j in range(n) if j != i and Z[i][j]] for i in range(n)]
    inv_aut = [Fraction(1, aut[x]) for x in objs]
    rows = []
    for b in range(n):
        # T[a] = sum over distinct-object paths a -> ... -> b
        memo: dict = {}

        def T(a: int, depth: int = 0) -> Fraction:
            if a in memo:
                return memo[a]
            if depth > n:
                raise PreconditionFailed("distinct-object paths revisit an object")
            s = Fraction(int(a == b))
            for c in succ[a]:
                s -= Z[a][c] * T(c, depth + 1)
            memo[a] = s * inv_aut[a]
            return memo[a]

        rows.append([T(a) for a in range(n)])
    # rows[b][a] = mu(a, b)
    return QMat.square(objs, [[rows[b][a] for b in range(n)] for a in range(n)])


def mobius_by_factorization(C: FinCat, E: Iterable[str] | None = None, M: Iterable[str] | None = None) -> QMat:
    """Möbius function from a factorization system (E, M).

    E and M default to all epimorphisms and all monomorphisms.  The
    factorization property is validated as the matrix identity
    ``zeta = zeta_E . diag(1/|Aut|) . zeta_M``; then
    ``mu = mu_M . diag(|Aut|) . mu_E`` with the path sums of the two wide
    subcategories.
    """
    prof = structural_profile(C)
    if not prof.is_skeletal:
        raise PreconditionFailed("category is not skeletal", prof.witnesses.get("isomorphism"))
    E = tuple(epimorphisms(C) if E is None else E)
    M = tuple(monomorphisms(C) if M is None else M)
    CE = subcategory(C, E, name=f"{C.name}[E]")
    CM = subcategory(C, M, name=f"{C.name}[M]")
    objs = C.objects
    aut = [prof.aut_orders[x] for x in objs]
    D_inv = QMat.diagonal(objs, [Fraction(1, k) for k in aut])
    D = QMat.diagonal(objs, aut)
    if zeta(CE) @ D_inv @ zeta(CM) != zeta(C):
        raise NotAFactorizationSystem("zeta differs from zeta_E . (1/|Aut|) . zeta_M")
    mu_E = mobius_by_paths(CE)
    mu_M = mobius_by_paths(CM)
    return mu_M @ D @ mu_E


# -------------------------------------------------------------- weightings

def weighting(C: FinCat) -> AffineSolutionSet:
    """All k with sum_b zeta(a, b) k^b = 1."""
    return solve_affine(zeta(C), [1] * len(C.objects))


def coweighting(C: FinCat) -> AffineSolutionSet:
    """All k with sum_a k_a zeta(a, b) = 1."""
    return solve_affine(zeta(C).transpose(), [1] * len(C.objects))


@dataclass(frozen=True)
class Undefined:
    """Euler characteristic (or Lefschetz number) does not exist."""

    missing: tuple  # subset of ("weighting", "coweighting")

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return "undefined (no " + " and no ".join(self.missing) + ")"


def euler_characteristic(C: FinCat):
    """``sum_a k^a`` for any weighting, when both a weighting and a
    coweighting exist; otherwise :class:`Undefined`.

    The sum is checked to be constant on the weighting family and equal
    to the coweighting sum.
    """
    w = weighting(C)
    cw = coweighting(C)
    missing = tuple(s for s, sol in (("weighting", w), ("coweighting", cw)) if not sol.exists)
    if missing:
        return Undefined(missing)
    chi = sum(w.particular, Fraction(0))
    if sum(cw.particular, Fraction(0)) != chi:
        raise InvariantViolation("weighting and coweighting sums differ")
    for v in w.nullspace_basis + cw.nullspace_basis:
        if sum(v, Fraction(0)) != 0:
            raise InvariantViolation("Euler characteristic depends on the choice of weighting")
    return chi


def has_euler_characteristic(C: FinCat) -> bool:
    return not isinstance(euler_characteristic(C), Undefined)


def chi_from_mobius(C: FinCat) -> Fraction:
    return mobius_matrix(C).total()


def groupoid_cardinality(C: FinCat) -> Fraction:
    """sum over isomorphism classes of 1/|Aut|."""
    return sum((Fraction(1, len(automorphisms(C, cl[0]))) for cl in isomorphism_classes(C)), Fraction(0))


# ------------------------------------------------------------------ nerve

def nondegenerate_path_counts(C: FinCat, arrows: Iterable[str] | None = None) -> list[int]:
    """``c[n]`` = number of composable strings of n non-identity arrows.

    ``arrows`` restricts the strings to a subset of arrows (all by
    default).  Requires finitely many such strings, i.e. no circuits among
    the allowed non-identity arrows.
    """
    allowed = [a for a in C.arrows if not C.is_identity(a.id)]
    if arrows is not None:
        keep = set(arrows)
        allowed = [a for a in allowed if a.id in keep]
    out: dict = {x: [] for x in C.objects}
    for a in allowed:
        out[a.source].append(a.target)
    # ending[x] = number of n-paths ending at x
    ending = {x: 1 for x in C.objects}
    counts = [len(C.objects)]
    for n in range(1, len(C.objects) + 2):
        nxt = {x: 0 for x in C.objects}
        for x, k in ending.items():
            if k:
                for t in out[x]:
                    nxt[t] += k
        total = sum(nxt.values())
        if total == 0:
            return counts
        counts.append(total)
        ending = nxt
    raise PreconditionFailed("infinitely many nondegenerate paths (the category has circuits)")


def nerve_euler(C: FinCat) -> int:
    """Alternating count of nondegenerate paths, for skeletal categories
    with no endomorphisms other than identities."""
    prof = structural_profile(C)
    if not prof.is_skeletal:
        raise PreconditionFailed("category is not skeletal", prof.witnesses.get("isomorphism"))
    if not prof.only_identity_endos:
        bad = next(f for x in C.objects for f in C.endos(x) if not C.is_identity(f))
        raise PreconditionFailed("category has a non-identity endomorphism", (bad,))
    return sum((-1) ** n * c for n, c in enumerate(nondegenerate_path_counts(C)))


def euler_of_graph(G: DirectedGraph) -> Fraction:
    """Euler characteristic of the free category on a circuit-free graph,
    checked against |vertices| - |edges|."""
    chi = euler_characteristic(free_category(G))
    expected = len(G.vertices) - len(G.edges)
    if chi != expected:
        raise InvariantViolation(f"chi(F(G)) = {chi} but |G0| - |G1| = {expected}")
    return chi


# ------------------------------------------------------------ equivalence

def check_equivalence(F: Functor) -> None:
    """Full, faithful and essentially surjective, by exhaustive check."""
    check_functor(F)
    A, B = F.source, F.target
    for a in A.objects:
        for a2 in A.objects:
            images = [F.ar(f) for f in A.hom(a, a2)]
            target = B.hom(F.ob(a), F.ob(a2))
            if len(set(images)) != len(images):
                raise NotAnEquivalence(f"not faithful on {a} -> {a2}")
            if len(images) != len(target):
                raise NotAnEquivalence(f"not full on {a} -> {a2}")
    hit = {F.ob(a) for a in A.objects}
    for b in B.objects:
        if b not in hit and not any(find_isomorphism(B, b, y) for y in hit):
            raise NotAnEquivalence(f"object {b} is not in the essential image")


def _class_sizes(C: FinCat) -> dict:
    sizes = {}
    for cl in isomorphism_classes(C):
        for x in cl:
            sizes[x] = len(cl)
    return sizes


def transport_weighting(F: Functor, l: Mapping[str, Fraction]) -> dict:
    """Pull a weighting on the target of an equivalence back to its source:
    ``k^a = (|[Fa]| / |[a]|) l^{Fa}`` with iso-class sizes."""
    check_equivalence(F)
    A, B = F.source, F.target
    ca, cb = _class_sizes(A), _class_sizes(B)
    k = {a: Fraction(cb[F.ob(a)], ca[a]) * Fraction(l[F.ob(a)]) for a in A.objects}
    Z = zeta(A)
    if any(v != 1 for v in Z.apply([k[a] for a in A.objects])):
        raise InvariantViolation("transported vector is not a weighting")
    return k


# ------------------------------------------------------------------ Galois

@dataclass(frozen=True)
class GaloisReport:
    pairs_checked: int
    violations: tuple  # (a, b, left sum, right sum)

    @property
    def ok(self) -> bool:
        return not self.violations


def _leq(P: FinCat, x, y) -> bool:
    return bool(P.hom(x, y))


def galois_identity_check(A: FinCat, B: FinCat, F: Mapping[str, str], G: Mapping[str, str]) -> GaloisReport:
    """For posets A, B and monotone F: A -> B left adjoint to G: B -> A,
    compare ``sum_{a': Fa' = b} mu(a, a')`` with ``sum_{b': Gb' = a} mu(b', b)``
    at every pair (a, b)."""
    for P in (A, B):
        if not is_poset(P):
            raise PreconditionFailed(f"{P.name} is not a poset")
    for x, y in itertools.product(A.objects, repeat=2):
        if _leq(A, x, y) and not _leq(B, F[x], F[y]):
            raise NotAdjoint(f"F is not monotone at {x} <= {y}", (x, y))
    for x, y in itertools.product(B.objects, repeat=2):
        if _leq(B, x, y) and not _leq(A, G[x], G[y]):
            raise NotAdjoint(f"G is not monotone at {x} <= {y}", (x, y))
    for a in A.objects:
        for b in B.objects:
            if _leq(B, F[a], b) != _leq(A, a, G[b]):
                raise NotAdjoint(f"Fa <= b and a <= Gb disagree at ({a}, {b})", (a, b))
    muA, muB = mobius_matrix(A), mobius_matrix(B)
    bad = []
    for a in A.objects:
        for b in B.objects:
            lhs = sum((muA[a, a2] for a2 in A.objects if F[a2] == b), Fraction(0))
            rhs = sum((muB[b2, b] for b2 in B.objects if G[b2] == a), Fraction(0))
            if lhs != rhs:
                bad.append((a, b, lhs, rhs))
    return GaloisReport(len(A.objects) * len(B.objects), tuple(bad))


# ------------------------------------------------------- bounds and collage

def adjoined_mu_formula(C: FinCat, mu: QMat | None = None) -> Fraction:
    """The predicted value of mu(0, 1) after adjoining both bounds: chi - 1."""
    mu = mobius_matrix(C) if mu is None else mu
    return mu.total() - 1


def collage_mobius_formula(P: Profunctor, collage_cat: FinCat) -> QMat:
    """Möbius function of a collage assembled blockwise from mu_B and mu_A:
    zero from A to B, and ``-sum mu_B(b, b') |M(b', a')| mu_A(a', a)`` from B to A.

    ``collage_cat`` fixes the object naming and order of the result.
    """
    B, A = P.left_cat, P.right_cat
    muB, muA = mobius_matrix(B), mobius_matrix(A)
    nb = len(B.objects)
    names = collage_cat.objects
    bn, an = names[:nb], names[nb:]
    Msize = QMat.from_rows(B.objects, A.objects, [[len(P.M(b, a)) for a in A.objects] for b in B.objects])
    cross = muB @ Msize @ muA
    rows = []
    for i, b in enumerate(B.objects):
        rows.append(list(muB.data[i]) + [-x for x in cross.data[i]])
    for j, a in enumerate(A.objects):
        rows.append([Fraction(0)] * nb + list(muA.data[j]))
    return QMat.square(tuple(bn) + tuple(an), rows)


# -------------------------------------------------------------------- CLL

@dataclass(frozen=True)
class ArrowIncidence:
    """A rational function on the arrows of a category."""

    category_name: str
    values: Mapping[str, Fraction]

    def __getitem__(self, f: str) -> Fraction:
        return self.values[f]

    def aggregate(self, C: FinCat) -> QMat:
        """Sum over each hom-set."""
        return QMat.square(C.objects, [[sum((self.values[f] for f in C.hom(a, b)), Fraction(0))
                                        for b in C.objects] for a in C.objects])


def cll_mobius(C: FinCat) -> ArrowIncidence:
    """Arrow-level Möbius function: the convolution inverse of the constant-1
    function, where ``(theta * phi)(f) = sum_{h.g = f} theta(g) phi(h)``.

    Solves ``sum_{h.g = f} mu(g) = [f is an identity]`` and then verifies
    the other-sided identity.  Raises :class:`NotInvertible` if there is no
    unique solution.
    """
    ids = C.arrow_ids
    idx = C.arrow_index
    m = len(ids)
    rows = [[0] * m for _ in range(m)]
    for (h, g), f in C.composition.items():
        rows[idx[f]][idx[g]] += 1
    unit = [int(C.is_identity(f)) for f in ids]
    sol = solve_affine(QMat.from_rows(ids, ids, rows), unit)
    if sol.kind != UNIQUE:
        raise NotInvertible(f"{C.name}: constant-1 function has no convolution inverse ({sol.kind} solutions)")
    mu = dict(zip(ids, sol.particular))
    other = [Fraction(0)] * m
    for (h, g), f in C.composition.items():
        other[idx[f]] += mu[h]
    if other != unit:
        raise InvariantViolation("arrow-level inverse is only one-sided")
    return ArrowIncidence(C.name, mu)

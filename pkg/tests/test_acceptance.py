"""Acceptance suite: thirteen criteria, one pass/fail line each.

Run under pytest (``pytest tests/test_acceptance.py -v``) or directly
(``python tests/test_acceptance.py``).  Every comparison is exact.
"""

from __future__ import annotations

import itertools
import math
import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import adjugate_inverse, colimit_size, derangements, nerve_strings  # noqa: E402

from eulercat import builders as B  # noqa: E402
from eulercat.core import (Functor, adjoin_bounds, check_functor, collage, constant_profunctor,  # noqa: E402
                           free_category, full_subcategory, functor_from_object_map, functor_profunctor,
                           identity_functor, is_poset)
from eulercat.errors import NotInvertible  # noqa: E402
from eulercat.functors import (chi_of_elements, colimit, colimit_cardinality_via_weighting, elements,  # noqa: E402
                               fr_decompose, is_nondegenerate, representation_coefficients)
from eulercat.lefschetz import (algebra_category, coalgebra_category, lefschetz_number,  # noqa: E402
                                monotone_endofunctor, monotone_sweep)
from eulercat.mobius import (Undefined, cll_mobius, collage_mobius_formula, euler_characteristic,  # noqa: E402
                             has_mobius_inversion, mobius_by_factorization, mobius_matrix, nerve_euler, weighting)
from eulercat.verify import VerifyConfig, base_family, run_suite  # noqa: E402


def same_chi(a, b):
    return (isinstance(a, Undefined) and isinstance(b, Undefined)) or a == b


# ------------------------------------------------------------ criterion 1

def c1_f3_mobius():
    C = B.fin_sets(3)
    mu = mobius_matrix(C)
    E, M = B.fin_sets_factorization(C)
    via_fs = mobius_by_factorization(C, E, M)
    oracle = adjugate_inverse([[Fraction(j ** i) for j in (1, 2, 3)] for i in (1, 2, 3)])
    ok = mu["1", "2"] == Fraction(-5, 2) and via_fs == mu and mu.to_lists() == oracle
    return ok, f"mu(1,2) = {mu['1', '2']}, factorization matrix identical: {via_fs == mu}"


# ------------------------------------------------------------ criterion 2

def _surj_binom(a, b):
    if a == 0 or b == 0:
        return int(a == b)
    return math.comb(a - 1, b - 1)


def c2_binomial_mobius():
    bad = []
    for N in range(7):
        mi, ms = mobius_matrix(B.delta_inj(N)), mobius_matrix(B.delta_surj(N))
        for a in range(N + 1):
            for b in range(N + 1):
                if mi[str(a), str(b)] != (-1) ** (b - a) * math.comb(b, a):
                    bad.append(("inj", N, a, b))
                if ms[str(a), str(b)] != (-1) ** (a - b) * _surj_binom(a, b):
                    bad.append(("surj", N, a, b))
    return not bad, f"{len(bad)} mismatches over N = 0..6"


# ------------------------------------------------------------ criterion 3

def c3_spheres():
    rows = []
    for n in range(7):
        S = B.sphere_poset(n)
        w = sum(weighting(S).particular)
        m = mobius_matrix(S).total()
        p = nerve_euler(S)
        oracle = sum((-1) ** k * c for k, c in enumerate(nerve_strings(S)))
        rows.append(w == m == p == oracle == 1 + (-1) ** n)
    return all(rows), "chi = " + ", ".join(str(1 + (-1) ** n) for n in range(7)) + " for n = 0..6"


# ------------------------------------------------------------ criterion 4

def c4_trichotomy():
    L = weighting(B.pushout_shape())
    ok = L.unique and L.as_dict() == {"a": -1, "b1": 1, "b2": 1}
    for n in range(1, 9):
        w = weighting(B.cyclic_group(n))
        ok &= w.unique and w.particular == (Fraction(1, n),)
    A = B.no_weighting_example()
    ok &= weighting(A).kind == "none"
    fams = [weighting(full_subcategory(A, objs)) for objs in (["a1", "a2"], ["a1", "a2", "a3"])]
    ok &= all(f.kind == "family" and len(f.nullspace_basis) > 0 for f in fams)
    return ok, "L unique, Z/n unique 1/n, no-weighting none, two subcategories families"


# ------------------------------------------------------------ criterion 5

def c5_morita():
    a, b = euler_characteristic(B.idempotent_monoid()), euler_characteristic(B.split_epi_category())
    return a == Fraction(1, 2) and b == 1, f"chi(idempotent monoid) = {a}, chi(split epi) = {b}"


# ------------------------------------------------------------ criterion 6

def c6_derangements():
    N = 6
    X = B.symmetric_action(N)
    r = representation_coefficients(X)
    d = fr_decompose(X).coefficients
    oracle = [derangements(n) for n in range(N + 1)]
    ok = oracle == [1, 0, 1, 2, 9, 44, 265] and all(r[str(n)] == oracle[n] == d[str(n)] for n in range(N + 1))
    return ok, "r = " + ", ".join(str(r[str(n)]) for n in range(N + 1))


# ------------------------------------------------------------ criterion 7

def _injective_pushouts(rng, count):
    out = []
    for _ in range(count):
        k = rng.randint(0, 4)
        xa = [f"x{i}" for i in range(k)]
        xb1 = [f"y{i}" for i in range(k + rng.randint(0, 3))]
        xb2 = [f"z{i}" for i in range(k + rng.randint(0, 3))]
        f1 = dict(zip(xa, rng.sample(xb1, k)))
        f2 = dict(zip(xa, rng.sample(xb2, k)))
        out.append(B.pushout_data(xa, xb1, xb2, f1, f2))
    return out


def _free_actions():
    out = [B.cyclic_action(n, n, c) for n in range(1, 6) for c in range(1, 4)]
    G = B.symmetric_group(3)
    for copies in (1, 2):
        els = [f"{g}.{c}" for c in range(copies) for g in G.arrow_ids]
        act = {g: {f"{h}.{c}": f"{G.compose(g, h)}.{c}" for c in range(copies) for h in G.arrow_ids}
               for g in G.arrow_ids}
        out.append(B.group_action(G, els, act))
    return out


def _intersections(rng, count):
    out = []
    for _ in range(count):
        n = rng.randint(1, 4)
        sets = [sorted(rng.sample([str(i) for i in range(1, 10)], rng.randint(0, 6))) for _ in range(n)]
        out.append(B.intersection_diagram(sets))
    return out


def _disjoint_parallel(rng, count):
    out = []
    for _ in range(count):
        k = rng.randint(0, 3)
        xa = [f"x{i}" for i in range(k)]
        xb = [f"y{i}" for i in range(2 * k + rng.randint(0, 3))]
        img = rng.sample(xb, 2 * k)
        out.append(B.parallel_pair_data(xa, xb, dict(zip(xa, img[:k])), dict(zip(xa, img[k:]))))
    return out


def c7_colimits():
    rng = random.Random(2024)
    family = (_injective_pushouts(rng, 15) + _free_actions() + _intersections(rng, 15)
              + _disjoint_parallel(rng, 10))
    bad = 0
    for X in family:
        k = weighting(X.domain).as_dict()
        weighted = sum(k[a] * X.size(a) for a in X.domain.objects)
        if not is_nondegenerate(X) or not (len(colimit(X)) == colimit_size(X) == weighted):
            bad += 1
    S = [{1, 2, 3, 4, 5}, {4, 5, 6, 7, 8}, {1, 5, 8, 9}]
    X = B.intersection_diagram([sorted(str(i) for i in s) for s in S])
    incl_excl = sum((-1) ** (r + 1) * len(set.intersection(*c)) for r in range(1, 4)
                    for c in itertools.combinations(S, r))
    ie_ok = len(colimit(X)) == colimit_cardinality_via_weighting(X) == incl_excl == len(set.union(*S))
    return bad == 0 and len(family) >= 50 and ie_ok, f"{len(family)} functors, {bad} failures; |S1 u S2 u S3| = {incl_excl}"


# ------------------------------------------------------------ criterion 8

def c8_vanishing():
    res = run_suite(VerifyConfig(), checks=["vanishing", "interval-restriction"])
    failed = [r for r in res if not r.ok]
    return not failed and len(res) > 0, f"{len(res)} checks over the one-step closure, {len(failed)} failed"


# ------------------------------------------------------------ criterion 9

def c9_graphs():
    rng = random.Random(99)
    bad = 0
    for _ in range(20):
        n = rng.randint(1, 8)
        G = B.random_dag(n, rng.randint(0, 10) if n > 1 else 0, rng)
        if euler_characteristic(free_category(G)) != len(G.vertices) - len(G.edges):
            bad += 1
    return bad == 0, f"20 random circuit-free graphs, {bad} failures"


# ------------------------------------------------------------ criterion 10

def _group_hom(H, G, gen_image):
    """Homomorphism of cyclic groups determined by the image of g1."""
    amap, cur = {}, G.identity("*")
    for h in H.arrow_ids:
        amap[h] = cur
        cur = G.compose(gen_image, cur)
    return check_functor(Functor(H, G, {"*": "*"}, amap))


def _collage_profunctors():
    ps = [constant_profunctor(B.chain(2), B.chain(3)), constant_profunctor(B.cyclic_group(2), B.chain(2)),
          constant_profunctor(B.subsets_poset(2), B.cyclic_group(3)),
          constant_profunctor(B.idempotent_monoid(), B.sphere_poset(1))]
    ps.append(functor_profunctor(functor_from_object_map(B.chain(2), B.chain(3), {"0": "0", "1": "2"})))
    ps.append(functor_profunctor(identity_functor(B.subsets_poset(2))))
    ps.append(functor_profunctor(identity_functor(B.cyclic_group(3))))
    ps.append(functor_profunctor(_group_hom(B.cyclic_group(2), B.cyclic_group(4), "g2")))
    ps.append(functor_profunctor(_group_hom(B.cyclic_group(3), B.symmetric_group(3), "p231")))
    ps.append(functor_profunctor(_group_hom(B.cyclic_group(2), B.symmetric_group(3), "p213")))
    ps.append(functor_profunctor(functor_from_object_map(B.boolean_lattice(1), B.sphere_poset(1),
                                                         {"S": "c0", "S1": "c1"})))
    return ps


def c10_bounds_and_collage():
    checked, bad = 0, 0
    for A in base_family(VerifyConfig()):
        if not has_mobius_inversion(A):
            continue
        checked += 1
        if mobius_matrix(adjoin_bounds(A))["bot", "top"] != euler_characteristic(A) - 1:
            bad += 1
    ps = _collage_profunctors()
    cbad = sum(collage_mobius_formula(P, collage(P)) != mobius_matrix(collage(P)) for P in ps)
    return bad == 0 and cbad == 0 and len(ps) >= 10, f"{checked} bounded categories, {len(ps)} collages, {bad + cbad} failures"


# ------------------------------------------------------------ criterion 11

def c11_lefschetz():
    ident_bad = sum(not same_chi(lefschetz_number(identity_functor(C)), euler_characteristic(C))
                    for C in base_family(VerifyConfig()))
    posets = [P for n in range(1, 6) for P in B.posets_up_to_iso(n)]
    pairs, failures = 0, 0
    for P in posets:
        r = monotone_sweep(P)
        pairs += r.pairs
        failures += r.cyclicity_failures + r.alg_coalg_failures
    # the general Alg/Coalg construction on every monotone map of the posets with <= 3 elements
    general_bad = 0
    for P in posets:
        if len(P.objects) > 3:
            continue
        for f in B.monotone_maps(P):
            F = monotone_endofunctor(P, f)
            lam = lefschetz_number(F)
            if not (euler_characteristic(algebra_category(F)) == lam == euler_characteristic(coalgebra_category(F))):
                general_bad += 1
    ok = ident_bad == 0 and failures == 0 and general_bad == 0
    return ok, f"{len(posets)} posets, {pairs} ordered map pairs, {failures + general_bad + ident_bad} failures"


# ------------------------------------------------------------ criterion 12

def _catalog_posets():
    cats = [B.chain(n) for n in range(1, 6)] + [B.subsets_poset(n) for n in range(1, 4)]
    cats += [B.boolean_lattice(n) for n in range(0, 4)] + [B.divisor_lattice(n) for n in (12, 30, 36)]
    cats += [B.sphere_poset(n) for n in range(0, 4)] + [B.pushout_shape(), B.discrete(3), B.terminal()]
    return [C for C in cats if is_poset(C)]


def c12_cll():
    bad = 0
    posets = _catalog_posets()
    for P in posets:
        if cll_mobius(P).aggregate(P) != mobius_matrix(P):
            bad += 1
    for n in range(2, 6):
        try:
            cll_mobius(B.cyclic_group(n))
            bad += 1
        except NotInvertible:
            pass
    both = 0
    for C in base_family(VerifyConfig()):
        try:
            inc = cll_mobius(C)
        except NotInvertible:
            continue
        if has_mobius_inversion(C):
            both += 1
            mu = mobius_matrix(C)
            if any(sum((inc[f] for f in C.hom(a, b)), Fraction(0)) != mu[a, b]
                   for a in C.objects for b in C.objects):
                bad += 1
    return bad == 0, f"{len(posets)} posets, Z/2..Z/5 not invertible, {both} aggregations, {bad} failures"


# ------------------------------------------------------------ criterion 13

def c13_fibration():
    bad = 0
    for n, m, copies in [(2, 2, 1), (4, 2, 1), (6, 3, 2), (6, 1, 1), (5, 5, 3), (8, 4, 2)]:
        X = B.cyclic_action(n, m, copies)
        expected = Fraction(m * copies, n)
        if chi_of_elements(X) != expected or euler_characteristic(elements(X).category) != expected:
            bad += 1
    for n in range(1, 6):
        prev = euler_characteristic(B.sphere_poset(n - 1))
        if not chi_of_elements(B.sphere_diagram(n)) == 2 - prev == euler_characteristic(B.sphere_poset(n)):
            bad += 1
    return bad == 0, f"6 weak quotients and spheres n = 1..5, {bad} failures"


CRITERIA = [
    (1, "F_3 Mobius value", c1_f3_mobius),
    (2, "binomial Mobius functions", c2_binomial_mobius),
    (3, "sphere posets", c3_spheres),
    (4, "weighting trichotomy", c4_trichotomy),
    (5, "Morita counterexample", c5_morita),
    (6, "derangements", c6_derangements),
    (7, "colimit theorem", c7_colimits),
    (8, "vanishing theorem", c8_vanishing),
    (9, "graph formula", c9_graphs),
    (10, "adjoined bounds and collage", c10_bounds_and_collage),
    (11, "Lefschetz suite", c11_lefschetz),
    (12, "CLL comparison", c12_cll),
    (13, "fibration formula", c13_fibration),
]


def report(num, title, fn):
    ok, detail = fn()
    return ok, f"criterion {num:2d} [{title}]: {'PASS' if ok else 'FAIL'} ({detail})"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, line = report(num, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

"""Invariant suite over the builder catalog and its one-step combinator
closure.  Used by ``eulercat verify`` and by the test suite."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from . import builders as B
from .core import (FinCat, adjoin_bounds, collage, constant_profunctor, identity_functor, interval,
                   opposite, product_categories, sum_categories)
from .errors import EulerCatError, PreconditionFailed
from .lefschetz import lefschetz_number
from .mobius import (Undefined, adjoined_mu_formula, cll_mobius, euler_characteristic,
                     has_mobius_inversion, mobius_by_paths, mobius_matrix, nerve_euler, zeta)


@dataclass(frozen=True)
class VerifyConfig:
    # (catalog name, params) pairs forming the base family
    base: tuple = (
        ("discrete", (2,)), ("codiscrete", (2,)), ("cyclic_group", (2,)), ("cyclic_group", (3,)),
        ("symmetric_group", (3,)), ("idempotent_monoid", ()), ("split_epi_category", ()), ("chain", (3,)),
        ("subsets_poset", (2,)), ("subsets_poset", (3,)), ("boolean_lattice", (2,)), ("divisor_lattice", (12,)),
        ("delta_inj", (3,)), ("delta_surj", (3,)), ("fin_sets", (2,)), ("fin_sets", (3,)),
        ("sphere_poset", (1,)), ("sphere_poset", (2,)), ("pushout_shape", ()), ("parallel_pair", ()),
        ("no_weighting_example", ()), ("terminal", ()),
    )
    # binary combinators are applied to pairs whose result stays below this many arrows
    pair_arrow_cap: int = 150
    intervals: bool = True
    workers: int = 1


@dataclass(frozen=True)
class CheckResult:
    category: str
    check: str
    ok: bool
    detail: str = ""


def base_family(cfg: VerifyConfig) -> list[FinCat]:
    return [B.build(name, *params) for name, params in cfg.base]


def closure(cfg: VerifyConfig) -> list[FinCat]:
    """The base family plus one application of sum, product, collage,
    adjoin_bounds and interval."""
    base = base_family(cfg)
    out = list(base)
    for C in base:
        out.append(adjoin_bounds(C))
        if cfg.intervals:
            for a in C.objects:
                for c in C.objects:
                    if a != c and C.hom(a, c):
                        out.append(interval(C, a, c))
    for i, C in enumerate(base):
        for D in base[i:]:
            n = len(C.arrows) + len(D.arrows)
            if n <= cfg.pair_arrow_cap:
                out.append(sum_categories([C, D]))
                out.append(collage(constant_profunctor(C, D)))
            if len(C.arrows) * len(D.arrows) <= cfg.pair_arrow_cap:
                out.append(product_categories([C, D]))
    return out


# ------------------------------------------------------------------ checks

def check_vanishing(C: FinCat) -> tuple[bool, str]:
    mu = mobius_matrix(C)
    Z = zeta(C)
    for a in C.objects:
        for b in C.objects:
            if Z[a, b] == 0 and mu[a, b] != 0:
                return False, f"zeta({a},{b}) = 0 but mu = {mu[a, b]}"
    return True, ""


def check_interval_restriction(C: FinCat) -> tuple[bool, str]:
    mu = mobius_matrix(C)
    for a in C.objects:
        for c in C.objects:
            if not C.hom(a, c):
                continue
            I = interval(C, a, c)
            sub = mobius_matrix(I)
            if sub != mu.submatrix(I.objects, I.objects):
                return False, f"interval [{a},{c}] disagrees"
    return True, ""


def check_interval_iff(C: FinCat) -> tuple[bool, str]:
    ambient = has_mobius_inversion(C)
    local = all(has_mobius_inversion(interval(C, a, c)) for a in C.objects for c in C.objects if C.hom(a, c))
    return ambient == local, f"ambient {ambient}, intervals {local}"


def check_chi_agreement(C: FinCat) -> tuple[bool, str]:
    chi = euler_characteristic(C)
    if has_mobius_inversion(C):
        s = mobius_matrix(C).total()
        if isinstance(chi, Undefined) or s != chi:
            return False, f"weighting chi {chi} vs mu-sum {s}"
    return True, str(chi)


def check_paths(C: FinCat) -> tuple[bool, str]:
    try:
        mp = mobius_by_paths(C)
    except PreconditionFailed:
        return True, "precondition not met"
    return mp == mobius_matrix(C), ""


def check_nerve(C: FinCat) -> tuple[bool, str]:
    try:
        n = nerve_euler(C)
    except PreconditionFailed:
        return True, "precondition not met"
    return n == euler_characteristic(C), str(n)


def check_adjoined(C: FinCat) -> tuple[bool, str]:
    if not has_mobius_inversion(C):
        return True, "no Mobius inversion"
    chi = mobius_matrix(C).total()
    return adjoined_mu_formula(C) == chi - 1, ""


def check_cll(C: FinCat) -> tuple[bool, str]:
    try:
        inc = cll_mobius(C)
    except EulerCatError as e:
        return True, f"arrow-level mu absent ({e.reason})"
    if not has_mobius_inversion(C):
        return True, "object-level mu absent"
    return inc.aggregate(C) == mobius_matrix(C), ""


def check_op(C: FinCat) -> tuple[bool, str]:
    D = opposite(opposite(C))
    return D.name == C.name and D.same_table(C), ""


def check_lefschetz_identity(C: FinCat) -> tuple[bool, str]:
    L = lefschetz_number(identity_functor(C))
    chi = euler_characteristic(C)
    same = (isinstance(L, Undefined) and isinstance(chi, Undefined)) or L == chi
    return same, str(L)


CHECKS: dict[str, Callable[[FinCat], tuple[bool, str]]] = {
    "chi-agreement": check_chi_agreement,
    "vanishing": check_vanishing,
    "interval-restriction": check_interval_restriction,
    "interval-iff": check_interval_iff,
    "path-sum": check_paths,
    "nerve": check_nerve,
    "adjoined-bounds": check_adjoined,
    "cll": check_cll,
    "op-involution": check_op,
    "lefschetz-identity": check_lefschetz_identity,
}

NEEDS_INVERSION = {"vanishing", "interval-restriction"}


def _run_one(C: FinCat, names: Iterable[str]) -> list[CheckResult]:
    inv = has_mobius_inversion(C)
    res = []
    for nm in names:
        if nm in NEEDS_INVERSION and not inv:
            continue
        try:
            ok, detail = CHECKS[nm](C)
        except (EulerCatError, AssertionError) as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        res.append(CheckResult(C.name, nm, ok, detail))
    return res


def run_suite(cfg: VerifyConfig = VerifyConfig(), checks: Iterable[str] | None = None,
              categories: list[FinCat] | None = None) -> list[CheckResult]:
    names = list(checks or CHECKS)
    cats = categories if categories is not None else closure(cfg)
    if cfg.workers > 1:
        with ThreadPoolExecutor(cfg.workers) as pool:
            chunks = list(pool.map(lambda C: _run_one(C, names), cats))
    else:
        chunks = [_run_one(C, names) for C in cats]
    return [r for chunk in chunks for r in chunk]


def render_table(results: list[CheckResult]) -> str:
    w = max([len(r.category) for r in results] + [8])
    lines = [f"{'category'.ljust(w)}  {'check'.ljust(20)}  result"]
    for r in results:
        lines.append(f"{r.category.ljust(w)}  {r.check.ljust(20)}  {'pass' if r.ok else 'FAIL'}"
                     + (f"  {r.detail}" if not r.ok else ""))
    n_fail = sum(not r.ok for r in results)
    lines.append(f"{len(results)} checks, {n_fail} failed")
    return "\n".join(lines) + "\n"

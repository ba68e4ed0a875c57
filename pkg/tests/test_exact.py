from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eulercat.errors import Singular
from eulercat.exact import FAMILY, NONE, UNIQUE, QMat, fmt, invert, rank, solve_affine

from oracles import adjugate_inverse

small_ints = st.integers(-4, 4)


def square(n):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)


def test_fmt():
    assert fmt(Fraction(-5, 2)) == "-5/2"
    assert fmt(Fraction(6, 3)) == "2"
    assert fmt(0) == "0"


@given(st.integers(1, 4).flatmap(square))
def test_invert_matches_adjugate(rows):
    n = len(rows)
    M = QMat.square(range(n), rows)
    oracle = adjugate_inverse([[Fraction(x) for x in r] for r in rows])
    if oracle is None:
        with pytest.raises(Singular):
            invert(M)
        assert rank(M) < n
    else:
        assert invert(M).to_lists() == oracle


@given(st.integers(1, 4).flatmap(square), st.lists(small_ints, min_size=4, max_size=4))
def test_solve_affine_solutions_satisfy_system(rows, rhs):
    n = len(rows)
    A = QMat.square(range(n), rows)
    b = rhs[:n]
    sol = solve_affine(A, b)
    if sol.kind == NONE:
        assert rank(A) < n
        return
    assert list(A.apply(sol.particular)) == [Fraction(x) for x in b]
    for v in sol.nullspace_basis:
        assert all(x == 0 for x in A.apply(v))
    assert (sol.kind == UNIQUE) == (rank(A) == n)
    assert len(sol.nullspace_basis) == n - rank(A)


def test_family_member():
    A = QMat.square("ab", [[1, 1], [1, 1]])
    sol = solve_affine(A, [1, 1])
    assert sol.kind == FAMILY
    x = sol.member([Fraction(7, 3)])
    assert sum(x) == 1


def test_render_and_labels():
    M = QMat.square(["x", "y"], [[1, Fraction(-1, 2)], [0, 1]])
    assert M["x", "y"] == Fraction(-1, 2)
    assert M.render().splitlines()[1].split() == ["x", "1", "-1/2"]
    assert M.transpose()["y", "x"] == Fraction(-1, 2)

"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Matrices are dense and carry row/column labels so results
can be printed against a category's declared object order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import Singular

Rational = Fraction

NONE = "none"
UNIQUE = "unique"
FAMILY = "family"


def fmt(q) -> str:
    """Render a rational as ``p/q`` in lowest terms, or ``p`` when q = 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class QMat:
    """Dense rational matrix with labelled rows and columns."""

    rows: tuple
    cols: tuple
    data: tuple

    def __post_init__(self):
        if len(self.data) != len(self.rows):
            raise ValueError("row count does not match labels")
        for r in self.data:
            if len(r) != len(self.cols):
                raise ValueError("column count does not match labels")

    @classmethod
    def from_rows(cls, rows: Sequence, cols: Sequence, data: Iterable[Iterable]) -> "QMat":
        return cls(tuple(rows), tuple(cols), tuple(tuple(Fraction(x) for x in r) for r in data))

    @classmethod
    def square(cls, labels: Sequence, data: Iterable[Iterable]) -> "QMat":
        return cls.from_rows(labels, labels, data)

    @classmethod
    def identity(cls, labels: Sequence) -> "QMat":
        n = len(labels)
        return cls.square(labels, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, labels: Sequence, values: Sequence) -> "QMat":
        n = len(labels)
        return cls.square(labels, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def __getitem__(self, key) -> Fraction:
        r, c = key
        return self.data[self._row_index[r]][self._col_index[c]]

    @cached_property
    def _row_index(self) -> dict:
        return {x: i for i, x in enumerate(self.rows)}

    @cached_property
    def _col_index(self) -> dict:
        return {x: i for i, x in enumerate(self.cols)}

    def transpose(self) -> "QMat":
        return QMat(self.cols, self.rows, tuple(zip(*self.data)) if self.data else tuple(() for _ in self.cols))

    def __matmul__(self, other: "QMat") -> "QMat":
        if len(self.cols) != len(other.rows):
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = list(zip(*other.data)) if other.data else [() for _ in other.cols]
        out = []
        for row in self.data:
            out.append(tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in ocols))
        return QMat(self.rows, other.cols, tuple(out))

    def __add__(self, other: "QMat") -> "QMat":
        return QMat(self.rows, self.cols,
                    tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __sub__(self, other: "QMat") -> "QMat":
        return QMat(self.rows, self.cols,
                    tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def apply(self, vec: Sequence) -> tuple:
        return tuple(sum((a * Fraction(v) for a, v in zip(row, vec)), Fraction(0)) for row in self.data)

    def total(self) -> Fraction:
        return sum((x for r in self.data for x in r), Fraction(0))

    def row_sums(self) -> tuple:
        return tuple(sum(r, Fraction(0)) for r in self.data)

    def col_sums(self) -> tuple:
        return tuple(sum(c, Fraction(0)) for c in zip(*self.data)) if self.data else tuple(Fraction(0) for _ in self.cols)

    def submatrix(self, rows: Sequence, cols: Sequence) -> "QMat":
        ri, ci = self._row_index, self._col_index
        return QMat(tuple(rows), tuple(cols),
                    tuple(tuple(self.data[ri[r]][ci[c]] for c in cols) for r in rows))

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            x == (1 if i == j else 0) for i, r in enumerate(self.data) for j, x in enumerate(r))

    def to_lists(self) -> list:
        return [list(r) for r in self.data]

    def render(self) -> str:
        """Row-major text with a label header; entries as ``p/q``."""
        cells = [[fmt(x) for x in r] for r in self.data]
        rlab = [str(r) for r in self.rows]
        clab = [str(c) for c in self.cols]
        w0 = max([len(x) for x in rlab] + [1])
        widths = [max([len(clab[j])] + [len(cells[i][j]) for i in range(len(cells))]) for j in range(len(clab))]
        lines = [" " * w0 + "  " + "  ".join(c.rjust(w) for c, w in zip(clab, widths))]
        for lab, row in zip(rlab, cells):
            lines.append(lab.ljust(w0) + "  " + "  ".join(c.rjust(w) for c, w in zip(row, widths)))
        return "\n".join(lines).rstrip() + "\n"

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols),
                "entries": [[fmt(x) for x in r] for r in self.data]}


def rref(rows: list[list[Fraction]], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Pivots are the first nonzero entry found scanning down a column.  Only
    the first ``ncols`` columns are eligible as pivots (defaults to all).
    Returns the reduced rows and the pivot column of each nonzero row.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    width = len(m[0])
    ncols = width if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    m[i] = [a - f * b if b else a for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(A: QMat) -> int:
    return len(rref([list(r) for r in A.data])[1])


def invert(Z: QMat) -> QMat:
    """Exact inverse; raises :class:`Singular` with the rank otherwise.

    The result is checked on both sides before it is returned.
    """
    n, k = Z.shape
    if n != k:
        raise ValueError(f"cannot invert a {n}x{k} matrix")
    aug = [list(Z.data[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, piv = rref(aug, n)
    if len(piv) < n:
        raise Singular(len(piv), n)
    inv = QMat(Z.cols, Z.rows, tuple(tuple(row[n:]) for row in red))
    if not ((Z @ inv).is_identity() and (inv @ Z).is_identity()):
        raise AssertionError("inverse failed its two-sided check")
    return inv


@dataclass(frozen=True)
class AffineSolutionSet:
    """Solutions of ``A x = b``: none, exactly one, or an affine family.

    ``particular`` is absent for :data:`NONE`; ``nullspace_basis`` is empty
    unless the kind is :data:`FAMILY`.
    """

    kind: str
    labels: tuple
    particular: tuple | None = None
    nullspace_basis: tuple = field(default=())

    @property
    def exists(self) -> bool:
        return self.kind != NONE

    @property
    def unique(self) -> bool:
        return self.kind == UNIQUE

    def as_dict(self) -> dict:
        if self.particular is None:
            raise ValueError("no solution")
        return dict(zip(self.labels, self.particular))

    def member(self, coeffs: Sequence) -> tuple:
        """particular + sum(coeffs[i] * basis[i])."""
        if self.particular is None:
            raise ValueError("no solution")
        out = list(self.particular)
        for c, v in zip(coeffs, self.nullspace_basis):
            for i, x in enumerate(v):
                out[i] += Fraction(c) * x
        return tuple(out)

    def to_json(self) -> dict:
        d: dict = {"kind": self.kind, "labels": list(self.labels)}
        if self.particular is not None:
            d["particular"] = [fmt(x) for x in self.particular]
            d["nullspace_basis"] = [[fmt(x) for x in v] for v in self.nullspace_basis]
        return d


def solve_affine(A: QMat, b: Sequence) -> AffineSolutionSet:
    """Solve ``A x = b`` exactly and classify the solution set."""
    nrows, ncols = A.shape
    if len(b) != nrows:
        raise ValueError("right-hand side has the wrong length")
    aug = [list(A.data[i]) + [Fraction(b[i])] for i in range(nrows)]
    if nrows == 0:
        red, piv = [], []
    else:
        red, piv = rref(aug)
    if ncols in piv:
        return AffineSolutionSet(NONE, A.cols)
    part = [Fraction(0)] * ncols
    for row, c in zip(red, piv):
        part[c] = row[ncols]
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, c in zip(red, piv):
            v[c] = -row[fcol]
        basis.append(tuple(v))
    kind = UNIQUE if not basis else FAMILY
    return AffineSolutionSet(kind, A.cols, tuple(part), tuple(basis))

"""Exact linear algebra over the rationals for small dense matrices.

Everything here works on :class:`fractions.Fraction` entries; there is no
floating point anywhere.  Matrices are tiny (at most 16x20 in practice), so
plain Gauss-Jordan elimination is used throughout.

>>> m = RatMatrix([[1, 2], [2, 4]])
>>> rank(m)
1
>>> kernel_basis(m)
[(Fraction(1, 1), Fraction(-1, 2))]
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple of Fractions


class RatMatrix:
    """An immutable matrix of exact rationals."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(x if type(x) is Fraction else Fraction(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        self._rows = rows
        self._ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> RatMatrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> RatMatrix:
        if not columns:
            return cls.zeros(nrows or 0, 0)
        n = len(columns[0])
        return cls([[c[i] for c in columns] for i in range(n)], len(columns))

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self._ncols

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    @property
    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self._ncols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self._ncols, self._rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"RatMatrix([{body}])"

    def transpose(self) -> RatMatrix:
        return RatMatrix(self.columns, self.nrows)

    T = property(transpose)

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
            self._ncols,
        )

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self + (-other)

    def __neg__(self) -> RatMatrix:
        return RatMatrix([[-a for a in r] for r in self._rows], self._ncols)

    def scale(self, c) -> RatMatrix:
        c = Fraction(c)
        return RatMatrix([[c * a for a in r] for r in self._rows], self._ncols)

    def __rmul__(self, c) -> RatMatrix:
        return self.scale(c)

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self._ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns
        return RatMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._rows],
            other.ncols,
        )

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        if len(v) != self._ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * Fraction(b) for a, b in zip(r, v)), Fraction(0)) for r in self._rows)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self._rows for a in r)

    def flatten(self) -> Vector:
        return tuple(a for r in self._rows for a in r)

    def inverse(self) -> RatMatrix:
        n = self.nrows
        if n != self._ncols:
            raise ValueError("not square")
        aug = RatMatrix([r + tuple(int(i == j) for j in range(n)) for i, r in enumerate(self._rows)])
        red, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return RatMatrix([r[n:] for r in red.rows], n)

    def det(self) -> Fraction:
        n = self.nrows
        if n != self._ncols:
            raise ValueError("not square")
        m = [list(r) for r in self._rows]
        d = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d *= m[c][c]
            for i in range(c + 1, n):
                f = m[i][c] / m[c][c]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return d


def as_matrix(m) -> RatMatrix:
    return m if isinstance(m, RatMatrix) else RatMatrix(m)


def rref(m) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = as_matrix(m)
    a = [list(r) for r in m.rows]
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RatMatrix(a, ncols), pivots


def rank(m) -> int:
    return len(rref(m)[1])


def row_space_basis(vectors: Sequence[Sequence], dim: int | None = None) -> list[Vector]:
    """Canonical basis (nonzero rows of the RREF) of the span of ``vectors``."""
    vectors = list(vectors)
    if not vectors:
        return []
    red, pivots = rref(RatMatrix(vectors, dim))
    return [red.rows[i] for i in range(len(pivots))]


def kernel_basis(m) -> list[Vector]:
    """Basis of the right kernel, normalized to reduced echelon form."""
    m = as_matrix(m)
    red, pivots = rref(m)
    ncols = m.ncols
    free = [c for c in range(ncols) if c not in pivots]
    raw = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in enumerate(pivots):
            v[p] = -red[row, f]
        raw.append(v)
    return row_space_basis(raw, ncols)


def image_basis(m) -> list[Vector]:
    """Basis of the column space."""
    return row_space_basis(as_matrix(m).columns, as_matrix(m).nrows)


def _check_dims(a: Sequence[Sequence], b: Sequence[Sequence]) -> int | None:
    lengths = {len(v) for v in a} | {len(v) for v in b}
    if len(lengths) > 1:
        raise ValueError(f"vectors of different lengths: {sorted(lengths)}")
    return lengths.pop() if lengths else None


def span_dim(vectors: Sequence[Sequence]) -> int:
    vectors = list(vectors)
    return rank(RatMatrix(vectors)) if vectors else 0


def same_row_space(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """True iff the spans of ``a`` and ``b`` coincide."""
    _check_dims(a, b)
    ra, rb = span_dim(a), span_dim(b)
    return ra == rb and span_dim(list(a) + list(b)) == ra


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    _check_dims(vectors, [v])
    return span_dim(list(vectors) + [v]) == span_dim(vectors)


def solve(columns: Sequence[Sequence], target: Sequence) -> Vector | None:
    """Coefficients ``x`` with ``sum(x[i] * columns[i]) == target``, or None.

    When the columns are dependent the solution with free variables set to
    zero is returned.
    """
    _check_dims(columns, [target])
    n = len(columns)
    aug = RatMatrix.from_columns(list(columns) + [tuple(target)])
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in enumerate(pivots):
        x[p] = red[row, n]
    return tuple(x)


def intersection(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[Vector]:
    """Canonical basis of span(a) ∩ span(b)."""
    dim = _check_dims(a, b)
    a, b = list(a), list(b)
    if not a or not b:
        return []
    m = RatMatrix.from_columns(a + [tuple(-x for x in v) for v in b])
    vecs = []
    for k in kernel_basis(m):
        coeffs = k[: len(a)]
        vecs.append(tuple(sum((c * v[i] for c, v in zip(coeffs, a)), Fraction(0)) for i in range(dim)))
    return row_space_basis(vecs, dim)

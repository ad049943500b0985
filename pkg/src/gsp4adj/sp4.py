"""The Lie algebra sp(4) in the antidiagonal realization.

sp(4) = {X in gl(4) : X^t J + J X = 0} with J the antidiagonal form
(1, 1, -1, -1).  The fixed ordered basis is the eight root vectors followed by
the two torus generators h1 = diag(1,0,0,-1), h2 = diag(0,1,-1,0); every
10x10 matrix and coordinate vector in this package uses that ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .qlinalg import RatMatrix, kernel_basis, rank, same_row_space, solve

Sp4Element = RatMatrix


def mat4(entries: dict[tuple[int, int], int]) -> RatMatrix:
    """4x4 matrix from a sparse ``{(i, j): value}`` mapping."""
    return RatMatrix([[entries.get((i, j), 0) for j in range(4)] for i in range(4)])


def diag4(*d) -> RatMatrix:
    return mat4({(i, i): x for i, x in enumerate(d)})


J = mat4({(0, 3): 1, (1, 2): 1, (2, 1): -1, (3, 0): -1})

# root label -> (coefficient of e1, coefficient of e2)
ROOTS: dict[str, tuple[int, int]] = {
    "e1-e2": (1, -1),
    "-e1+e2": (-1, 1),
    "e1+e2": (1, 1),
    "-e1-e2": (-1, -1),
    "2e1": (2, 0),
    "-2e1": (-2, 0),
    "2e2": (0, 2),
    "-2e2": (0, -2),
}

ROOT_VECTORS: dict[str, RatMatrix] = {
    "e1-e2": mat4({(0, 1): 1, (2, 3): -1}),
    "-e1+e2": mat4({(1, 0): 1, (3, 2): -1}),
    "e1+e2": mat4({(0, 2): 1, (1, 3): 1}),
    "-e1-e2": mat4({(2, 0): 1, (3, 1): 1}),
    "2e1": mat4({(0, 3): 1}),
    "-2e1": mat4({(3, 0): 1}),
    "2e2": mat4({(1, 2): 1}),
    "-2e2": mat4({(2, 1): 1}),
}

H1 = diag4(1, 0, 0, -1)
H2 = diag4(0, 1, -1, 0)

BASIS_LABELS: tuple[str, ...] = tuple(ROOTS) + ("h1", "h2")
BASIS: tuple[RatMatrix, ...] = tuple(ROOT_VECTORS.values()) + (H1, H2)
TORUS_LABELS = ("h1", "h2")


def L(root: str) -> RatMatrix:
    return ROOT_VECTORS[root]


def is_sp4(x: RatMatrix) -> bool:
    return (x.T @ J + J @ x).is_zero()


def bracket(x: RatMatrix, y: RatMatrix) -> RatMatrix:
    return x @ y - y @ x


# Each basis element is read off from one entry; the supports are disjoint.
_PIVOTS = ((0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0), (1, 2), (2, 1), (0, 0), (1, 1))


def coordinates(x: RatMatrix) -> tuple[Fraction, ...]:
    """Coordinates of ``x`` in the fixed basis; ValueError if x is not in sp(4)."""
    coords = tuple(Fraction(x[i, j]) for i, j in _PIVOTS)
    if from_coordinates(coords) != x:
        raise ValueError("matrix does not lie in sp(4)")
    return coords


def solve_coordinates(x: RatMatrix) -> tuple[Fraction, ...] | None:
    """Coordinates by a general linear solve; the slow oracle for :func:`coordinates`."""
    return solve([b.flatten() for b in BASIS], x.flatten())


def from_coordinates(v: Sequence) -> RatMatrix:
    if len(v) != len(BASIS):
        raise ValueError("expected 10 coordinates")
    rows = [[Fraction(0)] * 4 for _ in range(4)]
    for c, b in zip(v, BASIS):
        if c:
            for i in range(4):
                for j in range(4):
                    if b[i, j]:
                        rows[i][j] += c * b[i, j]
    return RatMatrix(rows)


def torus_weight(x: RatMatrix, t: RatMatrix) -> Fraction | None:
    """The eigenvalue of ad(t) on x, or None when x is not an eigenvector."""
    y = bracket(t, x)
    for a, b in zip(x.flatten(), y.flatten()):
        if a != 0:
            lam = b / a
            return lam if y == x.scale(lam) else None
    return None


@dataclass(frozen=True)
class Nilpotent:
    """A nilpotent element of sp(4) used as the monodromy of a parameter.

    ``tag`` is one of Zero, N1..N5, or SiegelSym (then ``s`` holds the
    symmetric invertible 2x2 matrix S as a row tuple).
    """

    tag: str
    matrix: RatMatrix
    s: tuple | None = None

    def __repr__(self):
        return f"Nilpotent({self.tag})" if self.s is None else f"Nilpotent(SiegelSym, S={self.s})"

    @property
    def is_zero(self) -> bool:
        return self.matrix.is_zero()


ZERO = Nilpotent("Zero", RatMatrix.zeros(4, 4))
N1 = Nilpotent("N1", mat4({(1, 2): 1}))
N2 = Nilpotent("N2", mat4({(0, 3): 1}))
N3 = Nilpotent("N3", mat4({(0, 3): 1, (1, 2): 1}))
N4 = Nilpotent("N4", mat4({(0, 1): 1, (2, 3): -1}))
N5 = Nilpotent("N5", mat4({(0, 1): 1, (1, 2): 1, (2, 3): -1}))

STANDARD_NILPOTENTS = {n.tag: n for n in (ZERO, N1, N2, N3, N4, N5)}

W2 = RatMatrix([[0, 1], [1, 0]])


def _check_symmetric_invertible(s: RatMatrix) -> None:
    if s.shape != (2, 2):
        raise ValueError("S must be 2x2")
    if s[0, 1] != s[1, 0]:
        raise ValueError("S must be symmetric")
    if s.det() == 0:
        raise ValueError("S must be invertible")


def blocks(a: RatMatrix, b: RatMatrix, c: RatMatrix, d: RatMatrix) -> RatMatrix:
    """The 4x4 matrix [[a, b], [c, d]] from 2x2 blocks."""
    top = [ra + rb for ra, rb in zip(a.rows, b.rows)]
    bottom = [rc + rd for rc, rd in zip(c.rows, d.rows)]
    return RatMatrix(top + bottom)


def siegel_nilpotent(s) -> Nilpotent:
    """N = [[0, B], [0, 0]] with B = [[0,1],[1,0]] S."""
    s = s if isinstance(s, RatMatrix) else RatMatrix(s)
    _check_symmetric_invertible(s)
    z = RatMatrix.zeros(2, 2)
    n = blocks(z, W2 @ s, z, z)
    return Nilpotent("SiegelSym", n, s.rows)


def a0_matrix(s) -> RatMatrix:
    """The matrix A0 = w S diag(-1, 1) annihilated together with its partner by ad(N).

    It solves A0 B = -B w A0^t w for B = w S (w the 2x2 antidiagonal swap).
    """
    s = s if isinstance(s, RatMatrix) else RatMatrix(s)
    _check_symmetric_invertible(s)
    return W2 @ s @ RatMatrix([[-1, 0], [0, 1]])


def prime_dual(a: RatMatrix) -> RatMatrix:
    """A' = -w A^t w, the lower block making diag(A, A') lie in sp(4)."""
    return -(W2 @ a.T @ W2)


def a0_block(s) -> RatMatrix:
    a0 = a0_matrix(s)
    z = RatMatrix.zeros(2, 2)
    return blocks(a0, z, z, prime_dual(a0))


def ad_matrix(x: RatMatrix) -> RatMatrix:
    """Matrix of ad(x) on sp(4): column j is the coordinate vector of [x, basis_j]."""
    if not is_sp4(x):
        raise ValueError("element is not in sp(4)")
    return RatMatrix.from_columns([coordinates(bracket(x, b)) for b in BASIS])


def ad_in_basis(n: Nilpotent) -> RatMatrix:
    return ad_matrix(n.matrix)


# Reference spanning sets for the kernels of ad(N1)..ad(N5).
REFERENCE_KERNELS: dict[str, tuple[RatMatrix, ...]] = {
    "N1": (H1, L("2e1"), L("e1+e2"), L("2e2"), L("-e1+e2"), L("-2e1")),
    "N2": (H2, L("2e1"), L("e1+e2"), L("2e2"), L("-2e2"), L("e1-e2")),
    "N3": (L("2e1"), L("e1+e2"), L("2e2"), L("e1-e2") - L("-e1+e2")),
    "N4": (diag4(1, 1, -1, -1), L("-2e2"), L("e1-e2"), L("2e1")),
    "N5": (L("2e1"), L("2e2") + L("e1-e2")),
}


@lru_cache(maxsize=256)
def _kernel(matrix: RatMatrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(kernel_basis(ad_matrix(matrix)))


def kernel_coordinates(n: Nilpotent) -> list[tuple[Fraction, ...]]:
    """Normalized kernel basis of ad(n) in basis coordinates."""
    return list(_kernel(n.matrix))


def kernel_of_ad(n: Nilpotent) -> list[RatMatrix]:
    """A basis of ker(ad n), using the reference generators when their span agrees."""
    computed = kernel_coordinates(n)
    shown = REFERENCE_KERNELS.get(n.tag)
    if shown is not None:
        shown_coords = [coordinates(x) for x in shown]
        if same_row_space(computed, shown_coords):
            return list(shown)
    return [from_coordinates(v) for v in computed]


def ad_rank(n: Nilpotent) -> int:
    return rank(ad_in_basis(n))

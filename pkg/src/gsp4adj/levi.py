"""Invariant subspaces of sp(4) under the Siegel and Klingen Levi subgroups.

The Siegel Levi is {(A, x) -> diag(x A', A)} and the Klingen Levi is
{(A, t) -> diag(t, A, det(A)/t)}, with A in GL(2) and A' = w A^-t w.  Each
block of the tables below is an irreducible Levi module; its isomorphism
type det^k ⊗ Sym^m ⊗ x^b is read off from its torus weights, which is all
that is needed to evaluate the block on a parameter rho = (c mu, x).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import sp4
from .chars import Character
from .qlinalg import RatMatrix, in_span
from .sp4 import H1, H2, L, diag4

# Torus (A = diag(a1, a2), x) as exponent vectors of (a1, a2, x) on the four diagonal slots.
_TORUS = {
    "siegel": ((0, -1, 1), (-1, 0, 1), (1, 0, 0), (0, 1, 0)),
    "klingen": ((0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 1, -1)),
}


@dataclass(frozen=True)
class LeviBlock:
    label: str
    vectors: tuple[RatMatrix, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def coordinates(self) -> list[tuple]:
        return [sp4.coordinates(v) for v in self.vectors]


@dataclass(frozen=True)
class LeviBlockTable:
    kind: str
    blocks: tuple[LeviBlock, ...]

    def __iter__(self):
        return iter(self.blocks)

    @property
    def dim(self) -> int:
        return sum(b.dim for b in self.blocks)


SIEGEL_TABLE = LeviBlockTable(
    "siegel",
    (
        LeviBlock("trivial", (diag4(1, 1, -1, -1),)),
        LeviBlock("Ad∘μ", (L("-e1+e2"), diag4(1, -1, 1, -1), L("e1-e2"))),
        LeviBlock("(det⁻¹⊗Ad)⊗std", (L("2e2"), L("e1+e2"), L("2e1"))),
        LeviBlock("(det⊗Ad)⊗std⁻¹", (L("-2e1"), L("-e1-e2"), L("-2e2"))),
    ),
)

KLINGEN_TABLE = LeviBlockTable(
    "klingen",
    (
        LeviBlock("trivial", (H1,)),
        LeviBlock("Ad∘μ", (L("2e2"), H2, L("-2e2"))),
        LeviBlock("std∘μ twist", (L("e1+e2"), L("e1-e2"))),
        LeviBlock("std⊗det⁻¹ twist", (L("-e1+e2"), L("-e1-e2"))),
        LeviBlock("det", (L("2e1"),)),
        LeviBlock("det⁻¹", (L("-2e1"),)),
    ),
)

TABLES = {"siegel": SIEGEL_TABLE, "klingen": KLINGEN_TABLE}


def element_weight(kind: str, x: RatMatrix) -> tuple[int, int, int]:
    """Torus weight (exponents of a1, a2, x) of a weight vector; ValueError otherwise."""
    torus = _TORUS[kind]
    weights = set()
    for i in range(4):
        for j in range(4):
            if x[i, j] != 0:
                weights.add(tuple(p - q for p, q in zip(torus[i], torus[j])))
    if len(weights) != 1:
        raise ValueError("not a torus weight vector")
    return weights.pop()


@dataclass(frozen=True)
class BlockType:
    """det^k ⊗ Sym^m ⊗ x^b as a representation of GL(2) x GL(1)."""

    det_power: int
    sym_power: int
    gl1_power: int


def block_type(kind: str, block: LeviBlock) -> BlockType:
    weights = [element_weight(kind, v) for v in block.vectors]
    m = block.dim - 1
    bs = {w[2] for w in weights}
    if len(bs) != 1:
        raise ValueError(f"block {block.label}: GL(1) weight not constant")
    k = min(w[0] for w in weights)
    expected = sorted((k + i, k + m - i) for i in range(m + 1))
    if sorted((w[0], w[1]) for w in weights) != expected:
        raise ValueError(f"block {block.label}: weights are not a single Sym^{m} string")
    return BlockType(k, m, bs.pop())


@dataclass(frozen=True)
class BlockValue:
    """Evaluation of a block on rho: kind is 'char', 'ad' or 'std' with a twisting character."""

    kind: str
    character: Character
    degree: int


def evaluate(bt: BlockType, scale: Character, omega: Character, gl1: Character) -> BlockValue:
    """Value of det^k Sym^m x^b at A = scale * mu (det mu = omega) and x = gl1.

    Uses Sym^2 = det ⊗ Ad on GL(2).
    """
    k, m, b = bt.det_power, bt.sym_power, bt.gl1_power
    twist = scale ** (2 * k + m) * omega ** k * gl1 ** b
    if m == 0:
        return BlockValue("char", twist, 1)
    if m == 1:
        return BlockValue("std", twist, 2)
    if m == 2:
        return BlockValue("ad", twist * omega, 3)
    raise ValueError(f"unsupported Sym^{m}")


# ---------------------------------------------------------- random Levi


def _rand_q(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if q or not nonzero:
            return q


def random_gl2(rng: random.Random) -> RatMatrix:
    while True:
        a = RatMatrix([[_rand_q(rng) for _ in range(2)] for _ in range(2)])
        if a.det() != 0:
            return a


def levi_element(kind: str, a: RatMatrix, x: Fraction) -> RatMatrix:
    x = Fraction(x)
    if kind == "siegel":
        ap = sp4.W2 @ a.inverse().T @ sp4.W2
        z = RatMatrix.zeros(2, 2)
        return sp4.blocks(ap.scale(x), z, z, a)
    d = a.det()
    rows = [[x, 0, 0, 0], [0, a[0, 0], a[0, 1], 0], [0, a[1, 0], a[1, 1], 0], [0, 0, 0, d / x]]
    return RatMatrix(rows)


def random_levi_element(kind: str, rng: random.Random) -> RatMatrix:
    return levi_element(kind, random_gl2(rng), _rand_q(rng, nonzero=True))


def similitude(g: RatMatrix) -> Fraction | None:
    """lambda with g^t J g = lambda J, or None if g is not in GSp(4)."""
    m = g.T @ sp4.J @ g
    lam = m[0, 3]
    return lam if lam != 0 and m == sp4.J.scale(lam) else None


def preserved(block: LeviBlock, g: RatMatrix) -> bool:
    ginv = g.inverse()
    coords = block.coordinates()
    for v in block.vectors:
        w = g @ v @ ginv
        if not in_span(coords, sp4.coordinates(w)):
            return False
    return True

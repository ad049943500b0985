"""From a representation to its adjoint L-function.

Diagonal parameters: restrict Ad o rho to ker(ad N) and split the kernel
into weight lines.  Block parameters: intersect ker(ad N) with the Levi
block table and evaluate each block that survives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import levi, sp4
from .chars import Character
from .levi import TABLES
from .lfun import AdGL2Atom, CharAtom, LFunction, PoleReport, parse_lfunction, pole_order_at_one, pole_report
from .qlinalg import RatMatrix, in_span, intersection, same_row_space
from .reps import (
    Diagonal,
    KlingenBlock,
    RepSpec,
    SiegelBlock,
    WDParameter,
    build_parameter,
    conditions,
    l_packet,
    require_valid,
)
from .table2 import CELLS

_ROOT_LABELS = sp4.BASIS_LABELS[:8]


class UnsupportedParameter(ValueError):
    pass


# ---------------------------------------------------------- weight lines


def root_character(root: str, rho: Diagonal) -> Character:
    """alpha(rho) for the root n1 e1 + n2 e2, via the torus diag(a, b, l/b, l/a)."""
    n1, n2 = sp4.ROOTS[root]
    c1, c2 = rho.c[0], rho.c[1]
    lam = rho.similitude
    return c1 ** n1 * c2 ** n2 * lam ** Fraction(-(n1 + n2), 2)


def entry_character(i: int, j: int, rho: Diagonal) -> Character:
    """Character by which rho acts on the matrix unit E_ij under conjugation."""
    return rho.c[i] / rho.c[j]


@dataclass(frozen=True)
class WeightLine:
    vector: RatMatrix
    character: Character


def weight_line(x: RatMatrix, rho: Diagonal) -> WeightLine:
    """Classify a kernel vector; ValueError if it is not weight-homogeneous."""
    coords = sp4.coordinates(x)
    one = rho.c[0].group.one()
    found = set()
    for label, a in zip(sp4.BASIS_LABELS, coords):
        if a == 0:
            continue
        found.add(root_character(label, rho) if label in _ROOT_LABELS else one)
    if len(found) != 1:
        raise ValueError(f"kernel vector is not weight-homogeneous: {sorted(map(str, found))}")
    return WeightLine(x, found.pop())


def adjoint_diagonal_lines(param: WDParameter) -> list[WeightLine]:
    rho = param.semisimple
    if not isinstance(rho, Diagonal):
        raise TypeError("diagonal parameter expected")
    return [weight_line(x, rho) for x in sp4.kernel_of_ad(param.nilpotent)]


def adjoint_diagonal(param: WDParameter) -> LFunction:
    return LFunction(CharAtom(w.character) for w in adjoint_diagonal_lines(param))


# ---------------------------------------------------------------- blocks


@dataclass(frozen=True)
class BlockContribution:
    label: str
    kernel_dim: int
    atom: CharAtom | AdGL2Atom | None
    suppressed_degree: int = 0


def _block_data(rho: SiegelBlock | KlingenBlock):
    kind = "siegel" if isinstance(rho, SiegelBlock) else "klingen"
    return kind, TABLES[kind]


def block_values(rho: SiegelBlock | KlingenBlock) -> list[tuple[levi.LeviBlock, levi.BlockValue]]:
    kind, table = _block_data(rho)
    omega = rho.pi.central_character
    return [
        (b, levi.evaluate(levi.block_type(kind, b), rho.gl2_scale, omega, rho.gl1)) for b in table
    ]


def _atom(value: levi.BlockValue, rho) -> tuple[CharAtom | AdGL2Atom | None, int]:
    if value.kind == "char":
        return CharAtom(value.character), 0
    if value.kind == "ad":
        return AdGL2Atom.of(rho.pi, value.character), 0
    # std blocks give L(s, pi x chi) = 1 since pi is supercuspidal.
    return None, value.degree


def block_admissibility(param: WDParameter) -> list[str]:
    """Check rho N rho^-1 = nu N block-wise: N must sit in a block on which rho can act by nu."""
    rho = param.semisimple
    n = param.nilpotent.matrix
    if n.is_zero():
        return []
    nu = rho.pi.group.nu(1)
    target = sp4.coordinates(n)
    for b, value in block_values(rho):
        if not in_span(b.coordinates(), target):
            continue
        if value.kind == "char" and value.character == nu:
            return []
        if value.kind == "ad" and any(value.character / nu == q for q in rho.pi.self_twist_characters()):
            return []
        return [f"rho does not act on N's block {b.label} by nu"]
    return ["N does not lie in a single Levi block"]


def adjoint_block_contributions(param: WDParameter) -> list[BlockContribution]:
    rho = param.semisimple
    if not isinstance(rho, (SiegelBlock, KlingenBlock)):
        raise TypeError("block parameter expected")
    problems = block_admissibility(param)
    if problems:
        raise UnsupportedParameter("; ".join(problems))
    kernel = sp4.kernel_coordinates(param.nilpotent)
    out = []
    partial = []
    for b, value in block_values(rho):
        inter = intersection(b.coordinates(), kernel)
        if not inter:
            continue
        if len(inter) < b.dim:
            partial += inter
            continue
        atom, suppressed = _atom(value, rho)
        out.append(BlockContribution(b.label, b.dim, atom, suppressed))
    covered = sum(c.kernel_dim for c in out) + len(partial)
    if covered != len(kernel):
        raise UnsupportedParameter("kernel is not a sum of its block intersections")
    if partial:
        out.append(_a0_line(param, partial))
    return out


def _a0_line(param: WDParameter, partial: list) -> BlockContribution:
    """The line through diag(A0, A0') for the Siegel nilpotent; the torus acts on it by xi."""
    rho = param.semisimple
    n = param.nilpotent
    if not (isinstance(rho, SiegelBlock) and n.tag == "SiegelSym" and rho.self_twist is not None):
        raise UnsupportedParameter(f"partial block intersection for nilpotent {n.tag}")
    line = [sp4.coordinates(sp4.a0_block(n.s))]
    if not same_row_space(partial, line):
        raise UnsupportedParameter("partial intersection is not the A0 line")
    return BlockContribution("A0 line", 1, CharAtom(rho.self_twist))


def adjoint_block(param: WDParameter) -> LFunction:
    return LFunction(c.atom for c in adjoint_block_contributions(param) if c.atom is not None)


# -------------------------------------------------------------- pipeline


@dataclass(frozen=True)
class Derivation:
    lfunction: LFunction
    kernel_dim: int
    suppressed: tuple[tuple[str, int], ...] = ()
    lines: tuple = field(default=(), repr=False)

    @property
    def suppressed_degree(self) -> int:
        return sum(d for _, d in self.suppressed)

    @property
    def total_degree(self) -> int:
        return self.lfunction.degree + self.suppressed_degree


def derive_with_provenance(spec: RepSpec) -> Derivation:
    param = build_parameter(spec)
    kdim = len(sp4.kernel_coordinates(param.nilpotent))
    if isinstance(param.semisimple, Diagonal):
        lines = adjoint_diagonal_lines(param)
        lf = LFunction(CharAtom(w.character) for w in lines)
        return Derivation(lf, kdim, (), tuple(lines))
    contribs = adjoint_block_contributions(param)
    lf = LFunction(c.atom for c in contribs if c.atom is not None)
    suppressed = tuple((c.label, c.suppressed_degree) for c in contribs if c.suppressed_degree)
    return Derivation(lf, kdim, suppressed, tuple(contribs))


def derive(spec: RepSpec, gsp: bool = False) -> LFunction:
    """Adjoint L-function on sp(4); ``gsp=True`` adds the trivial atom of the centre of gsp(4)."""
    lf = derive_with_provenance(spec).lfunction
    if gsp:
        lf = lf * LFunction([CharAtom(spec.group.one())])
    return lf


def _cell_env(spec: RepSpec) -> dict[str, Character]:
    env = dict(spec.chars)
    if spec.pi is not None:
        env["omega_pi"] = spec.pi.central_character
    return env


def table2_closed_form(spec: RepSpec) -> LFunction:
    """The tabulated closed form for the row, instantiated at the spec's inputs."""
    require_valid(spec)
    pis = {"pi": spec.pi} if spec.pi is not None else {}
    return parse_lfunction(CELLS[spec.case], spec.group, pis, format="latex", env=_cell_env(spec))


def spec_pole_report(spec: RepSpec, lf: LFunction | None = None) -> PoleReport:
    lf = derive(spec) if lf is None else lf
    return pole_report(lf, spec.free_symbols(), conditions(spec))


@dataclass(frozen=True)
class GPRVerdict:
    holomorphic_at_1: bool
    packet_has_generic: bool
    theorem_holds: bool
    branch_results: tuple[tuple[str, bool], ...] = ()


def gpr_verdict(spec: RepSpec) -> GPRVerdict:
    """Holomorphy at s=1 against the existence of a generic packet member.

    The criterion is checked for the general-position inputs and again on every
    admissible degenerate branch of the pole report.
    """
    report = spec_pole_report(spec)
    generic = l_packet(spec).contains_generic
    holo = report.generic_order == 0
    branches = tuple((b.description, (b.order == 0) == generic) for b in report.branches)
    holds = (holo == generic) and all(ok for _, ok in branches)
    return GPRVerdict(holo, generic, holds, branches)


def pole_order(spec: RepSpec) -> int:
    return pole_order_at_one(derive(spec))

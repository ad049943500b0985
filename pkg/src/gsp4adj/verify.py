"""Self-contained verification suite behind ``gsp4adj verify``.

Every check is exact; randomized checks draw from ``random.Random(seed)``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import levi, sp4
from .chars import CharacterGroup, SupercuspidalGL2, format_character, substitute
from .engine import (
    block_admissibility,
    derive,
    derive_with_provenance,
    gpr_verdict,
    spec_pole_report,
    table2_closed_form,
)
from .lfun import AdGL2Atom, CharAtom, LFunction, parse_lfunction, render
from .qlinalg import RatMatrix, in_span, kernel_basis, rank, same_row_space
from .reps import (
    CASES,
    Diagonal,
    build_parameter,
    central_character,
    default_spec,
    diagonal_admissibility,
    twist,
)
from .table2 import CELLS, ORDERS

DEFAULT_SEED = 20240611
KERNEL_DIMS = {"Zero": 10, "N1": 6, "N2": 6, "N3": 4, "N4": 4, "N5": 2}


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.3f}s)"


# --------------------------------------------------------------- random data


def random_rational(rng: random.Random, lo: int = -6, hi: int = 6, den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_character(group: CharacterGroup, rng: random.Random, names=("a", "b", "c"), torsion=("q",)):
    """nu^r times a random monomial in free symbols ``names`` and order-2 symbols ``torsion``."""
    c = group.nu(random_rational(rng))
    for n in names:
        c = c * group.symbol(n) ** rng.randint(-3, 3)
    for t in torsion:
        c = c * group.symbol(t, 2) ** rng.randint(0, 1)
    return c


def random_symmetric_invertible(rng: random.Random) -> RatMatrix:
    while True:
        a, b, d = (random_rational(rng, -5, 5, 3) for _ in range(3))
        s = RatMatrix([[a, b], [b, d]])
        if s.det() != 0:
            return s


def random_matrix(rng: random.Random, rows: int, cols: int) -> RatMatrix:
    # Sparse-ish entries so that rank deficiency actually occurs.
    return RatMatrix(
        [[random_rational(rng) if rng.random() < 0.4 else Fraction(0) for _ in range(cols)] for _ in range(rows)]
    )


# ------------------------------------------------------------------- checks


def check_table(seed: int) -> tuple[bool, str]:
    bad = []
    for case in CASES:
        spec = default_spec(case)
        derived = derive(spec)
        closed = table2_closed_form(spec)
        if derived != closed:
            bad.append(f"{case}: derived {render(derived)} != {render(closed)}")
            continue
        tex = render(derived, "latex")
        pis = {"pi": spec.pi} if spec.pi else {}
        # The rendered row and the literal cell must agree once both are put in canonical order.
        cell = parse_lfunction(CELLS[case], spec.group, pis, "latex", env=_env(spec))
        if tex != render(cell, "latex") or parse_lfunction(tex, spec.group, pis, "latex") != derived:
            bad.append(f"{case}: LaTeX mismatch")
    return not bad, "; ".join(bad) or f"{len(CASES)} rows equal, LaTeX rows match"


def _env(spec):
    env = dict(spec.chars)
    if spec.pi is not None:
        env["omega_pi"] = spec.pi.central_character
    return env


def check_poles(seed: int) -> tuple[bool, str]:
    bad = []
    for case in CASES:
        report = spec_pole_report(default_spec(case))
        if report.order_text() != ORDERS[case]:
            bad.append(f"{case}: {report.order_text()} != {ORDERS[case]}")
    report = spec_pole_report(default_spec("IIIb"))
    branches = sorted((b.description, b.order) for b in report.branches)
    if report.generic_order != 1 or branches != [("chi=nu", 2), ("chi=nu^-1", 2)]:
        bad.append(f"IIIb branches {branches}")
    return not bad, "; ".join(bad) or "all orders match; IIIb: generic 1, chi=nu^±1 -> 2"


def check_gpr(seed: int) -> tuple[bool, str]:
    bad = []
    n_branches = 0
    for case in CASES:
        v = gpr_verdict(default_spec(case))
        n_branches += len(v.branch_results)
        if not v.theorem_holds:
            bad.append(case)
    return not bad, f"fails for {bad}" if bad else f"holds for {len(CASES)} rows and {n_branches} branch(es)"


def check_kernels(seed: int) -> tuple[bool, str]:
    bad = []
    for tag, expected in KERNEL_DIMS.items():
        n = sp4.STANDARD_NILPOTENTS[tag]
        k = sp4.kernel_coordinates(n)
        if len(k) != expected or rank(sp4.ad_in_basis(n)) != 10 - expected:
            bad.append(f"{tag}: dim {len(k)}")
        shown = sp4.REFERENCE_KERNELS.get(tag)
        if shown is not None and not same_row_space(k, [sp4.coordinates(x) for x in shown]):
            bad.append(f"{tag}: span differs from the reference generators")
    return not bad, "; ".join(bad) or "dims " + ", ".join(f"{t}:{d}" for t, d in KERNEL_DIMS.items())


def check_siegel_nilpotent(seed: int, trials: int = 100) -> tuple[bool, str]:
    rng = random.Random(seed)
    required = [sp4.L("2e1"), sp4.L("e1+e2"), sp4.L("2e2")]
    for i in range(trials):
        s = random_symmetric_invertible(rng)
        n = sp4.siegel_nilpotent(s)
        b = sp4.W2 @ s
        a0 = sp4.a0_matrix(s)
        if a0.is_zero() or a0 @ b != -(b @ sp4.W2 @ a0.T @ sp4.W2):
            return False, f"A0 relation fails for S={s.rows}"
        ad = sp4.ad_in_basis(n)
        k = kernel_basis(ad)
        if len(k) != 4 or rank(ad) != 6:
            return False, f"dims {len(k)}/{rank(ad)} for S={s.rows}"
        for x in required + [sp4.a0_block(s)]:
            if not in_span(k, sp4.coordinates(x)):
                return False, f"kernel misses an expected element for S={s.rows}"
    return True, f"{trials} random S: relation, dim ker 4, dim im 6, containments"


def check_admissibility(seed: int) -> tuple[bool, str]:
    bad = []
    for case in CASES:
        param = build_parameter(default_spec(case))
        if isinstance(param.semisimple, Diagonal):
            problems = diagonal_admissibility(param)
        else:
            problems = block_admissibility(param)
        if problems:
            bad.append(f"{case}: {problems}")
    return not bad, "; ".join(bad) or f"{len(CASES)} parameters admissible"


def check_twists(seed: int, per_case: int = 20) -> tuple[bool, str]:
    rng = random.Random(seed)
    for case in CASES:
        spec = default_spec(case)
        base = derive(spec)
        cc = central_character(spec)
        for _ in range(per_case):
            tau = random_character(spec.group, rng, names=("tau",), torsion=("eps",))
            t = twist(spec, tau)
            if t.case != spec.case or derive(t) != base:
                return False, f"{case}: L-function changes under tau={tau}"
            if central_character(t) != tau ** 2 * cc:
                return False, f"{case}: central character of twist by {tau}"
    return True, f"{len(CASES)} cases x {per_case} twists"


def check_levi(seed: int, trials: int = 50) -> tuple[bool, str]:
    rng = random.Random(seed)
    for kind, table in levi.TABLES.items():
        if table.dim != 10:
            return False, f"{kind} dims sum to {table.dim}"
        for _ in range(trials):
            g = levi.random_levi_element(kind, rng)
            if levi.similitude(g) is None:
                return False, f"{kind}: Levi element outside GSp(4)"
            for b in table:
                if not levi.preserved(b, g):
                    return False, f"{kind}: block {b.label} not preserved"
    return True, f"siegel and klingen: dims sum to 10, {trials} conjugations each"


def check_degrees(seed: int) -> tuple[bool, str]:
    bad = []
    for case in CASES:
        d = derive_with_provenance(default_spec(case))
        if d.total_degree != d.kernel_dim:
            bad.append(f"{case}: {d.total_degree} != {d.kernel_dim}")
    return not bad, "; ".join(bad) or "atom + suppressed degrees = dim ker(ad N) for all rows"


def check_properties(seed: int, trials: int = 200) -> tuple[bool, str]:
    rng = random.Random(seed)
    g = CharacterGroup("properties")
    one = g.one()
    g.register("q", 2)
    pi = SupercuspidalGL2("pi", g.symbol("w"), frozenset({"q"}))
    for i in range(trials):
        a, b, c = (random_character(g, rng) for _ in range(3))
        if not ((a * b) * c == a * (b * c) and a * one == a and a * a.inverse() == one and a * b == b * a):
            return False, f"group axioms fail at {a}, {b}, {c}"
        assignment = {"a": random_character(g, rng, names=("b", "c"), torsion=()), "q": g.symbol("r", 2)}
        if substitute(a * b, assignment) != substitute(a, assignment) * substitute(b, assignment):
            return False, f"substitution is not multiplicative at {a}, {b}"
        if g.parse(format_character(a)) != a:
            return False, f"character text round trip fails for {a}"
        atoms = [CharAtom(random_character(g, rng)) for _ in range(rng.randint(0, 5))]
        atoms += [AdGL2Atom.of(pi, random_character(g, rng)) for _ in range(rng.randint(0, 2))]
        lf = LFunction(atoms + atoms[: rng.randint(0, len(atoms))])
        for fmt in ("plain", "latex"):
            if parse_lfunction(render(lf, fmt), g, [pi], fmt) != lf:
                return False, f"{fmt} round trip fails for {render(lf)}"
        m = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        if rank(m) + len(kernel_basis(m)) != m.ncols:
            return False, f"rank-nullity fails for {m.rows}"
    return True, f"{trials} instances each: group axioms, substitution, round trips, rank-nullity"


CHECKS: list[tuple[int, str, Callable[[int], tuple[bool, str]]]] = [
    (1, "table reproduction", check_table),
    (2, "pole orders", check_poles),
    (3, "genericity criterion", check_gpr),
    (4, "kernel oracle", check_kernels),
    (5, "Siegel nilpotent linear algebra", check_siegel_nilpotent),
    (6, "parameter admissibility", check_admissibility),
    (7, "twist invariance", check_twists),
    (8, "Levi decomposition", check_levi),
    (9, "degree bookkeeping", check_degrees),
    (10, "property suites", check_properties),
]

SCOPES = {
    "all": tuple(range(1, 11)),
    "linalg": (4, 5, 8, 10),
    "tables": (1, 2, 6, 9),
    "gpr": (3,),
    "twist": (7,),
}


def run_check(number: int, seed: int = DEFAULT_SEED) -> CheckResult:
    _, name, fn = CHECKS[number - 1]
    start = time.perf_counter()
    try:
        passed, detail = fn(seed)
    except Exception as exc:  # a crash is a failure, reported rather than raised
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(number, name, passed, detail, time.perf_counter() - start)


def run(scope: str = "all", seed: int = DEFAULT_SEED) -> list[CheckResult]:
    return [run_check(n, seed) for n in SCOPES[scope]]

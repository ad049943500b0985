"""Catalogue of the non-supercuspidal representations of GSp(4, F).

Each case tag (I, IIa, ..., XIb) is a row of the Sally-Tadic classification.
A :class:`RepSpec` holds the row's inputs: characters keyed by role
(``chi1``, ``chi2``, ``chi``, ``sigma``, ``xi``) and, for cases VII-XI, a
supercuspidal ``pi``.  :func:`build_parameter` returns its L-parameter
(rho, N) as a :class:`WDParameter`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping

from . import sp4
from .chars import Character, CharacterGroup, SupercuspidalGL2, substitute
from .qlinalg import RatMatrix

CASES: tuple[str, ...] = (
    "I", "IIa", "IIb", "IIIa", "IIIb", "IVa", "IVb", "IVc", "IVd",
    "Va", "Vb", "Vc", "Vd", "VIa", "VIb", "VIc", "VId",
    "VII", "VIIIa", "VIIIb", "IXa", "IXb", "X", "XIa", "XIb",
)

GENERIC = frozenset({"I", "IIa", "IIIa", "IVa", "Va", "VIa", "VII", "VIIIa", "IXa", "X", "XIa"})


def family(case: str) -> str:
    return case.rstrip("abcd")


# Character roles required by each family, and whether a supercuspidal is needed.
ROLES: dict[str, tuple[str, ...]] = {
    "I": ("chi1", "chi2", "sigma"),
    "II": ("chi", "sigma"),
    "III": ("chi", "sigma"),
    "IV": ("sigma",),
    "V": ("xi", "sigma"),
    "VI": ("sigma",),
    "VII": ("chi",),
    "VIII": (),
    "IX": ("xi",),
    "X": ("sigma",),
    "XI": ("sigma",),
}
NEEDS_PI = frozenset({"VII", "VIII", "IX", "X", "XI"})
# Cases twisted through the supercuspidal rather than through sigma.
TWIST_THROUGH_PI = frozenset({"VII", "VIII", "IX"})
TORSION_ROLES = {"xi": 2}


class ValidationError(ValueError):
    def __init__(self, case: str, violations: list[str]):
        self.case = case
        self.violations = list(violations)
        super().__init__(f"{case}: violated conditions: {', '.join(self.violations)}")


# ------------------------------------------------------------ conditions


@dataclass(frozen=True)
class NotAmong:
    """lhs is none of ``excluded``."""

    lhs: Character
    excluded: tuple[Character, ...]
    label: str

    def holds(self, assignment: Mapping[str, Character] = {}) -> bool:
        lhs = substitute(self.lhs, assignment)
        return all(lhs != substitute(x, assignment) for x in self.excluded)


@dataclass(frozen=True)
class Equals:
    lhs: Character
    rhs: Character
    label: str

    def holds(self, assignment: Mapping[str, Character] = {}) -> bool:
        return substitute(self.lhs, assignment) == substitute(self.rhs, assignment)


@dataclass(frozen=True)
class IsSelfTwist:
    """xi pi ~ pi, i.e. xi is one of pi's recorded quadratic self-twists."""

    xi: Character
    pi: SupercuspidalGL2
    label: str

    def holds(self, assignment: Mapping[str, Character] = {}) -> bool:
        xi = substitute(self.xi, assignment)
        return any(xi == q for q in self.pi.self_twist_characters())


def _pm(c: Character, r) -> tuple[Character, Character]:
    g = c.group
    return (c * g.nu(r), c * g.nu(-r))


# ------------------------------------------------------------------ specs


@dataclass(frozen=True)
class RepSpec:
    case: str
    chars: tuple[tuple[str, Character], ...]
    pi: SupercuspidalGL2 | None = None
    siegel_s: tuple | None = None

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        object.__setattr__(self, "chars", tuple(sorted(dict(self.chars).items())))

    def __getitem__(self, role: str) -> Character:
        return dict(self.chars)[role]

    def get(self, role: str) -> Character | None:
        return dict(self.chars).get(role)

    @property
    def family(self) -> str:
        return family(self.case)

    @property
    def group(self) -> CharacterGroup:
        if self.chars:
            return self.chars[0][1].group
        return self.pi.group

    def with_chars(self, **updates: Character) -> RepSpec:
        chars = dict(self.chars)
        chars.update(updates)
        return replace(self, chars=tuple(chars.items()))

    def substitute(self, assignment: Mapping[str, Character]) -> RepSpec:
        chars = tuple((k, substitute(v, assignment)) for k, v in self.chars)
        pi = self.pi.substitute(assignment) if self.pi is not None else None
        return replace(self, chars=chars, pi=pi)

    def free_symbols(self) -> list[str]:
        """Infinite-order generator symbols occurring in the inputs."""
        names = []
        values = [c for _, c in self.chars]
        if self.pi is not None:
            values.append(self.pi.central_character)
        for c in values:
            for n in c.symbols:
                if c.group.order(n) is None and n not in names:
                    names.append(n)
        return names


def make_spec(
    case: str,
    group: CharacterGroup | None = None,
    pi: SupercuspidalGL2 | None = None,
    siegel_s=None,
    **chars: Character,
) -> RepSpec:
    """Spec with missing inputs filled by generic symbols named after their role.

    A missing supercuspidal is ``pi`` with central character ``omega_pi``
    (trivial for case XI) and self-twist ``xi`` for case IX.
    """
    if group is None:
        for c in chars.values():
            group = c.group
            break
        else:
            group = pi.group if pi is not None else CharacterGroup()
    fam = family(case)
    for role in ROLES[fam]:
        if role not in chars:
            chars[role] = group.symbol(role, TORSION_ROLES.get(role))
    if fam in NEEDS_PI and pi is None:
        omega = group.one() if fam == "XI" else group.symbol("omega_pi")
        twists = {chars["xi"].symbols[0]} if fam == "IX" and chars["xi"].symbols else set()
        pi = SupercuspidalGL2("pi", omega, frozenset(twists))
    if case == "IXa" and siegel_s is None:
        siegel_s = ((1, 0), (0, 1))
    if siegel_s is not None:
        siegel_s = tuple(tuple(Fraction(x) for x in row) for row in siegel_s)
    return RepSpec(case, tuple(chars.items()), pi if fam in NEEDS_PI else None, siegel_s)


def conditions(spec: RepSpec) -> list:
    """The row's conditions, as checkable objects carrying their labels."""
    fam = spec.family
    g = spec.group
    one = g.one()
    out = []
    if fam == "I":
        c1, c2 = spec["chi1"], spec["chi2"]
        out += [
            NotAmong(c1, _pm(one, 1), "χ₁≠ν^{±1}"),
            NotAmong(c2, _pm(one, 1), "χ₂≠ν^{±1}"),
            NotAmong(c1, _pm(c2, 1) + _pm(c2.inverse(), 1), "χ₁≠ν^{±1}χ₂^{±1}"),
        ]
    elif fam == "II":
        chi = spec["chi"]
        out += [
            NotAmong(chi ** 2, _pm(one, 1), "χ²≠ν^{±1}"),
            NotAmong(chi, _pm(one, Fraction(3, 2)), "χ≠ν^{±3/2}"),
        ]
    elif fam == "III":
        out.append(NotAmong(spec["chi"], (one,) + _pm(one, 2), "χ∉{1,ν^{±2}}"))
    elif fam == "V":
        xi = spec["xi"]
        out += [Equals(xi ** 2, one, "ξ²=1"), NotAmong(xi, (one,), "ξ≠1")]
    elif fam == "VII":
        chi = spec["chi"]
        excluded = (one,)
        for q in spec.pi.self_twist_characters():
            excluded += _pm(q, 1)
        out.append(NotAmong(chi, excluded, "χ⋊π irreducible"))
    elif fam == "IX":
        xi = spec["xi"]
        out += [
            Equals(xi ** 2, one, "ξ²=1"),
            NotAmong(xi, (one,), "ξ≠1"),
            IsSelfTwist(xi, spec.pi, "ξπ=π"),
        ]
    elif fam == "X":
        out.append(NotAmong(spec.pi.central_character, _pm(one, 1), "ω_π≠ν^{±1}"))
    elif fam == "XI":
        out.append(Equals(spec.pi.central_character, one, "ω_π=1"))
    return out


def validate(spec: RepSpec) -> list[str]:
    """Labels of all violated conditions; an empty list means the spec is valid."""
    fam = spec.family
    problems = [f"missing input {r}" for r in ROLES[fam] if spec.get(r) is None]
    if (spec.pi is None) == (fam in NEEDS_PI):
        problems.append("supercuspidal pi required" if fam in NEEDS_PI else "unexpected pi")
    if problems:
        return problems
    if spec.case == "IXa":
        try:
            sp4.siegel_nilpotent(spec.siegel_s)
        except (ValueError, TypeError):
            problems.append("S symmetric invertible")
    return problems + [c.label for c in conditions(spec) if not c.holds()]


def require_valid(spec: RepSpec) -> None:
    violations = validate(spec)
    if violations:
        raise ValidationError(spec.case, violations)


# -------------------------------------------------------------- parameters


@dataclass(frozen=True)
class Diagonal:
    """rho = diag(c1, c2, c3, c4)."""

    c: tuple[Character, Character, Character, Character]

    @property
    def similitude(self) -> Character:
        return self.c[0] * self.c[3]


@dataclass(frozen=True)
class SiegelBlock:
    """rho = diag(top * det(mu) * mu', bottom * mu), mu the parameter of pi.

    ``self_twist`` is the quadratic character attached to the symmetric
    matrix S when the monodromy is the symbolic Siegel nilpotent.
    """

    pi: SupercuspidalGL2
    top: Character
    bottom: Character
    self_twist: Character | None = None

    @property
    def gl2_scale(self) -> Character:
        return self.bottom

    @property
    def gl1(self) -> Character:
        # Coordinate x under (A, x) -> diag(x A', A) with A = bottom * mu.
        return self.top * self.bottom * self.pi.central_character

    @property
    def similitude(self) -> Character:
        return self.gl1


@dataclass(frozen=True)
class KlingenBlock:
    """rho = diag(sigma * omega_pi * nu^s, sigma * mu, sigma * nu^-s)."""

    pi: SupercuspidalGL2
    sigma: Character
    nu_shift: Fraction = Fraction(0)

    @property
    def gl2_scale(self) -> Character:
        return self.sigma

    @property
    def gl1(self) -> Character:
        # Coordinate t under diag(t, A, det(A)/t) with A = sigma * mu.
        return self.sigma * self.pi.central_character * self.sigma.group.nu(self.nu_shift)

    @property
    def similitude(self) -> Character:
        return self.sigma ** 2 * self.pi.central_character


@dataclass(frozen=True)
class WDParameter:
    semisimple: Diagonal | SiegelBlock | KlingenBlock
    nilpotent: sp4.Nilpotent = field(default=sp4.ZERO)

    @property
    def similitude(self) -> Character:
        return self.semisimple.similitude


_DIAGONAL_N = {
    "II": {"a": sp4.N1, "b": sp4.ZERO},
    "III": {"a": sp4.N4, "b": sp4.ZERO},
    "IV": {"a": sp4.N5, "b": sp4.N4, "c": sp4.N1, "d": sp4.ZERO},
    "V": {"a": sp4.N3, "b": sp4.N2, "c": sp4.N2, "d": sp4.ZERO},
    "VI": {"a": sp4.N3, "b": sp4.N3, "c": sp4.N1, "d": sp4.ZERO},
}


def build_parameter(spec: RepSpec) -> WDParameter:
    require_valid(spec)
    fam, sub = spec.family, spec.case[len(spec.family):]
    g = spec.group
    nu = g.nu
    half = Fraction(1, 2)
    if fam == "I":
        c1, c2, s = spec["chi1"], spec["chi2"], spec["sigma"]
        return WDParameter(Diagonal((c1 * c2 * s, c1 * s, c2 * s, s)))
    if fam in _DIAGONAL_N:
        s = spec["sigma"]
        if fam == "II":
            chi = spec["chi"]
            c = (chi ** 2 * s, nu(half) * chi * s, nu(-half) * chi * s, s)
        elif fam == "III":
            chi = spec["chi"]
            c = (nu(half) * chi * s, nu(-half) * chi * s, nu(half) * s, nu(-half) * s)
        elif fam == "IV":
            c = (nu(Fraction(3, 2)) * s, nu(half) * s, nu(-half) * s, nu(Fraction(-3, 2)) * s)
        elif fam == "V":
            xi = spec["xi"]
            if sub == "b":
                # Vb is the xi-twist of Vc.
                s = s * xi
            c = (nu(half) * s, nu(half) * xi * s, nu(-half) * xi * s, nu(-half) * s)
        else:
            c = (nu(half) * s, nu(half) * s, nu(-half) * s, nu(-half) * s)
        return WDParameter(Diagonal(c), _DIAGONAL_N[fam][sub])
    pi = spec.pi
    if fam == "VII":
        return WDParameter(SiegelBlock(pi, spec["chi"], g.one()))
    if fam == "VIII":
        return WDParameter(SiegelBlock(pi, g.one(), g.one()))
    if fam == "IX":
        xi = spec["xi"]
        if sub == "a":
            return WDParameter(
                SiegelBlock(pi, xi * nu(half), nu(-half), self_twist=xi),
                sp4.siegel_nilpotent(spec.siegel_s),
            )
        return WDParameter(SiegelBlock(pi, xi * nu(half), nu(-half)))
    if fam == "X":
        return WDParameter(KlingenBlock(pi, spec["sigma"]))
    if fam == "XI":
        n = sp4.N2 if sub == "a" else sp4.ZERO
        return WDParameter(KlingenBlock(pi, spec["sigma"], half), n)
    raise AssertionError(spec.case)


def diagonal_admissibility(param: WDParameter) -> list[str]:
    """Entry-wise check of rho N rho^-1 = nu N and of c1 c4 = c2 c3."""
    d = param.semisimple
    if not isinstance(d, Diagonal):
        raise TypeError("diagonal parameter expected")
    c = d.c
    nu = c[0].group.nu(1)
    problems = []
    if c[0] * c[3] != c[1] * c[2]:
        problems.append("similitude c1c4 = c2c3")
    n = param.nilpotent.matrix
    for i in range(4):
        for j in range(4):
            if n[i, j] != 0 and c[i] / c[j] != nu:
                problems.append(f"entry ({i},{j}): c{i + 1}/c{j + 1} = {c[i] / c[j]} != nu")
    return problems


# ------------------------------------------------------------- catalogue


_CENTRAL = {
    "I": lambda s: s["chi1"] * s["chi2"] * s["sigma"] ** 2,
    "II": lambda s: s["chi"] ** 2 * s["sigma"] ** 2,
    "III": lambda s: s["chi"] * s["sigma"] ** 2,
    "IV": lambda s: s["sigma"] ** 2,
    "V": lambda s: s["sigma"] ** 2,
    "VI": lambda s: s["sigma"] ** 2,
    "VII": lambda s: s["chi"] * s.pi.central_character,
    "VIII": lambda s: s.pi.central_character,
    "IX": lambda s: s.pi.central_character * s["xi"],
    "X": lambda s: s.pi.central_character * s["sigma"] ** 2,
    "XI": lambda s: s["sigma"] ** 2,
}


def central_character(spec: RepSpec) -> Character:
    return _CENTRAL[spec.family](spec)


def is_generic(spec: RepSpec | str) -> bool:
    case = spec if isinstance(spec, str) else spec.case
    return case in GENERIC


@dataclass(frozen=True)
class Packet:
    members: tuple[str, ...]
    contains_generic: bool
    possible_supercuspidal_member: bool = False

    @property
    def is_singleton(self) -> bool:
        return len(self.members) == 1 and not self.possible_supercuspidal_member


_PACKETS = {"VIa": ("VIa", "VIb"), "VIb": ("VIa", "VIb"), "VIIIa": ("VIIIa", "VIIIb"), "VIIIb": ("VIIIa", "VIIIb")}


def l_packet(spec: RepSpec | str) -> Packet:
    case = spec if isinstance(spec, str) else spec.case
    members = _PACKETS.get(case, (case,))
    return Packet(members, any(m in GENERIC for m in members), case in ("Va", "XIa"))


def twist(spec: RepSpec, tau: Character) -> RepSpec:
    """The spec of tau ⊗ Pi: sigma -> tau sigma, or pi -> tau pi for cases VII-IX."""
    if spec.family in TWIST_THROUGH_PI:
        return replace(spec, pi=spec.pi.twisted(tau))
    return spec.with_chars(sigma=tau * spec["sigma"])


def default_spec(case: str, group: CharacterGroup | None = None) -> RepSpec:
    """The row instance with generic symbolic inputs."""
    return make_spec(case, group or CharacterGroup(case))


def siegel_s_matrix(spec: RepSpec) -> RatMatrix:
    return RatMatrix(spec.siegel_s)

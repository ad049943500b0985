"""Formal local L-functions as multisets of Euler atoms.

Two kinds of atom occur: ``L(s, chi)`` for a character chi, and
``L(s, pi, Ad ⊗ chi)`` for a supercuspidal pi of GL(2).  Only the pole order
at s = 1 is computed: ``L(s, chi)`` has a simple pole there exactly when
chi = nu^-1, and ``L(s, pi, Ad ⊗ chi)`` exactly when chi = nu^-1 xi with xi a
nontrivial quadratic self-twist of pi.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Protocol, Sequence

from .chars import Character, CharacterGroup, SupercuspidalGL2, format_character


@dataclass(frozen=True)
class CharAtom:
    chi: Character

    degree = 1

    def substitute(self, assignment):
        return CharAtom(self.chi.substitute(assignment))


@dataclass(frozen=True)
class AdGL2Atom:
    """L(s, pi, Ad ⊗ twist); atoms compare by pi's name and the twist."""

    pi_name: str
    twist: Character
    pi: SupercuspidalGL2 | None = field(default=None, compare=False, repr=False)

    degree = 3

    @classmethod
    def of(cls, pi: SupercuspidalGL2, twist: Character | None = None) -> AdGL2Atom:
        return cls(pi.name, twist if twist is not None else pi.group.one(), pi)

    def substitute(self, assignment):
        pi = self.pi.substitute(assignment) if self.pi is not None else None
        return AdGL2Atom(self.pi_name, self.twist.substitute(assignment), pi)


Atom = CharAtom | AdGL2Atom


def _group_of(atom: Atom) -> CharacterGroup:
    return atom.chi.group if isinstance(atom, CharAtom) else atom.twist.group


# ---------------------------------------------------------------- poles


def char_atom_pole(chi: Character) -> int:
    return int(chi.is_nu_power() == -1)


def ad_atom_pole(pi: SupercuspidalGL2, twist: Character) -> int:
    xi = twist * twist.group.nu(1)
    return int(any(xi == q for q in pi.self_twist_characters()))


def atom_pole(atom: Atom) -> int:
    if isinstance(atom, CharAtom):
        return char_atom_pole(atom.chi)
    if atom.pi is None:
        raise ValueError(f"no representation data attached to Ad atom for {atom.pi_name}")
    return ad_atom_pole(atom.pi, atom.twist)


class LFunction:
    """Immutable multiset of atoms; the empty multiset is the constant 1."""

    __slots__ = ("_counts", "_items")

    def __init__(self, atoms: Iterable[Atom] | Mapping[Atom, int] = ()):
        counts = Counter(atoms)
        for a, m in counts.items():
            if m <= 0:
                raise ValueError("multiplicities must be positive")
            if not isinstance(a, (CharAtom, AdGL2Atom)):
                raise TypeError(f"not an atom: {a!r}")
        self._counts = counts
        self._items = tuple(sorted(counts.items(), key=lambda am: atom_key(am[0])))

    @property
    def items(self) -> tuple[tuple[Atom, int], ...]:
        return self._items

    def counts(self) -> Counter:
        return Counter(self._counts)

    def __iter__(self) -> Iterator[Atom]:
        for a, m in self._items:
            yield from [a] * m

    def __len__(self):
        return sum(self._counts.values())

    def __eq__(self, other):
        if not isinstance(other, LFunction):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self):
        return hash(frozenset(self._counts.items()))

    def __mul__(self, other: LFunction) -> LFunction:
        return LFunction(self._counts + other._counts)

    def multiplicity(self, atom: Atom) -> int:
        return self._counts.get(atom, 0)

    @property
    def degree(self) -> int:
        return sum(a.degree * m for a, m in self._items)

    def substitute(self, assignment: Mapping[str, Character]) -> LFunction:
        return LFunction(a.substitute(assignment) for a in self)

    def __repr__(self):
        return f"LFunction({render(self)!r})"

    def __str__(self):
        return render(self)


def pole_order_at_one(lf: LFunction) -> int:
    return sum(atom_pole(a) * m for a, m in lf.items)


# --------------------------------------------------------- branch analysis


class Constraint(Protocol):
    label: str

    def holds(self, assignment: Mapping[str, Character] = ...) -> bool: ...


@dataclass(frozen=True)
class Branch:
    symbol: str
    target: Character
    order: int

    @property
    def description(self) -> str:
        return f"{self.symbol}={format_character(self.target)}"

    @property
    def assignment(self) -> dict[str, Character]:
        return {self.symbol: self.target}


@dataclass(frozen=True)
class PoleReport:
    generic_order: int
    branches: tuple[Branch, ...] = ()

    def orders(self) -> list[int]:
        return sorted({self.generic_order} | {b.order for b in self.branches})

    def order_text(self) -> str:
        return " or ".join(str(o) for o in self.orders())


def _candidates(lf: LFunction, free_symbols: Sequence[str]) -> list[tuple[str, Character]]:
    """Single-symbol substitutions g -> nu^r * zeta that turn some atom into a pole.

    zeta ranges over the trivial character and the quadratic self-twists of
    the supercuspidals occurring in ``lf``.
    """
    atoms = [a for a, _ in lf.items]
    if not atoms:
        return []
    group = _group_of(atoms[0])
    quadratics = [group.one()]
    for a in atoms:
        if isinstance(a, AdGL2Atom) and a.pi is not None:
            quadratics += [q for q in a.pi.self_twist_characters() if q not in quadratics]
    out = []
    for g in free_symbols:
        for a in atoms:
            c = a.chi if isinstance(a, CharAtom) else a.twist
            e = c.exponent(g)
            if not e:
                continue
            rest = c.finite_part() * group.symbol(g) ** (-e)
            if isinstance(a, CharAtom):
                allowed = [group.one()]
            else:
                allowed = a.pi.self_twist_characters() if a.pi is not None else []
            r = Fraction(-1 - c.nu_exponent, e)
            for zeta in quadratics:
                if rest * zeta ** e in allowed:
                    target = group.nu(r) * zeta
                    if (g, target) not in out:
                        out.append((g, target))
    return out


def pole_report(
    lf: LFunction, free_symbols: Sequence[str] = (), constraints: Iterable[Constraint] = ()
) -> PoleReport:
    """Pole order in general position plus the admissible degenerate branches."""
    constraints = list(constraints)
    branches = []
    for g, target in _candidates(lf, free_symbols):
        assignment = {g: target}
        if all(c.holds(assignment) for c in constraints):
            branches.append(Branch(g, target, pole_order_at_one(lf.substitute(assignment))))
    branches.sort(key=lambda b: (b.symbol, b.target.nu_exponent, b.description))
    return PoleReport(pole_order_at_one(lf), tuple(branches))


# ------------------------------------------------------------- rendering

GREEK = {
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa",
    "lambda", "mu", "xi", "pi", "rho", "sigma", "tau", "upsilon", "phi", "chi", "psi", "omega",
}
_GREEK_ALT = "|".join(sorted(GREEK, key=len, reverse=True))
_GREEK_DIGITS = re.compile(rf"({_GREEK_ALT})(\d*)")
_GREEK_GREEK = re.compile(rf"({_GREEK_ALT})_({_GREEK_ALT})")

LATEX_TRIVIAL = r"1_{F^\times}"
LATEX_AD = r"{\rm Ad}_{\mathrm{GL}(2)}"


def latex_name(name: str) -> str:
    m = _GREEK_DIGITS.fullmatch(name)
    if m:
        base, digits = m.groups()
        if not digits:
            return f"\\{base}"
        return f"\\{base}_{digits}" if len(digits) == 1 else f"\\{base}_{{{digits}}}"
    m = _GREEK_GREEK.fullmatch(name)
    if m:
        return f"\\{m.group(1)}_\\{m.group(2)}"
    return "\\mathrm{" + name.replace("_", r"\_") + "}"


def _latex_exp(r: Fraction) -> str:
    if r == 1:
        return ""
    if r.denominator == 1 and 0 < r < 10:
        return f"^{r.numerator}"
    text = str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
    return f"^{{{text}}}"


def latex_character(c: Character) -> str:
    if c.is_trivial:
        return LATEX_TRIVIAL
    parts = [latex_name(n) + _latex_exp(Fraction(e)) for n, e in c.finite]
    if c.nu_exponent:
        parts.append(r"\nu" + _latex_exp(c.nu_exponent))
    return "".join(parts)


def atom_text(atom: Atom) -> str:
    """Plain-text argument of the atom (inside ``L(s, ...)``)."""
    if isinstance(atom, CharAtom):
        return format_character(atom.chi)
    head = f"Ad({atom.pi_name})"
    return head if atom.twist.is_trivial else f"{head}*{format_character(atom.twist)}"


def atom_key(atom: Atom) -> str:
    return atom_text(atom)


def atom_latex(atom: Atom) -> str:
    if isinstance(atom, CharAtom):
        return f"L(s,{latex_character(atom.chi)})"
    tail = "" if atom.twist.is_trivial else r"\otimes" + latex_character(atom.twist)
    return f"L(s,{latex_name(atom.pi_name)},{LATEX_AD}{tail})"


def atom_json(atom: Atom) -> dict:
    if isinstance(atom, CharAtom):
        return {"kind": "char", "expr": format_character(atom.chi)}
    return {"kind": "ad_gl2", "pi": atom.pi_name, "twist": format_character(atom.twist)}


def render(lf: LFunction, format: str = "plain", report: PoleReport | None = None) -> str:
    if format == "plain":
        if not lf.items:
            return "1"
        return " ".join(f"L(s,{atom_text(a)})" + (f"^{m}" if m > 1 else "") for a, m in lf.items)
    if format == "latex":
        if not lf.items:
            return "1"
        return "".join(atom_latex(a) + (_latex_exp(Fraction(m)) if m > 1 else "") for a, m in lf.items)
    if format == "json":
        report = report or pole_report(lf)
        doc = {
            "atoms": [atom_json(a) for a in lf],
            "ord_s1": report.generic_order,
            "branches": [{"substitution": b.description, "ord_s1": b.order} for b in report.branches],
        }
        return json.dumps(doc)
    raise ValueError(f"unknown format {format!r}")


# --------------------------------------------------------------- parsing


class LFunctionSyntaxError(ValueError):
    pass


def _matching_paren(text: str, start: int) -> int:
    """Index of the ')' closing the '(' at ``start``."""
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise LFunctionSyntaxError(f"unbalanced parentheses in {text!r}")


def _factors(text: str, latex: bool) -> Iterator[tuple[str, int]]:
    pos = 0
    skip = re.compile(r"(\s|\\cdot|\\nonumber|&|\\\\)*")
    mult = re.compile(r"\^(\d+|\{\d+\})")
    text = text.strip()
    if text == "1":
        return
    while True:
        pos = skip.match(text, pos).end()
        if pos >= len(text):
            return
        if not text.startswith("L(s,", pos):
            raise LFunctionSyntaxError(f"expected 'L(s,' at position {pos} in {text!r}")
        close = _matching_paren(text, pos + 1)
        arg = text[pos + 4 : close]
        pos = close + 1
        m = mult.match(text, pos)
        k = 1
        if m:
            k = int(m.group(1).strip("{}"))
            pos = m.end()
        yield arg, k


def parse_lfunction(
    text: str,
    group: CharacterGroup,
    pis: Mapping[str, SupercuspidalGL2] | Iterable[SupercuspidalGL2] = (),
    format: str = "plain",
    env: Mapping[str, Character] | None = None,
) -> LFunction:
    """Inverse of :func:`render` for the plain and LaTeX formats."""
    if not isinstance(pis, Mapping):
        pis = {p.name: p for p in pis}
    atoms = []
    for arg, k in _factors(text, format == "latex"):
        atom = _parse_latex_atom(arg, group, pis, env) if format == "latex" else _parse_plain_atom(
            arg, group, pis, env
        )
        atoms += [atom] * k
    return LFunction(atoms)


def _lookup_pi(name: str, pis: Mapping[str, SupercuspidalGL2]) -> SupercuspidalGL2:
    try:
        return pis[name]
    except KeyError:
        raise LFunctionSyntaxError(f"unknown supercuspidal {name!r}") from None


def _parse_plain_atom(arg, group, pis, env) -> Atom:
    if arg.startswith("Ad("):
        close = _matching_paren(arg, 2)
        pi = _lookup_pi(arg[3:close], pis)
        rest = arg[close + 1 :].strip()
        if not rest:
            return AdGL2Atom.of(pi)
        if not rest.startswith("*"):
            raise LFunctionSyntaxError(f"expected '*' after Ad(...) in {arg!r}")
        return AdGL2Atom.of(pi, group.parse(rest[1:], env))
    return CharAtom(group.parse(arg, env))


def _parse_latex_atom(arg, group, pis, env) -> Atom:
    if LATEX_AD in arg:
        pi_tex, _, rest = arg.partition(",")
        pi = _lookup_pi(_latex_symbol_name(pi_tex.strip()), pis)
        rest = rest.strip()
        if not rest.startswith(LATEX_AD):
            raise LFunctionSyntaxError(f"malformed adjoint atom {arg!r}")
        rest = rest[len(LATEX_AD) :].strip()
        if not rest:
            return AdGL2Atom.of(pi)
        if not rest.startswith(r"\otimes"):
            raise LFunctionSyntaxError(f"expected \\otimes in {arg!r}")
        return AdGL2Atom.of(pi, parse_latex_character(rest[len(r"\otimes") :], group, env))
    return CharAtom(parse_latex_character(arg, group, env))


_CMD = re.compile(r"\\([A-Za-z]+)")


def _read_braced(text: str, pos: int) -> tuple[str, int]:
    if pos >= len(text) or text[pos] != "{":
        raise LFunctionSyntaxError(f"expected '{{' at {pos} in {text!r}")
    depth = 0
    for i in range(pos, len(text)):
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth == 0:
                return text[pos + 1 : i], i + 1
    raise LFunctionSyntaxError(f"unbalanced braces in {text!r}")


def _latex_symbol_name(tex: str) -> str:
    """Symbol name for a single LaTeX symbol such as ``\\chi_1`` or ``\\omega_\\pi``."""
    name, pos = _latex_name_at(tex, 0)
    if pos != len(tex.strip()):
        raise LFunctionSyntaxError(f"unexpected trailing input in {tex!r}")
    return name


def _latex_name_at(text: str, pos: int) -> tuple[str, int]:
    m = _CMD.match(text, pos)
    if not m:
        raise LFunctionSyntaxError(f"expected a LaTeX command at {pos} in {text!r}")
    cmd = m.group(1)
    pos = m.end()
    if cmd == "mathrm":
        body, pos = _read_braced(text, pos)
        return body.replace(r"\_", "_"), pos
    if cmd == "nu":
        return "nu", pos
    if cmd not in GREEK:
        raise LFunctionSyntaxError(f"unknown symbol \\{cmd} in {text!r}")
    if pos < len(text) and text[pos] == "_":
        pos += 1
        if text.startswith("{", pos):
            sub, pos = _read_braced(text, pos)
        elif text.startswith("\\", pos):
            sm = _CMD.match(text, pos)
            sub, pos = "\\" + sm.group(1), sm.end()
        else:
            sub, pos = text[pos], pos + 1
        if sub.startswith("\\"):
            return f"{cmd}_{sub[1:]}", pos
        if not sub.isdigit():
            raise LFunctionSyntaxError(f"unsupported subscript {sub!r}")
        return f"{cmd}{sub}", pos
    return cmd, pos


def parse_latex_character(
    text: str, group: CharacterGroup, env: Mapping[str, Character] | None = None
) -> Character:
    env = env or {}
    text = text.strip()
    out = group.one()
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text.startswith(LATEX_TRIVIAL, pos):
            base, pos = group.one(), pos + len(LATEX_TRIVIAL)
        elif text[pos] == "1":
            base, pos = group.one(), pos + 1
        else:
            name, pos = _latex_name_at(text, pos)
            if name == "nu":
                base = group.nu(1)
            elif name in env:
                base = env[name]
            else:
                base = group.symbol(name)
        exp = Fraction(1)
        if pos < len(text) and text[pos] == "^":
            pos += 1
            if text.startswith("{", pos):
                body, pos = _read_braced(text, pos)
            else:
                body, pos = text[pos], pos + 1
            try:
                exp = Fraction(body.strip())
            except ValueError:
                raise LFunctionSyntaxError(f"bad exponent {body!r} in {text!r}") from None
        out = out * base ** exp
    return out

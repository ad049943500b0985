"""Formal characters of F^x (identified with characters of the Weil group).

A character is nu^r times a monomial in named generator symbols.  Symbols
are registered in a :class:`CharacterGroup`; a symbol may carry a finite
order (quadratic characters have order 2), and its exponent is then kept
reduced modulo that order.  Symbols are in general position: a character with
a nontrivial finite part is never equal to a power of nu.

Text grammar (shared with the command line)::

    expr    := '1' | factor ('*' factor)*
    factor  := atom ('^' power)?
    atom    := 'nu' | NAME ('[' INT ']')? | '(' expr ')'
    power   := INT | '-' INT | '(' RATIONAL ')'

``xi[2]`` declares ``xi`` as a generator of order 2.  Only ``nu`` and
parenthesized groups whose finite part is trivial accept rational powers.

>>> G = CharacterGroup()
>>> chi = G.parse("chi*nu^(1/2)")
>>> str(chi ** -2)
'chi^-2*nu^-1'
>>> str(G.parse("xi[2]^3*nu"))
'xi*nu'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

RESERVED = {"nu", "1"}
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class RegistryMismatch(ValueError):
    pass


class SubstitutionError(ValueError):
    pass


class CharacterSyntaxError(ValueError):
    def __init__(self, text: str, position: int, expected: Iterable[str]):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        super().__init__(
            f"syntax error at position {position} in {text!r}: expected {' or '.join(self.expected)}"
        )


class CharacterGroup:
    """Registry of generator symbols; every Character points back to one."""

    def __init__(self, name: str = ""):
        self.name = name
        self._orders: dict[str, int | None] = {}

    def __repr__(self):
        return f"CharacterGroup({self.name!r}, symbols={list(self._orders)})"

    @property
    def symbols(self) -> dict[str, int | None]:
        return dict(self._orders)

    def __contains__(self, name: str) -> bool:
        return name in self._orders

    def order(self, name: str) -> int | None:
        return self._orders[name]

    def register(self, name: str, order: int | None = None) -> None:
        if name in RESERVED or not _NAME.fullmatch(name):
            raise ValueError(f"invalid symbol name {name!r}")
        if order is not None and order < 2:
            raise ValueError("finite order must be at least 2")
        if name in self._orders:
            if order is not None and self._orders[name] != order:
                raise ValueError(f"symbol {name!r} already registered with order {self._orders[name]}")
            return
        self._orders[name] = order

    def symbol(self, name: str, order: int | None = None) -> Character:
        self.register(name, order)
        return self._make(0, {name: 1})

    def one(self) -> Character:
        return Character(self, Fraction(0), ())

    def nu(self, r=1) -> Character:
        return Character(self, Fraction(r), ())

    def fresh(self, stem: str, order: int | None = None) -> Character:
        """A new symbol whose name does not collide with existing ones."""
        i = 0
        while f"{stem}{i}" in self._orders:
            i += 1
        return self.symbol(f"{stem}{i}", order)

    def parse(self, text: str, env: Mapping[str, Character] | None = None) -> Character:
        return _Parser(self, text, env).parse()

    def _make(self, nu, finite: Mapping[str, int]) -> Character:
        items = []
        for name, e in finite.items():
            order = self._orders[name]
            if order is not None:
                e %= order
            if e:
                items.append((name, e))
        return Character(self, Fraction(nu), tuple(sorted(items)))


@dataclass(frozen=True, eq=False)
class Character:
    group: CharacterGroup
    nu_exponent: Fraction
    finite: tuple[tuple[str, int], ...]

    def _key(self):
        return (self.nu_exponent, self.finite)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.group is other.group and self._key() == other._key()

    def __hash__(self):
        return hash((id(self.group), self._key()))

    def _check(self, other: Character) -> None:
        if not isinstance(other, Character):
            raise TypeError(f"expected a Character, got {type(other).__name__}")
        if other.group is not self.group:
            raise RegistryMismatch("characters come from different registries")

    def __mul__(self, other: Character) -> Character:
        self._check(other)
        exps = dict(self.finite)
        for name, e in other.finite:
            exps[name] = exps.get(name, 0) + e
        return self.group._make(self.nu_exponent + other.nu_exponent, exps)

    def __truediv__(self, other: Character) -> Character:
        return self * other.inverse()

    def inverse(self) -> Character:
        return self.group._make(-self.nu_exponent, {n: -e for n, e in self.finite})

    def __pow__(self, k) -> Character:
        k = Fraction(k)
        if k.denominator != 1 and self.finite:
            raise ValueError("only nu-powers admit rational exponents")
        if k.denominator == 1:
            k = int(k)
        return self.group._make(self.nu_exponent * k, {n: e * k for n, e in self.finite})

    @property
    def is_trivial(self) -> bool:
        return self.nu_exponent == 0 and not self.finite

    def exponent(self, name: str) -> int:
        return dict(self.finite).get(name, 0)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.finite)

    def finite_part(self) -> Character:
        return Character(self.group, Fraction(0), self.finite)

    def is_nu_power(self) -> Fraction | None:
        return None if self.finite else self.nu_exponent

    def substitute(self, assignment: Mapping[str, Character]) -> Character:
        return substitute(self, assignment)

    def __str__(self):
        return format_character(self)

    def __repr__(self):
        return f"Character({format_character(self)!r})"


def group_op(a: Character, b: Character | None = None, mode: str = "multiply", k: int = 1) -> Character:
    """Dispatch form of the group law: multiply, invert or power."""
    if mode == "multiply":
        return a * b
    if mode == "invert":
        return a.inverse()
    if mode == "power":
        return a ** k
    raise ValueError(f"unknown mode {mode!r}")


def is_nu_power(c: Character) -> Fraction | None:
    return c.is_nu_power()


def _check_assignment(group: CharacterGroup, assignment: Mapping[str, Character]) -> None:
    for name, target in assignment.items():
        if name not in group:
            raise SubstitutionError(f"unknown symbol {name!r}")
        if target.group is not group:
            raise RegistryMismatch("substitution target from a different registry")
        clash = set(target.symbols) & set(assignment)
        if clash:
            raise SubstitutionError(f"target for {name!r} mentions substituted symbols {sorted(clash)}")
        order = group.order(name)
        if order is not None and not (target ** order).is_trivial:
            raise SubstitutionError(f"{name!r} has order {order} but {target} does not")


def substitute(c: Character, assignment: Mapping[str, Character]) -> Character:
    """Extend ``symbol -> Character`` to a group homomorphism and apply it."""
    _check_assignment(c.group, assignment)
    out = c.group.nu(c.nu_exponent)
    rest = {}
    for name, e in c.finite:
        if name in assignment:
            out = out * assignment[name] ** e
        else:
            rest[name] = e
    return out * c.group._make(0, rest)


# ---------------------------------------------------------------- printing


def _frac(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def format_character(c: Character, declare_torsion: bool = False) -> str:
    """Canonical text form: generators sorted by name, then the nu-power."""
    parts = []
    for name, e in c.finite:
        order = c.group.order(name)
        head = f"{name}[{order}]" if declare_torsion and order is not None else name
        parts.append(head if e == 1 else f"{head}^{e}")
    r = c.nu_exponent
    if r:
        if r == 1:
            parts.append("nu")
        elif r.denominator == 1:
            parts.append(f"nu^{r.numerator}")
        else:
            parts.append(f"nu^({_frac(r)})")
    return "*".join(parts) if parts else "1"


# ----------------------------------------------------------------- parsing


class _Parser:
    def __init__(self, group: CharacterGroup, text: str, env: Mapping[str, Character] | None):
        self.group = group
        self.text = text
        self.pos = 0
        self.env = env or {}

    def error(self, *expected):
        raise CharacterSyntaxError(self.text, self.pos, expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(repr(ch))
        self.pos += 1

    def parse(self) -> Character:
        c = self.expr()
        if self.peek():
            self.error("'*'", "end of input")
        return c

    def expr(self) -> Character:
        c = self.factor()
        while self.peek() == "*":
            self.pos += 1
            c = c * self.factor()
        return c

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"-?\d+").match(self.text, self.pos)
        if not m:
            self.error("integer")
        self.pos = m.end()
        return int(m.group())

    def power(self) -> Fraction:
        if self.peek() == "(":
            self.pos += 1
            self.skip()
            m = re.compile(r"-?\d+(/\d+)?").match(self.text, self.pos)
            if not m:
                self.error("rational")
            self.pos = m.end()
            r = Fraction(m.group())
            self.take(")")
            return r
        return Fraction(self.integer())

    def factor(self) -> Character:
        c = self.atom()
        if self.peek() == "^":
            self.pos += 1
            start = self.pos
            k = self.power()
            if k.denominator != 1 and c.finite:
                self.pos = start
                self.error("integer power (rational powers apply to nu only)")
            c = c ** k
        return c

    def atom(self) -> Character:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            c = self.expr()
            self.take(")")
            return c
        if ch == "1":
            self.pos += 1
            return self.group.one()
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.error("'nu'", "symbol", "'1'", "'('")
        name = m.group()
        self.pos = m.end()
        if name == "nu":
            return self.group.nu(1)
        order = None
        if self.pos < len(self.text) and self.text[self.pos] == "[":
            self.pos += 1
            order = self.integer()
            self.take("]")
            if order < 2:
                self.pos -= 2
                self.error("order >= 2")
        if name in self.env and order is None:
            return self.env[name]
        try:
            return self.group.symbol(name, order)
        except ValueError as exc:
            raise CharacterSyntaxError(self.text, m.start(), [str(exc)]) from None


def torsion_declarations(text: str) -> dict[str, int]:
    """All ``name[n]`` declarations occurring in ``text``."""
    return {m.group(1): int(m.group(2)) for m in re.finditer(r"([A-Za-z][A-Za-z0-9_]*)\[(\d+)\]", text)}


# ------------------------------------------------------- supercuspidal atoms


@dataclass(frozen=True)
class SupercuspidalGL2:
    """Opaque supercuspidal representation pi of GL(2,F).

    ``self_twists`` names the nontrivial quadratic generators xi with
    xi pi ~ pi.  Twisting by tau multiplies the central character by tau^2
    and keeps the name, since everything downstream only sees Ad(pi).
    """

    name: str
    central_character: Character
    self_twists: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "self_twists", frozenset(self.self_twists))
        g = self.central_character.group
        for xi in self.self_twists:
            if xi not in g or g.order(xi) != 2:
                raise ValueError(f"self-twist {xi!r} must be a registered symbol of order 2")

    @property
    def group(self) -> CharacterGroup:
        return self.central_character.group

    def self_twist_characters(self) -> list[Character]:
        return [self.group.symbol(x) for x in sorted(self.self_twists)]

    def twisted(self, tau: Character) -> SupercuspidalGL2:
        return SupercuspidalGL2(self.name, self.central_character * tau ** 2, self.self_twists)

    def substitute(self, assignment: Mapping[str, Character]) -> SupercuspidalGL2:
        return SupercuspidalGL2(
            self.name, substitute(self.central_character, assignment), self.self_twists
        )

"""Command-line front end.

Spec grammar: whitespace-separated ``key=value`` pairs::

    case=<tag> [chi1=|chi2=|chi=|sigma=|xi=<char>] [pi=<name>] [omega=<char>]
    [selftwists=<sym>,<sym>...] [S=<a>,<b>;<b>,<d>]

Characters use the grammar of :mod:`gsp4adj.chars`; ``name[2]`` declares a
quadratic symbol anywhere in the text.  Symbols listed in ``selftwists`` are
quadratic automatically.  Missing inputs default to symbols named after the
role; ``omega`` defaults to ``omega_<pi name>`` (trivial for XIa/XIb).

Exit codes: 0 ok, 1 the spec violates its row's conditions, 2 usage or
syntax error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import verify
from .chars import (
    CharacterGroup,
    CharacterSyntaxError,
    RegistryMismatch,
    SubstitutionError,
    SupercuspidalGL2,
    format_character,
    torsion_declarations,
)
from .engine import derive, gpr_verdict, spec_pole_report
from .lfun import atom_json, latex_character, render
from .reps import (
    CASES,
    NEEDS_PI,
    ROLES,
    RepSpec,
    ValidationError,
    central_character,
    default_spec,
    family,
    is_generic,
    l_packet,
    make_spec,
    require_valid,
)

CHAR_KEYS = ("chi1", "chi2", "chi", "sigma", "xi")
PI_KEYS = ("pi", "omega", "selftwists")
_TOKEN = re.compile(r"\S+")


class SpecSyntaxError(ValueError):
    def __init__(self, text: str, position: int, expected):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        pointer = " " * position + "^"
        super().__init__(
            f"syntax error at position {position}: expected {' or '.join(self.expected)}\n  {text}\n  {pointer}"
        )


# ------------------------------------------------------------------ specs


def _tokens(text: str) -> list[tuple[str, str, int, int]]:
    """(key, value, key position, value position) per token."""
    out = []
    seen = set()
    for m in _TOKEN.finditer(text):
        key, eq, value = m.group().partition("=")
        if not eq or not key:
            raise SpecSyntaxError(text, m.start(), ["key=value"])
        if key in seen:
            raise SpecSyntaxError(text, m.start(), [f"a single value for {key!r}"])
        seen.add(key)
        out.append((key, value, m.start(), m.start() + len(key) + 1))
    return out


def _parse_char(group, text, value, offset):
    try:
        return group.parse(value)
    except CharacterSyntaxError as exc:
        raise SpecSyntaxError(text, offset + exc.position, exc.expected) from None
    except ValueError as exc:
        raise SpecSyntaxError(text, offset, [str(exc)]) from None


def _parse_s(text: str, value: str, offset: int) -> tuple:
    try:
        rows = tuple(tuple(Fraction(x) for x in row.split(",")) for row in value.split(";"))
    except (ValueError, ZeroDivisionError):
        raise SpecSyntaxError(text, offset, ["S=<a>,<b>;<c>,<d> with rational entries"]) from None
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise SpecSyntaxError(text, offset, ["a 2x2 matrix S=<a>,<b>;<c>,<d>"])
    return rows


def parse_spec(text: str, group: CharacterGroup | None = None, validate: bool = True) -> RepSpec:
    """Parse a spec; raises SpecSyntaxError or, when validating, ValidationError."""
    tokens = _tokens(text)
    fields = {k: (v, kp, vp) for k, v, kp, vp in tokens}
    if "case" not in fields:
        raise SpecSyntaxError(text, len(text), ["case=<tag>"])
    case, _, case_pos = fields["case"]
    if case not in CASES:
        raise SpecSyntaxError(text, case_pos, ["one of " + ", ".join(CASES)])
    fam = family(case)
    allowed = {"case", *ROLES[fam]}
    if fam in NEEDS_PI:
        allowed |= set(PI_KEYS)
    if case == "IXa":
        allowed.add("S")
    for key, _, key_pos, _ in tokens:
        if key not in allowed:
            raise SpecSyntaxError(text, key_pos, ["one of " + ", ".join(sorted(allowed))])

    group = group or CharacterGroup()
    try:
        for name, order in torsion_declarations(text).items():
            group.register(name, order)
        twists = []
        if "selftwists" in fields:
            value, _, pos = fields["selftwists"]
            twists = [t for t in value.split(",") if t]
            for t in twists:
                group.register(t, 2)
    except ValueError as exc:
        raise SpecSyntaxError(text, 0, [str(exc)]) from None

    chars = {}
    for key in CHAR_KEYS:
        if key in fields:
            value, _, pos = fields[key]
            chars[key] = _parse_char(group, text, value, pos)

    pi = None
    if fam in NEEDS_PI and any(k in fields for k in PI_KEYS):
        name = fields["pi"][0] if "pi" in fields else "pi"
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
            raise SpecSyntaxError(text, fields["pi"][2], ["a name for pi"])
        if "omega" in fields:
            value, _, pos = fields["omega"]
            omega = _parse_char(group, text, value, pos)
        else:
            omega = group.one() if fam == "XI" else group.symbol(f"omega_{name}")
        pi = SupercuspidalGL2(name, omega, frozenset(twists))
    siegel_s = _parse_s(text, *fields["S"][::2]) if "S" in fields else None

    spec = make_spec(case, group, pi, siegel_s, **chars)
    if validate:
        require_valid(spec)
    return spec


def format_spec(spec: RepSpec) -> str:
    """Inverse of :func:`parse_spec`, with quadratic symbols declared as ``name[2]``."""
    parts = [f"case={spec.case}"]
    for role, c in spec.chars:
        parts.append(f"{role}={format_character(c, declare_torsion=True)}")
    if spec.pi is not None:
        parts.append(f"pi={spec.pi.name}")
        parts.append(f"omega={format_character(spec.pi.central_character, declare_torsion=True)}")
        if spec.pi.self_twists:
            parts.append("selftwists=" + ",".join(sorted(spec.pi.self_twists)))
    if spec.siegel_s is not None:
        parts.append("S=" + ";".join(",".join(_frac(x) for x in row) for row in spec.siegel_s))
    return " ".join(parts)


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def apply_branches(spec: RepSpec, branches: list[str]) -> RepSpec:
    """Substitute ``symbol=char`` pairs into the spec's inputs."""
    group = spec.group
    assignment = {}
    for item in branches:
        name, eq, value = item.partition("=")
        if not eq or name not in group:
            raise SpecSyntaxError(item, 0, [f"symbol=value with a symbol of the spec ({', '.join(group.symbols)})"])
        assignment[name] = _parse_char(group, item, value, len(name) + 1)
    try:
        out = spec.substitute(assignment)
    except (SubstitutionError, RegistryMismatch) as exc:
        raise SpecSyntaxError(" ".join(branches), 0, [str(exc)]) from None
    require_valid(out)
    return out


# ---------------------------------------------------------------- commands


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def compute_report(spec: RepSpec) -> dict:
    lf = derive(spec)
    report = spec_pole_report(spec, lf)
    packet = l_packet(spec)
    verdict = gpr_verdict(spec)
    return {
        "spec": spec,
        "lfunction": lf,
        "report": report,
        "packet": packet,
        "verdict": verdict,
    }


def render_compute(spec: RepSpec, fmt: str) -> str:
    r = compute_report(spec)
    lf, report, packet, verdict = r["lfunction"], r["report"], r["packet"], r["verdict"]
    members = "{" + ", ".join(packet.members) + "}"
    if fmt == "json":
        doc = json.loads(render(lf, "json", report))
        doc.update(
            case=spec.case,
            spec=format_spec(spec),
            generic=is_generic(spec),
            central_character=format_character(central_character(spec)),
            packet={
                "members": list(packet.members),
                "contains_generic": packet.contains_generic,
                "possible_supercuspidal_member": packet.possible_supercuspidal_member,
            },
            gpr={
                "holomorphic_at_1": verdict.holomorphic_at_1,
                "packet_has_generic": verdict.packet_has_generic,
                "theorem_holds": verdict.theorem_holds,
            },
        )
        return json.dumps(doc, indent=2)
    branches = "; ".join(f"{b.description} -> {b.order}" for b in report.branches) or "none"
    rows = [
        ("case", spec.case),
        ("input", format_spec(spec)),
        ("L(s,Ad)", render(lf, "latex") if fmt in ("latex", "md") else render(lf)),
        ("ord_{s=1}", str(report.generic_order)),
        ("branches", branches),
        ("generic", _yes(is_generic(spec))),
        ("central character", format_character(central_character(spec))),
        ("L-packet", members + (" (+ possible supercuspidal member)" if packet.possible_supercuspidal_member else "")),
        (
            "GP-R",
            f"holomorphic at s=1: {_yes(verdict.holomorphic_at_1)}, packet has generic member: "
            f"{_yes(verdict.packet_has_generic)}, criterion holds: {_yes(verdict.theorem_holds)}",
        ),
    ]
    if fmt == "md":
        lines = ["| field | value |", "|---|---|"]
        for k, v in rows:
            v = f"${v}$" if k == "L(s,Ad)" else f"`{v}`" if k == "input" else v
            lines.append(f"| {k} | {v} |")
        return "\n".join(lines)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def table_rows() -> list[tuple[str, object, str]]:
    out = []
    for case in CASES:
        spec = default_spec(case)
        lf = derive(spec)
        out.append((case, lf, spec_pole_report(spec, lf).order_text()))
    return out


def render_table(fmt: str) -> str:
    rows = table_rows()
    if fmt == "json":
        return json.dumps(
            [{"case": c, "atoms": [atom_json(a) for a in lf], "ord_s1": o} for c, lf, o in rows], indent=2
        )
    if fmt == "latex":
        lines = [r"\begin{tabular}{lll}", r"\hline", r"case & $L(s,\Pi,{\rm Ad})$ & ord$_{s=1}$ \\", r"\hline"]
        lines += [f"{c} & ${render(lf, 'latex')}$ & {o} \\\\" for c, lf, o in rows]
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines)
    if fmt == "md":
        lines = ["| case | L(s,Π,Ad) | ord_{s=1} |", "|---|---|---|"]
        lines += [f"| {c} | ${render(lf, 'latex')}$ | {o} |" for c, lf, o in rows]
        return "\n".join(lines)
    return "\n".join(f"{c:<6} {o:<7} {render(lf)}" for c, lf, o in rows)


def render_packet(spec: RepSpec, fmt: str) -> str:
    p = l_packet(spec)
    doc = {
        "case": spec.case,
        "members": list(p.members),
        "generic_members": [m for m in p.members if is_generic(m)],
        "contains_generic": p.contains_generic,
        "possible_supercuspidal_member": p.possible_supercuspidal_member,
    }
    if fmt == "json":
        return json.dumps(doc, indent=2)
    return "\n".join(
        [
            f"case: {spec.case}",
            "members: {" + ", ".join(p.members) + "}",
            "generic members: {" + ", ".join(doc["generic_members"]) + "}",
            f"contains generic: {_yes(p.contains_generic)}",
            f"possible supercuspidal member: {_yes(p.possible_supercuspidal_member)}",
        ]
    )


# -------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gsp4adj", description="Adjoint L-functions of non-supercuspidal GSp(4) representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="derive the adjoint L-function of one representation")
    p.add_argument("spec", nargs="+", help="key=value pairs, e.g. case=IIIb chi=chi sigma=s")
    p.add_argument("--format", choices=("plain", "latex", "md", "json"), default="plain")
    p.add_argument("--branch", action="append", default=[], metavar="SYMBOL=CHAR", help="substitute before computing (repeatable)")

    p = sub.add_parser("table", help="regenerate the table of all rows")
    p.add_argument("--format", choices=("plain", "latex", "md", "json"), default="md")

    p = sub.add_parser("packet", help="L-packet data of one representation")
    p.add_argument("spec", nargs="+")
    p.add_argument("--format", choices=("plain", "latex", "md", "json"), default="plain")

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("scope", nargs="?", choices=tuple(verify.SCOPES), default="all")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--format", choices=("plain", "latex", "md", "json"), default="plain")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "compute":
            spec = parse_spec(" ".join(args.spec))
            if args.branch:
                spec = apply_branches(spec, args.branch)
            print(render_compute(spec, args.format), file=out)
        elif args.command == "table":
            print(render_table(args.format), file=out)
        elif args.command == "packet":
            print(render_packet(parse_spec(" ".join(args.spec)), args.format), file=out)
        elif args.command == "verify":
            results = verify.run(args.scope, args.seed)
            if args.format == "json":
                print(json.dumps({"seed": args.seed, "results": [r.__dict__ for r in results]}, indent=2), file=out)
            else:
                print(f"seed: {args.seed}", file=out)
                for r in results:
                    print(r.line(), file=out)
            return 0 if all(r.passed for r in results) else 3
    except SpecSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"invalid {exc.case}: violated condition(s): {', '.join(exc.violations)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

from fractions import Fraction

import pytest

from gsp4adj import sp4
from gsp4adj.chars import CharacterGroup, SupercuspidalGL2
from gsp4adj.reps import (
    CASES,
    Diagonal,
    KlingenBlock,
    SiegelBlock,
    ValidationError,
    build_parameter,
    central_character,
    default_spec,
    diagonal_admissibility,
    is_generic,
    l_packet,
    make_spec,
    twist,
    validate,
)

GENERIC = {"I", "IIa", "IIIa", "IVa", "Va", "VIa", "VII", "VIIIa", "IXa", "X", "XIa"}


def test_catalogue_has_every_row():
    assert len(CASES) == 25
    assert {c for c in CASES if is_generic(c)} == GENERIC


@pytest.mark.parametrize("case", CASES)
def test_default_specs_are_valid(case):
    assert validate(default_spec(case)) == []


def test_ivd_parameter():
    g = CharacterGroup()
    spec = make_spec("IVd", g, sigma=g.symbol("sigma"))
    p = build_parameter(spec)
    s, nu = g.symbol("sigma"), g.nu
    assert p.semisimple == Diagonal(
        (nu(Fraction(3, 2)) * s, nu(Fraction(1, 2)) * s, nu(Fraction(-1, 2)) * s, nu(Fraction(-3, 2)) * s)
    )
    assert p.nilpotent == sp4.ZERO


def test_via_and_vib_share_their_parameter():
    g = CharacterGroup()
    a, b = build_parameter(make_spec("VIa", g)), build_parameter(make_spec("VIb", g))
    assert a == b and a.nilpotent == sp4.N3
    a, b = build_parameter(make_spec("VIIIa", g)), build_parameter(make_spec("VIIIb", g))
    assert a == b


def test_xia_parameter():
    g = CharacterGroup()
    p = build_parameter(make_spec("XIa", g))
    assert isinstance(p.semisimple, KlingenBlock)
    assert p.semisimple.nu_shift == Fraction(1, 2)
    assert p.nilpotent == sp4.N2
    assert p.semisimple.gl1 == g.symbol("sigma") * g.nu(Fraction(1, 2))


def test_ixa_parameter_uses_siegel_nilpotent():
    p = build_parameter(default_spec("IXa"))
    assert isinstance(p.semisimple, SiegelBlock)
    assert p.nilpotent.tag == "SiegelSym"
    assert p.semisimple.self_twist == p.semisimple.pi.group.symbol("xi")


@pytest.mark.parametrize("case", CASES)
def test_central_character_is_similitude(case):
    spec = default_spec(case)
    assert central_character(spec) == build_parameter(spec).similitude


@pytest.mark.parametrize("case", [c for c in CASES if build_parameter(default_spec(c)).semisimple.__class__ is Diagonal])
def test_diagonal_parameters_are_admissible(case):
    assert diagonal_admissibility(build_parameter(default_spec(case))) == []


def test_admissibility_detects_wrong_nilpotent():
    p = build_parameter(default_spec("IVb"))
    bad = type(p)(p.semisimple, sp4.N2)
    assert diagonal_admissibility(bad)


def test_central_character_examples():
    g = CharacterGroup()
    spec = make_spec("I", g)
    assert central_character(spec) == g.symbol("chi1") * g.symbol("chi2") * g.symbol("sigma") ** 2
    spec = make_spec("X", g)
    assert central_character(spec) == g.symbol("omega_pi") * g.symbol("sigma") ** 2
    assert central_character(make_spec("IVb", g)) == g.symbol("sigma") ** 2


@pytest.mark.parametrize(
    "case,chars,label",
    [
        ("IIa", {"chi": "nu^(1/2)"}, "χ²≠ν^{±1}"),
        ("IIb", {"chi": "nu^(-3/2)"}, "χ≠ν^{±3/2}"),
        ("I", {"chi1": "nu"}, "χ₁≠ν^{±1}"),
        ("I", {"chi1": "chi2^-1*nu^-1"}, "χ₁≠ν^{±1}χ₂^{±1}"),
        ("IIIa", {"chi": "1"}, "χ∉{1,ν^{±2}}"),
        ("IIIb", {"chi": "nu^-2"}, "χ∉{1,ν^{±2}}"),
        ("Va", {"xi": "1"}, "ξ≠1"),
        ("Vb", {"xi": "eta"}, "ξ²=1"),
        ("VII", {"chi": "1"}, "χ⋊π irreducible"),
    ],
)
def test_conditions_are_enforced(case, chars, label):
    g = CharacterGroup()
    g.register("chi2")
    spec = make_spec(case, g, **{k: g.parse(v) for k, v in chars.items()})
    assert label in validate(spec)
    with pytest.raises(ValidationError) as info:
        build_parameter(spec)
    assert label in info.value.violations


def test_case_vii_excludes_nu_times_self_twist():
    g = CharacterGroup()
    g.register("xi", 2)
    pi = SupercuspidalGL2("pi", g.symbol("w"), {"xi"})
    assert "χ⋊π irreducible" in validate(make_spec("VII", g, pi, chi=g.parse("xi*nu")))
    assert validate(make_spec("VII", g, pi, chi=g.parse("xi"))) == []


def test_supercuspidal_conditions():
    g = CharacterGroup()
    g.register("xi", 2)
    plain = SupercuspidalGL2("pi", g.symbol("w"))
    assert "ξπ=π" in validate(make_spec("IXb", g, plain))
    assert "ω_π=1" in validate(make_spec("XIb", g, plain))
    assert "ω_π≠ν^{±1}" in validate(make_spec("X", g, SupercuspidalGL2("pi", g.nu(-1))))
    assert "supercuspidal pi required" in validate(make_spec("I", g).__class__("X", (("sigma", g.one()),)))


def test_ixa_rejects_singular_s():
    spec = make_spec("IXa", CharacterGroup(), siegel_s=((1, 1), (1, 1)))
    assert "S symmetric invertible" in validate(spec)


def test_packets():
    p = l_packet("VIb")
    assert p.members == ("VIa", "VIb") and p.contains_generic
    assert l_packet("VIIIb").members == ("VIIIa", "VIIIb")
    p = l_packet("Va")
    assert p.members == ("Va",) and p.possible_supercuspidal_member and not p.is_singleton
    assert l_packet("XIa").possible_supercuspidal_member
    assert l_packet("I").is_singleton
    assert not l_packet("IVd").contains_generic


def test_twist_examples():
    g = CharacterGroup()
    tau = g.symbol("tau")
    spec = make_spec("IVa", g)
    assert twist(spec, tau)["sigma"] == tau * g.symbol("sigma")
    spec = make_spec("VII", g)
    t = twist(spec, tau)
    assert t["chi"] == spec["chi"]
    assert t.pi.central_character == tau ** 2 * g.symbol("omega_pi")
    assert twist(spec, g.one()) == spec


@pytest.mark.parametrize("case", CASES)
def test_twist_preserves_validity_and_shape(case):
    spec = default_spec(case)
    tau = spec.group.symbol("tau") * spec.group.nu(Fraction(1, 3))
    t = twist(spec, tau)
    assert t.case == case and validate(t) == []
    assert is_generic(t) == is_generic(spec)
    assert l_packet(t) == l_packet(spec)
    assert central_character(t) == tau ** 2 * central_character(spec)

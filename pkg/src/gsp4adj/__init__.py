"""Adjoint L-functions of the non-supercuspidal representations of GSp(4)."""

from .chars import Character, CharacterGroup, SupercuspidalGL2
from .engine import (
    Derivation,
    GPRVerdict,
    adjoint_block,
    adjoint_diagonal,
    derive,
    derive_with_provenance,
    gpr_verdict,
    spec_pole_report,
    table2_closed_form,
)
from .lfun import AdGL2Atom, CharAtom, LFunction, pole_order_at_one, pole_report, render
from .reps import (
    CASES,
    RepSpec,
    ValidationError,
    build_parameter,
    central_character,
    default_spec,
    is_generic,
    l_packet,
    make_spec,
    twist,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AdGL2Atom", "CASES", "CharAtom", "Character", "CharacterGroup", "Derivation", "GPRVerdict",
    "LFunction", "RepSpec", "SupercuspidalGL2", "ValidationError", "adjoint_block", "adjoint_diagonal",
    "build_parameter", "central_character", "default_spec", "derive", "derive_with_provenance",
    "gpr_verdict", "is_generic", "l_packet", "make_spec", "pole_order_at_one", "pole_report", "render",
    "spec_pole_report", "table2_closed_form", "twist", "validate",
]

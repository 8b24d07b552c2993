"""Braid words, twisted torus knot families and exact invariants of braid closures."""

from .alexander import alexander
from .braid import (
    BraidError, BraidParseError, BraidWord, Move, MoveKind, Permutation, apply_move, applicable_moves,
    component_count, compose, exponent_sum, flip, format_braid, inverse, make_braid, mirror,
    parse_braid_text, permutation_of, random_braid, reverse,
)
from .config import ResourceLimitError, limits
from .families import (
    CableSpec, FamilyError, KLinkSpec, TLinkSpec, TorusSpec, TwistedTorusSpec, answer_morimoto_specs,
    cable_braid, half_twist, klink_braid, lee_cable_specs, lemma_symmetry_klink, morimoto_family,
    parse_family_spec, theorem5_specs, tlink_braid, torus_braid, twisted_torus_braid,
)
from .invariants import (
    InvariantFingerprint, cable_alexander, fingerprint, identify_torus_knot, positive_braid_genus,
    torus_alexander, torus_jones,
)
from .jones import jones, jones_state_sum
from .laurent import LaurentPoly
from .verify import Verdict, SuiteReport, check_equivalent, run_suite, scan_conjecture

__version__ = "0.1.0"

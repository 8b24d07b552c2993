"""Closed-form oracles, genus, fingerprints and torus-knot identification."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .alexander import alexander
from .braid import BraidWord, component_count
from .config import ResourceLimitError
from .jones import jones, mirror_poly
from .laurent import LaurentPoly


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized."""
    if p < 1 or q < 1:
        raise ValueError(f"torus_alexander needs p, q >= 1, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is a link (gcd {gcd(p, q)}); the closed form covers knots only")
    if p == 1 or q == 1:
        return LaurentPoly.const(1)
    one = LaurentPoly.const(1)
    t = LaurentPoly.monomial
    num = (t(p * q) - one) * (t(1) - one)
    den = (t(p) - one) * (t(q) - one)
    return num.divmod_exact(den).normalized()


def torus_jones(p: int, q: int) -> LaurentPoly:
    """Jones polynomial of the positive torus knot T(p, q):
    t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2)."""
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise ValueError(f"torus_jones needs a torus knot, got ({p}, {q})")
    t = LaurentPoly.monomial
    one = LaurentPoly.const(1)
    num = one - t(p + 1) - t(q + 1) + t(p + q)
    return num.divmod_exact(one - t(2)).shift((p - 1) * (q - 1) // 2)


def cable_alexander(delta_c: LaurentPoly, m: int, c: int) -> LaurentPoly:
    """Alexander polynomial of the (m, c)-cable (Seifert slope) on a companion with polynomial ``delta_c``."""
    if m < 1:
        raise ValueError(f"cable index m must be positive, got {m}")
    if gcd(m, c) != 1:
        raise ValueError(f"(m, c) = ({m}, {c}) not coprime; the cable is a link")
    pattern = torus_alexander(m, abs(c)) if c else LaurentPoly.const(1)
    return (pattern * delta_c.substitute(m)).normalized()


def positive_braid_genus(w: BraidWord) -> Fraction:
    """Seifert genus (c - n + 1)/2 of the closure of a positive braid that closes to a knot."""
    if not w.is_positive():
        raise ValueError("positive_braid_genus needs a positive word (found a negative letter)")
    comps = component_count(w)
    if comps != 1:
        raise ValueError(f"positive_braid_genus needs a knot closure, got {comps} components")
    return Fraction(len(w) - w.strands + 1, 2)


@dataclass(frozen=True)
class InvariantFingerprint:
    components: int
    alexander: LaurentPoly
    jones: Optional[LaurentPoly] = None
    # present only for positive words, so it depends on the presentation; see __eq__
    genus_bound: Optional[Fraction] = field(default=None, compare=False)
    # reporting only
    strands: int = field(default=0, compare=False)
    crossings: int = field(default=0, compare=False)
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __eq__(self, other):
        if not isinstance(other, InvariantFingerprint):
            return NotImplemented
        if (self.components, self.alexander, self.jones) != (other.components, other.alexander, other.jones):
            return False
        # the genus is a knot invariant: two computed values must agree, a missing one is no evidence
        return self.genus_bound is None or other.genus_bound is None or self.genus_bound == other.genus_bound

    def to_json(self) -> dict:
        return {
            "components": self.components,
            "alexander": self.alexander.to_json(),
            "jones": self.jones.to_json() if self.jones is not None else None,
            "genus_bound": str(self.genus_bound) if self.genus_bound is not None else None,
            "strands": self.strands,
            "crossings": self.crossings,
            "notes": list(self.notes),
        }


def fingerprint(w: BraidWord, with_jones: bool = True) -> InvariantFingerprint:
    comps = component_count(w)
    notes = []
    jv = None
    if with_jones:
        try:
            jv = jones(w)
        except ResourceLimitError as exc:
            notes.append(f"jones skipped: {exc}")
    genus = None
    if w.is_positive() and comps == 1:
        genus = positive_braid_genus(w)
    alex = alexander(w)
    if alex.is_zero():
        notes.append("alexander vanishes (split or degenerate closure)")
    return InvariantFingerprint(comps, alex, jv, genus, w.strands, len(w), tuple(notes))


@dataclass(frozen=True)
class TorusMatch:
    """Outcome of the bounded torus-knot search. ``mirrored`` is None when Jones was not available."""
    pair: tuple[int, int]
    mirrored: Optional[bool]
    jones_checked: bool


def match_torus_knot(w: BraidWord, with_jones: bool = True) -> Optional[TorusMatch]:
    comps = component_count(w)
    if comps != 1:
        raise ValueError(f"identify_torus_knot needs a knot closure, got {comps} components")
    alex = alexander(w)
    span = alex.span()
    # (p-1)(q-1) equals the Alexander span of T(p,q); with a positive word it is also twice the genus
    candidates = []
    for q in range(2, span + 2):
        if span % (q - 1):
            continue
        p = span // (q - 1) + 1
        if p > q and gcd(p, q) == 1 and torus_alexander(p, q) == alex:
            candidates.append((q, p))
    if not candidates:
        return None
    q, p = candidates[0]
    if not with_jones:
        return TorusMatch((q, p), None, False)
    try:
        jv = jones(w)
    except ResourceLimitError:
        return TorusMatch((q, p), None, False)
    ref = torus_jones(p, q)
    if jv == ref:
        return TorusMatch((q, p), False, True)
    if jv == mirror_poly(ref):
        return TorusMatch((q, p), True, True)
    return None


def identify_torus_knot(w: BraidWord, with_jones: bool = True) -> Optional[tuple[int, int]]:
    """Torus knot consistent with the closure, as (q, p) with q < p; p is negated for the mirror.

    A match is consistency of invariants, not a proof. Chirality is only
    decided when Jones is computed; otherwise the positive pair is returned.
    """
    m = match_torus_knot(w, with_jones)
    if m is None:
        return None
    q, p = m.pair
    return (q, -p) if m.mirrored else (q, p)

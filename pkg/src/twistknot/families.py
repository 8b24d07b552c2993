"""Braid constructors for torus links, twisted torus knots, K-links, T-links,
half twists and cables, plus the parameter families they are used in.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from math import gcd
from typing import Union

from .braid import BraidError, BraidWord, component_count, exponent_sum, parse_braid_text


class FamilyError(ValueError):
    """Parameters outside a family's defining relations."""


class CableWarning(UserWarning):
    """Cable parameters produce a multi-component satellite."""


def _run(r: int) -> tuple[int, ...]:
    return tuple(range(1, r))


# ---------------------------------------------------------------------------
# parameter records


@dataclass(frozen=True)
class TorusSpec:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 1:
            raise FamilyError(f"torus link needs p >= 2 and q >= 1, got ({self.p}, {self.q})")

    def braid(self) -> BraidWord:
        return torus_braid(self.p, self.q)

    def __str__(self):
        return f"torus {self.p} {self.q}"


@dataclass(frozen=True)
class TwistedTorusSpec:
    """T(p, q; r, s): ``s`` full twists on ``r`` adjacent strands of T(p, q)."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if not 2 <= self.q < self.p:
            raise FamilyError(f"twisted torus knot needs 2 <= q < p, got p={self.p}, q={self.q}")
        if not 2 <= self.r <= self.p:
            raise FamilyError(f"twisted torus knot needs 2 <= r <= p, got r={self.r}, p={self.p}")
        if self.s == 0:
            raise FamilyError("twisted torus knot needs s != 0")

    def braid(self) -> BraidWord:
        return twisted_torus_braid(self)

    def __str__(self):
        return f"ttk {self.p} {self.q} {self.r} {self.s}"


def _check_pairs(pairs, decreasing: bool, strict: bool = True):
    pairs = tuple((int(r), int(s)) for r, s in pairs)
    if not pairs:
        raise FamilyError("at least one (r, s) pair is required")
    if strict:
        rs = [r for r, _ in pairs]
        ordered = all(a > b for a, b in zip(rs, rs[1:])) if decreasing else all(
            a < b for a, b in zip(rs, rs[1:]))
        if not ordered:
            word = "decrease" if decreasing else "increase"
            raise FamilyError(f"r values must strictly {word}: {rs}")
        if min(rs) <= 1:
            raise FamilyError(f"every r must exceed 1: {rs}")
        if any(s <= 0 for _, s in pairs):
            raise FamilyError(f"every s must be positive: {[s for _, s in pairs]}")
    else:
        if any(r < 1 for r, _ in pairs):
            raise FamilyError("every r must be positive")
    return pairs


@dataclass(frozen=True)
class KLinkSpec:
    """K((r_1, s_1), ..., (r_n, s_n)): stacked twist blocks, largest r first.

    ``strict=False`` admits the non-canonical intermediate words that appear in
    isotopy arguments (any order, any nonzero exponent).
    """

    pairs: tuple[tuple[int, int], ...]
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "pairs", _check_pairs(self.pairs, True, self.strict))

    def braid(self) -> BraidWord:
        return klink_braid(self)

    def __str__(self):
        return "klink " + " ".join(f"{r},{s}" for r, s in self.pairs)


@dataclass(frozen=True)
class TLinkSpec:
    """T((r_1, s_1), ..., (r_n, s_n)): twist blocks stacked smallest r first."""

    pairs: tuple[tuple[int, int], ...]
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "pairs", _check_pairs(self.pairs, False, self.strict))

    def braid(self) -> BraidWord:
        return tlink_braid(self)

    def __str__(self):
        return "tlink " + " ".join(f"{r},{s}" for r, s in self.pairs)


Companion = Union[BraidWord, KLinkSpec, TorusSpec, TwistedTorusSpec, TLinkSpec]


def companion_braid(companion: Companion) -> BraidWord:
    return companion if isinstance(companion, BraidWord) else companion.braid()


@dataclass(frozen=True)
class CableSpec:
    """An (m, c)-cable of ``companion``.

    ``c`` is the longitude coefficient of the pattern torus knot. Its reference
    framing is either the Seifert framing of the companion (``"seifert"``) or
    the blackboard framing of the companion's braid closure diagram lowered by
    ``shift`` (``"blackboard"``); :meth:`seifert_coefficient` converts.
    """

    companion: Companion
    m: int
    c: int
    framing: str = "seifert"
    shift: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise FamilyError(f"cable winding number must be >= 1, got {self.m}")
        if self.framing not in ("seifert", "blackboard"):
            raise FamilyError(f"unknown framing {self.framing!r}")
        if self.framing == "seifert" and self.shift:
            raise FamilyError("shift only applies to blackboard framing")

    def companion_braid(self) -> BraidWord:
        return companion_braid(self.companion)

    def seifert_coefficient(self) -> int:
        if self.framing == "seifert":
            return self.c
        e = exponent_sum(self.companion_braid())
        return self.c + self.m * (e - self.shift)

    def braid_twist(self) -> int:
        """Exponent ``j`` such that ``cable_braid(companion, m, j)`` realizes this cable."""
        return self.seifert_coefficient() - self.m * exponent_sum(self.companion_braid())

    def braid(self) -> BraidWord:
        return cable_braid(self.companion_braid(), self.m, self.braid_twist())

    def __str__(self):
        return f"cable ({family_text(self.companion)}) {self.m} {self.braid_twist()}"


# ---------------------------------------------------------------------------
# generators


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})^q on p strands."""
    if p < 2:
        raise FamilyError(f"torus braid needs p >= 2, got {p}")
    if q < 1:
        raise FamilyError(f"torus braid needs q >= 1, got {q}")
    return BraidWord(p, _run(p) * q)


def twisted_torus_braid(spec: TwistedTorusSpec) -> BraidWord:
    """Torus block followed by ``s`` full twists on the first ``r`` strands.

    For ``s < 0`` the twist block is ``|r s|`` copies of
    ``sigma_{r-1}^-1 ... sigma_1^-1``.
    """
    p, q, r, s = spec.p, spec.q, spec.r, spec.s
    if r > p or s == 0:
        raise FamilyError("twisted torus braid needs r <= p and s != 0")
    if s > 0:
        twist = _run(r) * (r * s)
    else:
        twist = tuple(-i for i in range(r - 1, 0, -1)) * (r * -s)
    return BraidWord(p, _run(p) * q + twist)


def klink_braid(spec: KLinkSpec) -> BraidWord:
    """Blocks (sigma_1 ... sigma_{r_i - 1})^{s_i} in the listed order."""
    n = max(r for r, _ in spec.pairs)
    letters: list[int] = []
    for r, s in spec.pairs:
        block = _run(r)
        if s >= 0:
            letters.extend(block * s)
        else:
            letters.extend(tuple(-i for i in reversed(block)) * -s)
    return BraidWord(n, tuple(letters))


def tlink_braid(spec: TLinkSpec) -> BraidWord:
    return klink_braid(KLinkSpec(spec.pairs, strict=False))


def half_twist(k: int, sign: int = 1) -> BraidWord:
    """Half twist on ``k`` strands.

    Positive: (s_1 ... s_{k-1})(s_1 ... s_{k-2}) ... (s_1).
    Negative: (s_{k-1}^-1 ... s_1^-1)(s_{k-1}^-1 ... s_2^-1) ... (s_{k-1}^-1),
    which is the inverse braid of the positive one.
    """
    if k < 2:
        raise FamilyError(f"half twist needs k >= 2, got {k}")
    if sign not in (1, -1):
        raise FamilyError("half twist sign must be +1 or -1")
    letters: list[int] = []
    if sign > 0:
        for top in range(k - 1, 0, -1):
            letters.extend(range(1, top + 1))
    else:
        for low in range(1, k):
            letters.extend(-i for i in range(k - 1, low - 1, -1))
    return BraidWord(k, tuple(letters))


def block_crossing(i: int, m: int, sign: int = 1) -> tuple[int, ...]:
    """Letters crossing bundle ``i`` (strands (i-1)m+1 .. im) with bundle ``i+1``.

    Row ``r`` (0-based) carries the strand at position ``(i-1)m + m - r``
    across the other bundle:
    ``sigma_{b+m-r} sigma_{b+m-r+1} ... sigma_{b+2m-1-r}`` with ``b = (i-1)m``.
    All m**2 letters carry ``sign``.
    """
    base = (i - 1) * m
    out = []
    for r in range(m):
        out.extend(sign * g for g in range(base + m - r, base + 2 * m - r))
    return tuple(out)


def cable_braid(companion: BraidWord, m: int, j: int) -> BraidWord:
    """Braid on ``n*m`` strands whose closure is the (m, m*e + j)-cable, ``e`` the writhe.

    Every strand of ``companion`` is replaced by ``m`` parallel strands, and
    ``(sigma_1 ... sigma_{m-1})^j`` is appended on the first bundle.
    """
    if m < 1:
        raise FamilyError(f"cable needs m >= 1, got {m}")
    if component_count(companion) != 1:
        raise FamilyError("cable companion must close to a knot")
    if m == 1:
        if j:
            raise FamilyError("a 1-cable admits no pattern twist")
        return companion
    letters: list[int] = []
    for e in companion.letters:
        letters.extend(block_crossing(abs(e), m, 1 if e > 0 else -1))
    if j > 0:
        letters.extend(_run(m) * j)
    elif j < 0:
        letters.extend(tuple(-i for i in range(m - 1, 0, -1)) * -j)
    slope = m * exponent_sum(companion) + j
    if gcd(m, slope) != 1:
        warnings.warn(f"({m}, {slope})-cable has {gcd(m, slope)} components", CableWarning,
                      stacklevel=2)
    return BraidWord(companion.strands * m, tuple(letters))


# ---------------------------------------------------------------------------
# families from the theorems


def lemma_symmetry_klink(p: int, q: int) -> KLinkSpec:
    """Positive K-knot whose mirror is T(p, q; p-1, -1).

    Needs k = p - 2q >= 2 with p - 2 = k a and q - 1 = k b; the result is
    K((p-1, k), (ka, 1), ..., (k(1+b)+1, 1), (kb, 1), ..., (2, 1)).
    """
    k = p - 2 * q
    if k < 2:
        raise FamilyError(f"k = p - 2q = {k} must be at least 2")
    if (p - 2) % k:
        raise FamilyError(f"k = {k} must divide p - 2 = {p - 2}")
    a = (p - 2) // k
    if a % 2 == 0:
        raise FamilyError(f"a = (p - 2)/k = {a} must be odd (k must divide q - 1)")
    b = (q - 1) // k
    if b < 1:
        raise FamilyError(f"b = (q - 1)/k = {b} must be positive")
    pairs = [(p - 1, k)]
    pairs += [(r, 1) for r in range(k * a, k * (1 + b), -1)]
    pairs += [(r, 1) for r in range(k * b, 1, -1)]
    return KLinkSpec(tuple(pairs))


def theorem5_companion(b: int) -> KLinkSpec:
    """K((a, 2), (a-1, 1), ..., (b+2, 1), (b, 1), ..., (2, 1)) with a = 2b + 1."""
    a = 2 * b + 1
    pairs = [(a, 2)]
    pairs += [(r, 1) for r in range(a - 1, b + 1, -1)]
    pairs += [(r, 1) for r in range(b, 1, -1)]
    return KLinkSpec(tuple(pairs))


def theorem5_specs(k: int, b: int) -> tuple[TwistedTorusSpec, CableSpec]:
    """T(p, q; p-1, -1) with p = ka + 2, q = kb + 1, a = 2b + 1, and its cable description.

    The pattern coefficient p - 1 + kb is measured against the blackboard
    framing of the companion braid lowered by a - 1 (the writhe of the
    unknotted a-strand braid the construction starts from).
    """
    if k < 2 or b < 1:
        raise FamilyError(f"theorem 5 family needs k >= 2 and b >= 1, got k={k}, b={b}")
    a = 2 * b + 1
    p, q = k * a + 2, k * b + 1
    ttk = TwistedTorusSpec(p, q, p - 1, -1)
    cable = CableSpec(theorem5_companion(b), k, p - 1 + k * b, framing="blackboard", shift=a - 1)
    return ttk, cable


def answer_morimoto_specs(s: int) -> tuple[TwistedTorusSpec, CableSpec]:
    """T(4s+1, 4; 2, 1) and the T(2, 4s+1)-cable on T(2, 2s+1) (blackboard of sigma_1^(2s+1))."""
    if s < 1:
        raise FamilyError(f"s must be positive, got {s}")
    ttk = TwistedTorusSpec(4 * s + 1, 4, 2, 1)
    companion = BraidWord(2, (1,) * (2 * s + 1))
    return ttk, CableSpec(companion, 2, 4 * s + 1, framing="blackboard")


def lee_cable_specs(p: int, q: int, k: int, s: int) -> tuple[TwistedTorusSpec, CableSpec]:
    """T(p, q; kq, s) and the (q, p + k^2 q s)-cable on T(k, ks + 1) (Seifert framing)."""
    if not (1 < q < p and gcd(p, q) == 1):
        raise FamilyError("needs coprime 1 < q < p")
    if not 1 < k * q < p:
        raise FamilyError(f"needs 1 < kq < p, got kq={k * q}")
    if s == 0 or k * s + 1 < 1:
        raise FamilyError(f"needs s != 0 and ks + 1 >= 1, got s={s}")
    ttk = TwistedTorusSpec(p, q, k * q, s)
    companion: Companion = TorusSpec(k, k * s + 1) if k >= 2 else BraidWord(1)
    return ttk, CableSpec(companion, q, p + k * k * q * s)


@dataclass(frozen=True)
class MorimotoParams:
    spec: TwistedTorusSpec
    p_minus_r: int
    companion: tuple[int, int]


def morimoto_family(e: int, k1: int, k2: int, x1: int, x2: int) -> MorimotoParams:
    """Parameters of Morimoto's toroidal twisted torus knots (s = -1).

    ``companion`` is the torus knot T(k2, -(e+1)k2 - 1) of the essential torus;
    the pattern is not determined, so no cable is constructed.
    """
    if not (e > 0 and k1 > 1 and k2 > 1 and x1 > 0 and x2 > 0):
        raise FamilyError("needs e > 0, k1 > 1, k2 > 1, x1 > 0, x2 > 0")
    if gcd(x1, x2) != 1:
        raise FamilyError(f"needs gcd(x1, x2) = 1, got {gcd(x1, x2)}")
    n = k1 + k2 - 1
    p = ((e + 1) * n + 1) * x1 + (e + 1) * x2
    q = (e * n + 1) * x1 + e * x2
    r = ((e + 1) * n - k1 + 2) * x1 + e * x2
    return MorimotoParams(TwistedTorusSpec(p, q, r, -1), p - r, (k2, -(e + 1) * k2 - 1))


# ---------------------------------------------------------------------------
# spec text: "torus p q", "ttk p q r s", "klink r,s ...", "tlink r,s ...",
# "cable (<companion>) m j", or raw braid text "n: ..."

FamilySpec = Union[TorusSpec, TwistedTorusSpec, KLinkSpec, TLinkSpec, CableSpec, BraidWord]


def _ints(tokens, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FamilyError(f"{what}: expected integers, got {' '.join(tokens)!r}") from None


def _pairs(tokens, what):
    out = []
    for tok in tokens:
        parts = tok.split(",")
        if len(parts) != 2:
            raise FamilyError(f"{what}: expected r,s pairs, got {tok!r}")
        out.append(tuple(_ints(parts, what)))
    if not out:
        raise FamilyError(f"{what}: no pairs given")
    return tuple(out)


def parse_family_spec(text: str, strict: bool = True) -> FamilySpec:
    text = text.strip()
    if not text:
        raise FamilyError("empty family spec")
    m = re.fullmatch(r"cable\s*\((.*)\)\s*(\S+)\s+(\S+)", text)
    if m:
        companion = parse_family_spec(m.group(1), strict)
        if isinstance(companion, CableSpec):
            companion = companion.braid()
        mm, j = _ints([m.group(2), m.group(3)], "cable")
        base = companion_braid(companion)
        return CableSpec(companion, mm, mm * exponent_sum(base) + j)
    head, *rest = text.split()
    if head == "torus":
        if len(rest) != 2:
            raise FamilyError("torus: expected 'torus p q'")
        return TorusSpec(*_ints(rest, "torus"))
    if head == "ttk":
        if len(rest) != 4:
            raise FamilyError("ttk: expected 'ttk p q r s'")
        return TwistedTorusSpec(*_ints(rest, "ttk"))
    if head == "klink":
        return KLinkSpec(_pairs(rest, "klink"), strict=strict)
    if head == "tlink":
        return TLinkSpec(_pairs(rest, "tlink"), strict=strict)
    if ":" in text:
        try:
            return parse_braid_text(text)
        except BraidError as exc:
            raise FamilyError(str(exc)) from None
    raise FamilyError(f"unknown family {head!r}")


def build(spec: FamilySpec) -> BraidWord:
    return spec if isinstance(spec, BraidWord) else spec.braid()


def family_text(spec: FamilySpec) -> str:
    from .braid import format_braid

    return format_braid(spec) if isinstance(spec, BraidWord) else str(spec)

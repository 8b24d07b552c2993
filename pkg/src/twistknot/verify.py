"""Equivalence checks by invariant fingerprints and the catalogue of theorem suites.

A "consistent" verdict means every compared invariant agrees. Invariants are
incomplete, so consistency is evidence for equivalence and never a proof.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Callable, Optional

from .alexander import alexander as _alexander
from .braid import BraidWord, component_count, mirror
from .config import ResourceLimitError, limits
from .families import (
    FamilyError, KLinkSpec, TorusSpec, TwistedTorusSpec, answer_morimoto_specs, cable_braid,
    lee_cable_specs, lemma_symmetry_klink, theorem5_specs,
)
from .invariants import cable_alexander, match_torus_knot, torus_alexander
from .jones import jones as _jones
from .laurent import LaurentPoly

CONSISTENT, DISTINCT, SKIPPED = "consistent", "distinct", "skipped"
DISCLAIMER = ("consistent = every compared invariant agrees; this is necessary, "
              "not sufficient, for equivalence")


@lru_cache(maxsize=512)
def alexander(w: BraidWord) -> LaurentPoly:
    return _alexander(w)


@lru_cache(maxsize=512)
def _jones_cached(w: BraidWord, tl_max: int, max_crossings: int) -> LaurentPoly:
    return _jones(w)


def jones(w: BraidWord) -> LaurentPoly:
    lim = limits()
    return _jones_cached(w, lim.tl_max_strands, lim.max_crossings)


@dataclass(frozen=True)
class Evidence:
    invariant: str
    left: object
    right: object
    equal: bool

    def to_json(self) -> dict:
        def enc(v):
            return v.to_json() if isinstance(v, LaurentPoly) else v
        return {"invariant": self.invariant, "left": enc(self.left), "right": enc(self.right),
                "equal": self.equal}


@dataclass
class Verdict:
    status: str
    evidence: list[Evidence] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"status": self.status, "evidence": [e.to_json() for e in self.evidence],
                "notes": list(self.notes)}


def _verdict(evidence: list[Evidence], notes: list[str]) -> Verdict:
    status = CONSISTENT if all(e.equal for e in evidence) else DISTINCT
    return Verdict(status, evidence, notes)


def check_equivalent(a: BraidWord, b: BraidWord, level: str = "full") -> Verdict:
    """Compare component counts, Alexander and (``level="full"``, within limits) Jones."""
    if level not in ("full", "alexander-only"):
        raise ValueError(f"unknown level {level!r}")
    ca, cb = component_count(a), component_count(b)
    evidence = [Evidence("components", ca, cb, ca == cb)]
    notes: list[str] = []
    aa, ab = alexander(a), alexander(b)
    evidence.append(Evidence("alexander", aa, ab, aa == ab))
    if level == "full":
        try:
            ja, jb = jones(a), jones(b)
            evidence.append(Evidence("jones", ja, jb, ja == jb))
        except ResourceLimitError as exc:
            notes.append(f"jones not compared (alexander-only): {exc}")
    return _verdict(evidence, notes)


def check_alexander_formula(w: BraidWord, formula: LaurentPoly, label: str) -> Verdict:
    """Compare the Alexander polynomial of a closure with a closed-form prediction."""
    comps = component_count(w)
    aw = alexander(w)
    evidence = [Evidence("components", comps, 1, comps == 1),
                Evidence("alexander", aw, formula, aw == formula)]
    return _verdict(evidence, [f"right side: {label}"])


def check_torus(w: BraidWord) -> Verdict:
    """Consistent when the closure matches some torus knot T(p, q), 2 <= q < p."""
    m = match_torus_knot(w)
    if m is None:
        return Verdict(DISTINCT, [Evidence("torus-match", "none", "T(p,q), 2 <= q < p", False)],
                       ["no torus knot matches the invariants"])
    q, p = m.pair
    notes = [] if m.jones_checked else ["chirality undetermined (jones not computed)"]
    pair = f"T({q},{-p if m.mirrored else p})"
    evidence = [Evidence("torus-match", pair, pair, True)]
    if m.jones_checked:
        evidence.append(Evidence("jones", "checked", "checked", True))
    return Verdict(CONSISTENT, evidence, notes)


def check_chirality(a: BraidWord, b: BraidWord) -> Verdict:
    """Jones-only comparison; skipped when Jones is unavailable on either side."""
    try:
        ja, jb = jones(a), jones(b)
    except ResourceLimitError as exc:
        return Verdict(SKIPPED, [], [f"jones unavailable: {exc}"])
    return _verdict([Evidence("jones", ja, jb, ja == jb)], [])


# ---------------------------------------------------------------------------
# suites

@dataclass
class Case:
    """One suite case. ``role``: claim (the theorem's statement under the
    package's framing conventions), literal (a reading of the statement that
    the invariants refute; expected distinct), or control (deliberate
    perturbation; expected distinct)."""
    label: str
    params: tuple
    role: str
    expected: str
    run: Callable[[], Verdict]
    skip_ok: bool = False


@dataclass
class CaseResult:
    label: str
    params: tuple
    role: str
    expected: str
    verdict: Verdict
    seconds: float
    skip_ok: bool = False

    @property
    def ok(self) -> bool:
        if self.verdict.status == self.expected:
            return True
        return self.skip_ok and self.verdict.status == SKIPPED

    def to_json(self, timings: bool = False) -> dict:
        out = {"label": self.label, "params": list(self.params), "role": self.role,
               "expected": self.expected, "ok": self.ok, **self.verdict.to_json()}
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class SuiteReport:
    suite: str
    params: list[tuple]
    cases: list[CaseResult]
    disclaimer: str = DISCLAIMER

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def to_json(self, timings: bool = False) -> dict:
        return {"suite": self.suite, "params": [list(p) for p in self.params], "ok": self.ok,
                "disclaimer": self.disclaimer, "cases": [c.to_json(timings) for c in self.cases]}

    def json_text(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), indent=2, sort_keys=True) + "\n"

    def text(self, timings: bool = False) -> str:
        lines = [f"suite {self.suite}: {'OK' if self.ok else 'UNEXPECTED'}", f"  ({self.disclaimer})"]
        for c in self.cases:
            mark = "ok " if c.ok else "BAD"
            row = f"  {mark} {c.verdict.status:<10} expected {c.expected:<10} [{c.role}] {c.label}"
            if timings:
                row += f"  ({c.seconds:.2f}s)"
            lines.append(row)
            for e in c.verdict.evidence:
                if not e.equal:
                    lines.append(f"        {e.invariant} differs: {e.left}  vs  {e.right}")
            for n in c.verdict.notes:
                lines.append(f"        note: {n}")
        return "\n".join(lines) + "\n"


def _pair_case(label, params, role, expected, a, b, level="full"):
    return Case(label, params, role, expected, lambda: check_equivalent(a(), b(), level))


def _toruslemma(p, q, s):
    left = lambda: KLinkSpec(((p, q), (q, q * s))).braid()
    right = lambda: TorusSpec(q, p + q * s).braid()
    return [
        _pair_case(f"K(({p},{q}),({q},{q * s})) vs T({q},{p + q * s})", (p, q, s), "claim", CONSISTENT,
                   left, right),
        _pair_case(f"control: K(({p},{q}),({q},{q * s + 1})) vs T({q},{p + q * s})", (p, q, s), "control",
                   DISTINCT, lambda: KLinkSpec(((p, q), (q, q * s + 1))).braid(), right),
    ]


def _prop1(p, q, k, s):
    left = lambda: KLinkSpec(((p, q + k), (q, q * s))).braid()
    return [
        _pair_case(f"K(({p},{q + k}),({q},{q * s})) vs K(({p + q * s},{q}),({p},{k}))", (p, q, k, s), "claim",
                   CONSISTENT, left, lambda: KLinkSpec(((p + q * s, q), (p, k))).braid()),
        _pair_case(f"control: K(({p},{q + k}),({q},{q * s})) vs K(({p + q * s},{q}),({p},{k + 1}))",
                   (p, q, k, s), "control", DISTINCT, left,
                   lambda: KLinkSpec(((p + q * s, q), (p, k + 1))).braid()),
    ]


def _lemma3(s):
    n = 4 * (s - 1)
    left = lambda: KLinkSpec(((6, 2), (4, 3 + n))).braid()
    return [
        _pair_case(f"K((6,2),(4,{3 + n})) vs K((4,{5 + n}),(3,1))", (s,), "claim", CONSISTENT, left,
                   lambda: KLinkSpec(((4, 5 + n), (3, 1))).braid()),
        _pair_case(f"control: K((6,2),(4,{3 + n})) vs K((4,{7 + n}),(3,1))", (s,), "control", DISTINCT, left,
                   lambda: KLinkSpec(((4, 7 + n), (3, 1))).braid()),
    ]


def _answer_morimoto(s):
    ttk, cable = answer_morimoto_specs(s)
    companion = cable.companion_braid()
    seifert = cable.seifert_coefficient()
    delta = torus_alexander(2, 2 * s + 1)
    left = ttk.braid
    return [
        _pair_case(f"{ttk} vs cable_braid(sigma1^{2 * s + 1}, 2, {cable.braid_twist()})", (s,), "claim",
                   CONSISTENT, left, cable.braid),
        Case(f"alexander {ttk} vs cable_alexander(T(2,{2 * s + 1}), 2, {seifert})", (s,), "claim", CONSISTENT,
             lambda: check_alexander_formula(left(), cable_alexander(delta, 2, seifert),
                                             f"(2,{seifert})-cable of T(2,{2 * s + 1})")),
        _pair_case(f"literal: {ttk} vs cable_braid(sigma1^{2 * s + 1}, 2, -1)", (s,), "literal", DISTINCT,
                   left, lambda: cable_braid(companion, 2, -1)),
        Case(f"literal: alexander {ttk} vs cable_alexander(T(2,{2 * s + 1}), 2, {4 * s + 1})", (s,), "literal",
             DISTINCT, lambda: check_alexander_formula(left(), cable_alexander(delta, 2, 4 * s + 1),
                                                       f"(2,{4 * s + 1})-cable of T(2,{2 * s + 1})")),
        _pair_case(f"control: {ttk} vs cable_braid(sigma1^{2 * s + 1}, 2, {cable.braid_twist() + 2})", (s,),
                   "control", DISTINCT, left, lambda: cable_braid(companion, 2, cable.braid_twist() + 2)),
    ]


def _answer_morimoto_corollary(s):
    _, cable = answer_morimoto_specs(s)
    companion = cable.companion_braid()
    a, b = 4 * s + 1, 4
    cases = []
    for r1, s1 in ((a, b), (b, a)):
        knot = lambda r1=r1, s1=s1: KLinkSpec(((r1, s1), (2, 2))).braid()
        cases.append(_pair_case(f"K(({r1},{s1}),(2,2)) vs cable_braid(sigma1^{2 * s + 1}, 2, "
                                f"{cable.braid_twist()})", (s,), "claim", CONSISTENT, knot, cable.braid))
        cases.append(_pair_case(f"literal: K(({r1},{s1}),(2,2)) vs cable_braid(sigma1^{2 * s + 1}, 2, -1)",
                                (s,), "literal", DISTINCT, knot, lambda: cable_braid(companion, 2, -1)))
    cases.append(_pair_case(f"control: K(({a},{b}),(2,4)) vs cable_braid(sigma1^{2 * s + 1}, 2, "
                            f"{cable.braid_twist()})", (s,), "control", DISTINCT,
                            lambda: KLinkSpec(((a, b), (2, 4))).braid(), cable.braid))
    return cases


def _lemma_symmetry(p, q):
    ttk = TwistedTorusSpec(p, q, p - 1, -1)
    kspec = lemma_symmetry_klink(p, q)
    (r1, s1), *rest = kspec.pairs
    perturbed = KLinkSpec(((r1, s1 + 1), *rest))
    return [
        _pair_case(f"{ttk} vs mirror of {kspec}", (p, q), "claim", CONSISTENT, ttk.braid,
                   lambda: mirror(kspec.braid())),
        Case(f"chirality: jones {ttk} vs {kspec} (unmirrored)", (p, q), "claim", DISTINCT,
             lambda: check_chirality(ttk.braid(), kspec.braid()), skip_ok=True),
        _pair_case(f"control: {ttk} vs mirror of {perturbed}", (p, q), "control", DISTINCT, ttk.braid,
                   lambda: mirror(perturbed.braid())),
    ]


def _theorem5(k, b):
    ttk, cable = theorem5_specs(k, b)
    p = ttk.p
    companion = cable.companion_braid()
    seifert = cable.seifert_coefficient()
    literal = p - 1 + k * b
    cases = [
        Case(f"alexander {ttk} vs cable_alexander(companion, {k}, {seifert})", (k, b), "claim", CONSISTENT,
             lambda: check_alexander_formula(ttk.braid(), cable_alexander(alexander(companion), k, seifert),
                                             f"({k},{seifert})-cable of {cable.companion}")),
        Case(f"literal: alexander {ttk} vs cable_alexander(companion, {k}, {literal})", (k, b), "literal",
             DISTINCT, lambda: check_alexander_formula(
                 ttk.braid(), cable_alexander(alexander(companion), k, literal),
                 f"({k},{literal})-cable of {cable.companion}")),
        Case(f"control: alexander {ttk} vs cable_alexander(companion, {k}, {seifert + 2 * k})", (k, b),
             "control", DISTINCT, lambda: check_alexander_formula(
                 ttk.braid(), cable_alexander(alexander(companion), k, seifert + 2 * k),
                 f"({k},{seifert + 2 * k})-cable of {cable.companion}")),
    ]
    lim = limits()
    if max(ttk.p, k * companion.strands) <= lim.tl_max_strands:
        # the twisted torus knot is the mirror of the positive K-knot, hence of the positive cable
        cases.append(_pair_case(f"{ttk} vs mirror of cable_braid(companion, {k}, {cable.braid_twist()})",
                                (k, b), "claim", CONSISTENT, ttk.braid, lambda: mirror(cable.braid())))
    return cases


def _lee_cable(p, q, k, s):
    ttk, cable = lee_cable_specs(p, q, k, s)
    seifert = cable.seifert_coefficient()
    delta = alexander(cable.companion_braid())
    name = f"T({k},{k * s + 1})"
    return [
        Case(f"alexander {ttk} vs cable_alexander({name}, {q}, {seifert})", (p, q, k, s), "claim", CONSISTENT,
             lambda: check_alexander_formula(ttk.braid(), cable_alexander(delta, q, seifert),
                                             f"({q},{seifert})-cable of {name}")),
        _pair_case(f"{ttk} vs cable_braid({name}, {q}, {cable.braid_twist()})", (p, q, k, s), "claim",
                   CONSISTENT, ttk.braid, cable.braid),
        Case(f"control: alexander {ttk} vs cable_alexander({name}, {q}, {seifert + 2 * q})", (p, q, k, s),
             "control", DISTINCT, lambda: check_alexander_formula(
                 ttk.braid(), cable_alexander(delta, q, seifert + 2 * q), f"({q},{seifert + 2 * q})-cable")),
    ]


def _corollary1_torus(q, m):
    p = m * q + m + 1
    spec = KLinkSpec(((p + q, q), (p, 1)))
    cases = [Case(f"{spec} is a torus knot (p = {m}*{q} + {m} + 1 = {p})", (q, m), "claim", CONSISTENT,
                  lambda: check_torus(spec.braid()))]
    # control: k = 2 with p coprime to q + 2 leaves the torus case of the statement
    pc = p if gcd(p, q + 2) == 1 else p + 1
    ctrl = KLinkSpec(((pc + q, q), (pc, 2)))
    cases.append(Case(f"control: {ctrl} is not a torus knot", (q, m), "control", DISTINCT,
                      lambda: check_torus(ctrl.braid())))
    return cases


def _morimoto_yamada(p, q):
    k = 2
    b = (q - 1) // k
    if k * (2 * b + 1) + 2 != p or k * b + 1 != q:
        raise FamilyError(f"T({p},{q};{p - 1},-1) is not in the k = 2 family of the cable theorem")
    return [c for c in _theorem5(k, b) if not c.label.startswith("control") and "mirror" not in c.label]


@dataclass(frozen=True)
class SuiteDef:
    build: Callable[..., list[Case]]
    defaults: tuple[tuple, ...]
    arity: int
    bounds: str


SUITES: dict[str, SuiteDef] = {
    "toruslemma": SuiteDef(_toruslemma, ((5, 2, 1), (5, 3, 1), (7, 2, 2), (7, 3, 1), (4, 3, 2)), 3,
                           "p q s with 1 < q < p, s >= 1"),
    "prop1": SuiteDef(_prop1, ((3, 2, 1, 1), (4, 3, 2, 1), (5, 2, 1, 2), (5, 3, 2, 1)), 4,
                      "p q k s with 2 <= q < p, k >= 1, s >= 1"),
    "lemma3": SuiteDef(_lemma3, ((1,), (2,)), 1, "s >= 1"),
    "answerMorimoto": SuiteDef(_answer_morimoto, ((1,), (2,), (3,)), 1, "s >= 1"),
    "answerMorimoto-corollary": SuiteDef(_answer_morimoto_corollary, ((1,), (2,)), 1, "s >= 1"),
    "lemmaSymmetry": SuiteDef(_lemma_symmetry, ((8, 3), (12, 5)), 2,
                              "p q with k = p - 2q >= 2, k | p - 2, (p - 2)/k odd"),
    "theorem5": SuiteDef(_theorem5, ((2, 1), (2, 2)), 2, "k >= 2, b >= 1"),
    "lee-cable": SuiteDef(_lee_cable, ((5, 2, 2, 1),), 4, "p q k s with coprime 1 < q < p, 1 < kq < p"),
    "corollary1-torus": SuiteDef(_corollary1_torus, ((2, 1), (3, 1), (2, 2)), 2, "q >= 2, m >= 1"),
    "morimotoYamada": SuiteDef(_morimoto_yamada, ((8, 3), (12, 5), (20, 9), (24, 11), (32, 15)), 2,
                               "p q = 4b + 4, 2b + 1"),
}

# largest parameter the suites accept; keeps Burau sizes at desk scale
_MAX_PARAM = 64


class SuiteError(ValueError):
    pass


def run_suite(suite: str, params: Optional[list[tuple]] = None) -> SuiteReport:
    if suite not in SUITES:
        raise SuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    sd = SUITES[suite]
    params = list(sd.defaults) if not params else [tuple(p) for p in params]
    cases: list[Case] = []
    for p in params:
        if len(p) != sd.arity:
            raise SuiteError(f"suite {suite} takes {sd.arity} parameters ({sd.bounds}), got {p}")
        if any(abs(x) > _MAX_PARAM for x in p):
            raise SuiteError(f"suite {suite}: parameters {p} exceed the bound {_MAX_PARAM}")
        try:
            cases.extend(sd.build(*p))
        except FamilyError as exc:
            raise SuiteError(f"suite {suite}: parameters {p} out of bounds ({sd.bounds}): {exc}") from None
    results = []
    for c in cases:
        t0 = time.perf_counter()
        verdict = c.run()
        results.append(CaseResult(c.label, c.params, c.role, c.expected, verdict,
                                  time.perf_counter() - t0, c.skip_ok))
    return SuiteReport(suite, params, results)


# ---------------------------------------------------------------------------
# conjecture scan

@dataclass
class ScanRow:
    p: int
    q: int
    r: int
    status: str  # cable-match, torus-match, unmatched, skipped
    detail: str

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r, "status": self.status, "detail": self.detail}


@dataclass
class ScanReport:
    bounds: dict
    rows: list[ScanRow]
    disclaimer: str = "evidence table only: invariant matches do not certify satellite structure"

    def to_json(self) -> dict:
        return {"bounds": self.bounds, "disclaimer": self.disclaimer, "rows": [r.to_json() for r in self.rows]}

    def json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def text(self) -> str:
        bounds = " ".join(f"{k}={v}" for k, v in sorted(self.bounds.items()))
        lines = [f"scan {bounds}", f"  ({self.disclaimer})"]
        lines += [f"  T({r.p},{r.q};{r.r},1)  {r.status:<12} {r.detail}" for r in self.rows]
        return "\n".join(lines) + "\n"

    def flagged(self) -> list[ScanRow]:
        return [r for r in self.rows if r.status in ("cable-match", "unmatched")]


def _cable_family_alexander(s: int) -> LaurentPoly:
    # the (2, 8s+3)-cable on T(2, 2s+1), Seifert slope of the answerMorimoto cable
    return cable_alexander(torus_alexander(2, 2 * s + 1), 2, 8 * s + 3)


def scan_conjecture(p_max: int, q_max: Optional[int] = None, crossing_cap: Optional[int] = None,
                    q_min: int = 2) -> ScanReport:
    """Classify T(p, q; r, 1), r < p, r not a multiple of q, by Alexander (and Jones when available)."""
    if p_max > _MAX_PARAM:
        raise SuiteError(f"p_max {p_max} exceeds the scan bound {_MAX_PARAM}")
    q_max = p_max - 1 if q_max is None else q_max
    cap = limits().max_crossings if crossing_cap is None else crossing_cap
    rows = []
    for p in range(3, p_max + 1):
        for q in range(q_min, min(q_max, p - 1) + 1):
            if gcd(p, q) != 1:
                continue
            for r in range(2, p):
                if r % q == 0:
                    continue
                spec = TwistedTorusSpec(p, q, r, 1)
                w = spec.braid()
                if len(w) > cap:
                    rows.append(ScanRow(p, q, r, "skipped", f"{len(w)} crossings > cap {cap}"))
                    continue
                alex = alexander(w)
                status, detail = "unmatched", "no torus knot or answerMorimoto cable matches"
                s = 1
                while 12 * s + 2 <= alex.span():
                    if 12 * s + 2 == alex.span() and _cable_family_alexander(s) == alex:
                        status, detail = "cable-match", f"(2,{8 * s + 3})-cable of T(2,{2 * s + 1}) (s={s})"
                    s += 1
                if status == "unmatched":
                    m = match_torus_knot(w)
                    if m is not None:
                        status, detail = "torus-match", f"T{m.pair}"
                rows.append(ScanRow(p, q, r, status, detail))
    return ScanReport({"p_max": p_max, "q_max": q_max, "q_min": q_min, "crossing_cap": cap}, rows)

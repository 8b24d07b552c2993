import warnings

import pytest

from twistknot.alexander import alexander
from twistknot.braid import BraidWord, Move, apply_move, component_count, exponent_sum
from twistknot.families import (
    CableSpec, CableWarning, FamilyError, KLinkSpec, TLinkSpec, TorusSpec, TwistedTorusSpec,
    answer_morimoto_specs, block_crossing, build, cable_braid, family_text, half_twist, klink_braid,
    lee_cable_specs, lemma_symmetry_klink, morimoto_family, parse_family_spec, theorem5_companion,
    theorem5_specs, tlink_braid, torus_braid, twisted_torus_braid,
)
from twistknot.invariants import cable_alexander, torus_alexander


def run(r):
    return tuple(range(1, r))


def test_torus_braid():
    assert torus_braid(2, 3) == BraidWord(2, (1, 1, 1))
    assert len(torus_braid(5, 4)) == 16
    assert component_count(torus_braid(4, 2)) == 2
    with pytest.raises(FamilyError):
        torus_braid(1, 3)


def test_twisted_torus_braid():
    assert twisted_torus_braid(TwistedTorusSpec(5, 4, 2, 1)).letters == run(5) * 4 + (1, 1)
    w = twisted_torus_braid(TwistedTorusSpec(12, 5, 11, -1))
    assert w.strands == 12
    assert w.letters == run(12) * 5 + tuple(range(-10, 0)) * 11
    assert alexander(TwistedTorusSpec(3, 2, 2, 1).braid()) == torus_alexander(2, 5)


def test_twisted_torus_spec_validation():
    with pytest.raises(FamilyError):
        TwistedTorusSpec(5, 4, 6, 1)
    with pytest.raises(FamilyError):
        TwistedTorusSpec(5, 4, 2, 0)
    with pytest.raises(FamilyError):
        TwistedTorusSpec(4, 5, 2, 1)


def test_klink_braid():
    assert klink_braid(KLinkSpec(((6, 2), (4, 3)))).letters == run(6) * 2 + run(4) * 3
    assert klink_braid(KLinkSpec(((4, 5), (3, 1)))).letters == run(4) * 5 + (1, 2)
    with pytest.raises(FamilyError, match="decrease"):
        KLinkSpec(((3, 1), (4, 2)))
    with pytest.raises(FamilyError):
        KLinkSpec(((3, 1), (2, 0)))
    with pytest.raises(FamilyError):
        KLinkSpec(((3, 1), (1, 2)))


def test_klink_relaxed_mode():
    spec = KLinkSpec(((3, 1), (4, -1)), strict=False)
    assert spec.braid().letters == (1, 2, -3, -2, -1)


def test_tlink_braid():
    assert tlink_braid(TLinkSpec(((2, 3),))) == BraidWord(2, (1, 1, 1))
    assert tlink_braid(TLinkSpec(((2, 2), (4, 6)))).letters == (1, 1) + run(4) * 6
    with pytest.raises(FamilyError):
        TLinkSpec(((4, 6), (2, 2)))
    # same blocks, opposite stacking order: different words
    t = TLinkSpec(((2, 2), (3, 1))).braid()
    k = KLinkSpec(((3, 1), (2, 2))).braid()
    assert t.letters == (1, 1, 1, 2)
    assert k.letters == (1, 2, 1, 1)


def test_klink_equals_twisted_torus():
    for p in range(3, 8):
        for q in range(2, p):
            for r in range(2, p):
                for s in (1, 2):
                    k = klink_braid(KLinkSpec(((p, q), (r, r * s))))
                    assert k == twisted_torus_braid(TwistedTorusSpec(p, q, r, s))


def test_half_twist():
    assert half_twist(3, 1).letters == (1, 2, 1)
    assert half_twist(2, 1).letters == (1,)
    assert half_twist(3, -1).letters == (-2, -1, -2)
    for k in range(2, 7):
        assert len(half_twist(k, 1)) == k * (k - 1) // 2
        assert len(half_twist(k, -1)) == k * (k - 1) // 2
    with pytest.raises(FamilyError):
        half_twist(1)


def _cancel_with_relations(w: BraidWord) -> BraidWord:
    # breadth-first rewriting with free-cancel and braid relations only,
    # restarting whenever a cancellation shortens the word
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            if len(u) == 0:
                return u
            for k in range(len(u) - 1):
                for kind in ("free-cancel", "braid-relation-far", "braid-relation-near"):
                    try:
                        v = apply_move(u, Move(kind, k))
                    except Exception:
                        continue
                    if len(v) < len(u):
                        return _cancel_with_relations(v)
                    if v not in seen and len(seen) < 20000:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt
    return w


def test_half_twists_cancel():
    for k in range(2, 6):
        w = half_twist(k, 1) * half_twist(k, -1)
        assert len(_cancel_with_relations(w)) == 0


def test_block_crossing():
    assert block_crossing(1, 2) == (2, 3, 1, 2)
    assert block_crossing(2, 2, -1) == (-4, -5, -3, -4)
    assert len(block_crossing(1, 3)) == 9


def test_cable_braid_examples():
    assert cable_braid(BraidWord(1), 2, 3) == BraidWord(2, (1, 1, 1))
    w = cable_braid(BraidWord(2, (1, 1, 1)), 2, -1)
    assert w.strands == 4
    assert alexander(w) == cable_alexander(torus_alexander(2, 3), 2, 5)
    t = BraidWord(3, (1, -2, 1, -2))
    assert cable_braid(t, 1, 0) == t


def test_cable_braid_errors_and_flags():
    with pytest.raises(FamilyError):
        cable_braid(BraidWord(2, (1, 1)), 2, 1)
    with pytest.warns(CableWarning):
        w = cable_braid(BraidWord(2, (1, 1, 1)), 2, 0)
    assert component_count(w) == 2


def test_cable_spec_framings():
    seifert = CableSpec(TorusSpec(2, 3), 2, 13)
    assert seifert.braid_twist() == 7
    bb = CableSpec(BraidWord(2, (1, 1, 1)), 2, 5, framing="blackboard")
    assert bb.seifert_coefficient() == 11
    assert bb.braid_twist() == 5
    shifted = CableSpec(BraidWord(3, (1, 2, 1, 2, 1)), 2, 9, framing="blackboard", shift=2)
    assert shifted.seifert_coefficient() == 9 + 2 * (5 - 2)
    with pytest.raises(FamilyError):
        CableSpec(BraidWord(1), 2, 1, framing="seifert", shift=1)


def test_lemma_symmetry_klink():
    assert lemma_symmetry_klink(12, 5).pairs == (
        (11, 2), (10, 1), (9, 1), (8, 1), (7, 1), (4, 1), (3, 1), (2, 1))
    assert lemma_symmetry_klink(8, 3).pairs == ((7, 2), (6, 1), (5, 1), (2, 1))
    with pytest.raises(FamilyError, match="divide"):
        lemma_symmetry_klink(9, 3)
    with pytest.raises(FamilyError):
        lemma_symmetry_klink(7, 3)


def test_theorem5_specs():
    ttk, cable = theorem5_specs(2, 1)
    assert (ttk.p, ttk.q, ttk.r, ttk.s) == (8, 3, 7, -1)
    # for b = 1 both runs of the companion are empty: K((3,2)), the trefoil
    assert cable.companion == KLinkSpec(((3, 2),))
    assert (cable.m, cable.c) == (2, 9)
    ttk, cable = theorem5_specs(2, 2)
    assert (ttk.p, ttk.q) == (12, 5)
    assert cable.companion.pairs == ((5, 2), (4, 1), (2, 1))
    assert (cable.m, cable.c) == (2, 15)  # p - 1 + kb = 11 + 4
    ttk, cable = theorem5_specs(3, 1)
    assert (ttk.p, ttk.q) == (11, 4)
    assert cable.companion.pairs == ((3, 2),)
    assert (cable.m, cable.c) == (3, 13)


def test_theorem5_companion_skips_b_plus_one():
    assert theorem5_companion(3).pairs == ((7, 2), (6, 1), (5, 1), (3, 1), (2, 1))


def test_theorem5_family_meets_symmetry_preconditions():
    for k in (2, 3, 4):
        for b in (1, 2, 3):
            ttk, _ = theorem5_specs(k, b)
            lemma_symmetry_klink(ttk.p, ttk.q)


def test_cable_companions_are_knots():
    for b in (1, 2, 3):
        _, cable = theorem5_specs(2, b)
        assert component_count(cable.companion_braid()) == 1
    for s in (1, 2, 3):
        _, cable = answer_morimoto_specs(s)
        assert exponent_sum(cable.companion_braid()) == 2 * s + 1


def test_lee_cable_specs():
    ttk, cable = lee_cable_specs(5, 2, 2, 1)
    assert (ttk.r, ttk.s) == (4, 1)
    assert cable.companion == TorusSpec(2, 3)
    assert (cable.m, cable.c) == (2, 13)
    with pytest.raises(FamilyError):
        lee_cable_specs(5, 2, 3, 1)


def test_morimoto_family():
    m = morimoto_family(1, 2, 2, 1, 1)
    assert (m.spec.p, m.spec.q, m.spec.r, m.spec.s) == (9, 5, 7, -1)
    m = morimoto_family(1, 2, 2, 1, 2)
    assert (m.spec.p, m.spec.q, m.spec.r, m.spec.s) == (11, 6, 8, -1)
    assert m.p_minus_r == 3
    with pytest.raises(FamilyError):
        morimoto_family(1, 1, 2, 1, 1)
    with pytest.raises(FamilyError):
        morimoto_family(1, 2, 2, 2, 2)


def test_generator_counts():
    assert len(torus_braid(7, 3)) == 3 * 6
    assert len(TwistedTorusSpec(9, 4, 5, -2).braid()) == 4 * 8 + 5 * 2 * 4
    assert len(cable_braid(BraidWord(3, (1, 2)), 3, 2)) == 2 * 9 + 2 * 2
    assert cable_braid(BraidWord(3, (1, 2)), 3, 2).strands == 9


def test_parse_family_spec():
    assert parse_family_spec("torus 2 3") == TorusSpec(2, 3)
    assert parse_family_spec("ttk 5 4 2 1") == TwistedTorusSpec(5, 4, 2, 1)
    assert parse_family_spec("klink 6,2 4,3") == KLinkSpec(((6, 2), (4, 3)))
    assert parse_family_spec("tlink 2,2 4,6") == TLinkSpec(((2, 2), (4, 6)))
    assert build(parse_family_spec("2: 1 1 1")) == BraidWord(2, (1, 1, 1))
    cable = parse_family_spec("cable (2: 1 1 1) 2 5")
    assert build(cable) == cable_braid(BraidWord(2, (1, 1, 1)), 2, 5)
    nested = parse_family_spec("cable (torus 2 3) 2 5")
    assert build(nested) == build(cable)
    for bad in ("", "torus 2", "ttk 5 4 x 1", "klink 6-2", "blob 1 2", "3: 5"):
        with pytest.raises(FamilyError):
            parse_family_spec(bad)


def test_family_text_round_trip():
    for text in ("torus 2 3", "ttk 5 4 2 1", "klink 6,2 4,3", "tlink 2,2 4,6", "3: 1 -2"):
        spec = parse_family_spec(text)
        assert family_text(spec) == text
        assert parse_family_spec(family_text(spec)) == spec
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        cable = parse_family_spec("cable (torus 2 3) 2 5")
    assert build(parse_family_spec(family_text(cable))) == build(cable)

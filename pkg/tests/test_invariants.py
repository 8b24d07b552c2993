from fractions import Fraction
from math import gcd

import pytest

from twistknot.alexander import alexander
from twistknot.braid import BraidWord, mirror
from twistknot.families import KLinkSpec, TwistedTorusSpec, answer_morimoto_specs, theorem5_specs, torus_braid
from twistknot.invariants import (
    InvariantFingerprint, cable_alexander, fingerprint, identify_torus_knot, match_torus_knot, positive_braid_genus,
    torus_alexander, torus_jones,
)
from twistknot.jones import jones, mirror_poly
from twistknot.laurent import LaurentPoly


def poly(*coeffs):
    return LaurentPoly.from_coeffs(list(coeffs))


def test_torus_alexander_examples():
    assert torus_alexander(2, 3) == poly(1, -1, 1)
    assert torus_alexander(2, 5) == poly(1, -1, 1, -1, 1)
    assert torus_alexander(1, 7) == 1
    assert torus_alexander(3, 2) == torus_alexander(2, 3)
    with pytest.raises(ValueError):
        torus_alexander(2, 4)
    with pytest.raises(ValueError):
        torus_alexander(0, 3)


def test_torus_alexander_span_and_value_at_one():
    for p in range(2, 9):
        for q in range(2, p):
            if gcd(p, q) == 1:
                d = torus_alexander(p, q)
                assert d.span() == (p - 1) * (q - 1)
                assert sum(d.terms.values()) == 1


def test_cable_alexander_examples():
    assert cable_alexander(LaurentPoly.const(1), 2, 3) == poly(1, -1, 1)
    expected = (poly(1, -1, 1, -1, 1) * poly(1, 0, -1, 0, 1)).normalized()
    assert cable_alexander(torus_alexander(2, 3), 2, 5) == expected
    with pytest.raises(ValueError):
        cable_alexander(torus_alexander(2, 3), 2, 4)


def test_cable_alexander_against_braids():
    assert alexander(TwistedTorusSpec(5, 4, 2, 1).braid()) == cable_alexander(torus_alexander(2, 3), 2, 11)
    # theorem5 at k = 2, b = 1: companion K((3,2)), Seifert slope 13
    ttk, cable = theorem5_specs(2, 1)
    companion = alexander(cable.companion_braid())
    assert alexander(ttk.braid()) == cable_alexander(companion, 2, cable.seifert_coefficient())
    assert cable.seifert_coefficient() == 13


def test_torus_jones_matches_temperley_lieb():
    for p in range(3, 8):
        for q in range(2, p):
            if gcd(p, q) == 1:
                assert jones(torus_braid(p, q)) == torus_jones(p, q)
    assert torus_jones(2, 3) == LaurentPoly({1: 1, 3: 1, 4: -1})


def test_positive_braid_genus():
    assert positive_braid_genus(BraidWord(2, (1, 1, 1))) == 1
    assert positive_braid_genus(torus_braid(5, 4)) == 6
    assert positive_braid_genus(BraidWord(1)) == 0
    assert isinstance(positive_braid_genus(BraidWord(1)), Fraction)
    with pytest.raises(ValueError, match="negative"):
        positive_braid_genus(BraidWord(3, (1, -2)))
    with pytest.raises(ValueError, match="components"):
        positive_braid_genus(BraidWord(2, (1, 1)))


def test_fingerprint_examples():
    f = fingerprint(BraidWord(2, (1, 1, 1)))
    assert (f.components, f.alexander, f.genus_bound) == (1, poly(1, -1, 1), 1)
    assert f.jones is not None
    assert fingerprint(torus_braid(4, 2)).components == 2
    f = fingerprint(BraidWord(1))
    assert (f.components, f.alexander, f.jones, f.genus_bound) == (1, 1, 1, 0)


def test_fingerprint_equality_ignores_presentation():
    a = fingerprint(BraidWord(2, (1, 1, 1)))
    b = fingerprint(BraidWord(3, (1, 1, 1, 2)))
    assert a == b
    assert a.strands != b.strands
    assert fingerprint(BraidWord(3, (1, -2)), with_jones=False).jones is None


def test_fingerprint_notes_split_links():
    f = fingerprint(BraidWord(3, (1,)))
    assert f.alexander.is_zero()
    assert any("vanishes" in n for n in f.notes)


def test_fingerprint_json_is_plain_data():
    data = fingerprint(BraidWord(2, (1, 1, 1))).to_json()
    assert data["genus_bound"] == "1"
    assert data["components"] == 1


def test_identify_torus_knot():
    assert identify_torus_knot(BraidWord(2, (1, 1, 1))) == (2, 3)
    assert identify_torus_knot(mirror(BraidWord(2, (1, 1, 1)))) == (2, -3)
    assert identify_torus_knot(torus_braid(5, 3)) == (3, 5)
    # T(3,2;2,1) is sigma1 sigma2 sigma1 sigma2 sigma1 sigma1, which closes to T(2,5)
    assert identify_torus_knot(TwistedTorusSpec(3, 2, 2, 1).braid()) == (2, 5)
    ttk, _ = answer_morimoto_specs(1)
    assert identify_torus_knot(ttk.braid()) is None
    assert identify_torus_knot(BraidWord(3, (1, -2, 1, -2))) is None
    assert identify_torus_knot(BraidWord(1)) is None


def test_identify_corollary_torus_instances():
    # K((p+q,q),(p,1)) with p = mq + m + 1
    for q, m in ((2, 1), (3, 1), (2, 2)):
        p = m * q + m + 1
        assert identify_torus_knot(KLinkSpec(((p + q, q), (p, 1))).braid()) is not None


def test_identify_without_jones_leaves_chirality_open():
    m = match_torus_knot(mirror(BraidWord(2, (1, 1, 1))), with_jones=False)
    assert m.pair == (2, 3) and m.mirrored is None and not m.jones_checked


def test_identify_rejects_links():
    with pytest.raises(ValueError):
        identify_torus_knot(BraidWord(2, (1, 1)))


def test_torus_jones_mirror():
    assert jones(mirror(torus_braid(3, 2))) == mirror_poly(torus_jones(3, 2))


def test_fingerprint_genus_only_compared_when_both_present():
    positive = fingerprint(BraidWord(2, (1, 1, 1)))
    stabilized = fingerprint(BraidWord(3, (1, 1, 1, -2)))
    assert stabilized.genus_bound is None
    assert positive == stabilized
    assert hash(positive) == hash(stabilized)
    other = InvariantFingerprint(1, positive.alexander, positive.jones, Fraction(2))
    assert other != positive

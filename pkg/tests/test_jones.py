import random

import numpy as np
import pytest

from twistknot.braid import BraidWord, Move, apply_move, applicable_moves, mirror, random_braid
from twistknot.config import ResourceLimitError
from twistknot.jones import (
    expected_jones_at_one, jones, jones_at_one, jones_state_sum, kauffman_bracket,
    kauffman_bracket_state_sum, mirror_poly,
)
from twistknot.laurent import LaurentPoly
from twistknot.temperley_lieb import (
    catalan, closure_loops, generator_diagram, identity_diagram, noncrossing_matchings, stack, tl_basis,
)


# Temperley-Lieb basis

def test_basis_size_is_catalan():
    for n in range(1, 8):
        assert len(tl_basis(n)) == catalan(n)
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


def test_matchings_are_noncrossing_and_sorted():
    ms = noncrossing_matchings(8)
    arcs = [sorted((i, j) for i, j in enumerate(m) if i < j) for m in ms]
    assert arcs == sorted(arcs)
    for a in arcs:
        for (i, j) in a:
            for (k, l) in a:
                assert not (i < k < j < l)


def test_algebra_relations():
    n = 4
    e1, e2 = generator_diagram(n, 1), generator_diagram(n, 2)
    assert stack(n, e1, e1) == (e1, 1)
    assert stack(n, identity_diagram(n), e1) == (e1, 0)
    e121, loops = stack(n, stack(n, e1, e2)[0], e1)
    assert (e121, loops) == (e1, 0)
    e13 = stack(n, e1, generator_diagram(n, 3))[0]
    assert e13 == stack(n, generator_diagram(n, 3), e1)[0]


def test_closure_loops():
    assert closure_loops(3, identity_diagram(3)) == 3
    assert closure_loops(3, generator_diagram(3, 1)) == 2


def test_fast_action_matches_stacking():
    for n in range(2, 7):
        basis = tl_basis(n)
        for i in range(1, n):
            targets, loops = basis.action(i)
            for k, d in enumerate(basis.diagrams):
                prod, lp = stack(n, d, generator_diagram(n, i))
                assert basis.index[prod] == targets[k] and lp == loops[k]


# Jones

def test_examples():
    assert jones(BraidWord(1)) == 1
    assert jones(BraidWord(2, (1,))) == 1
    assert jones(BraidWord(2, (1, 1, 1))) == LaurentPoly({1: 1, 3: 1, 4: -1})
    assert jones(BraidWord(3, (1, -2, 1, -2))) == LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
    assert jones(BraidWord(2, (1, 1))) == LaurentPoly({1: -1, 5: -1}, var="s")


def test_state_sum_oracle_on_trefoil():
    w = BraidWord(2, (1, 1, 1))
    assert kauffman_bracket(w) == kauffman_bracket_state_sum(w)
    assert len(jones_state_sum(w).terms) == 3


def test_agrees_with_state_sum():
    rng = random.Random(2)
    for _ in range(250):
        w = random_braid(rng, max_strands=5, max_letters=10)
        assert jones(w) == jones_state_sum(w)


def test_mirror_and_value_at_one():
    rng = random.Random(4)
    for _ in range(200):
        w = random_braid(rng, max_strands=5, max_letters=12)
        v = jones(w)
        assert jones(mirror(w)) == mirror_poly(v)
        assert jones_at_one(v) == expected_jones_at_one(w)
    assert jones(BraidWord(2, (-1, -1, -1))) == mirror_poly(jones(BraidWord(2, (1, 1, 1))))


def test_invariant_under_moves():
    rng = random.Random(9)
    for _ in range(150):
        w = random_braid(rng)
        m = rng.choice(applicable_moves(w))
        assert jones(apply_move(w, m)) == jones(w)


def test_knots_have_integer_exponents():
    assert jones(BraidWord(5, (1, 2, 3, 4) * 4 + (1, 1))).var == "t"
    assert jones(BraidWord(3, (1, 2) * 3)).var == "t"  # three components: integral as well


def test_limits(monkeypatch):
    monkeypatch.setenv("TWISTKNOT_TL_MAX_STRANDS", "3")
    with pytest.raises(ResourceLimitError, match="Alexander"):
        jones(BraidWord(4, (1, 2, 3)))
    monkeypatch.setenv("TWISTKNOT_TL_MAX_STRANDS", "10")
    monkeypatch.setenv("TWISTKNOT_MAX_CROSSINGS", "5")
    with pytest.raises(ResourceLimitError):
        jones(BraidWord(2, (1,) * 7))
    assert jones(BraidWord(2, (1,) * 7), check_limits=False).var == "t"
    monkeypatch.setenv("TWISTKNOT_MAX_CROSSINGS", "many")
    with pytest.raises(ValueError):
        jones(BraidWord(2, (1,)))


def test_state_sum_refuses_large_words():
    with pytest.raises(ResourceLimitError):
        jones_state_sum(BraidWord(2, (1,) * 20))


def test_overflow_switches_to_exact_integers():
    # a long alternating word drives bracket coefficients beyond 64 bits
    w = BraidWord(4, (1, -2, 3, -2) * 30)
    v = jones(w, check_limits=False)
    assert max(abs(c) for c in v.terms.values()) > np.iinfo(np.int64).max
    assert jones_at_one(v) == expected_jones_at_one(w)

"""Jones polynomials of braid closures.

Convention (fixed package-wide): the Kauffman bracket expands a positive
crossing sigma_i as ``A * 1 + A^-1 * e_i`` and a negative one as
``A^-1 * 1 + A * e_i``, with loop value ``delta = -A^2 - A^-2`` and the
unknot normalized to 1. The Jones polynomial is
``(-A^3)^(-writhe) * <closure>`` with ``t = A^-4``.

Knots and links with an odd number of components have integral powers of t.
For an even number of components the powers are half-integral and the result
is returned in the variable ``s = t^(1/2)``.

``jones`` works in the Temperley-Lieb algebra (vector over the planar
diagram basis, one sparse update per letter, Markov trace at the end).
``jones_state_sum`` enumerates all 2^c Kauffman states of the closed braid
diagram and is kept as an independent oracle for small words.
"""

from __future__ import annotations

import itertools

import numpy as np

from .braid import BraidWord, component_count, exponent_sum
from .config import ResourceLimitError, limits
from .laurent import LaurentPoly
from .temperley_lieb import tl_basis

DELTA = LaurentPoly({2: -1, -2: -1}, var="A")
_OVERFLOW_GUARD = 1 << 62


def _bracket_to_jones(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    factor = LaurentPoly.monomial(3 * -writhe, (-1) ** (writhe % 2), var="A")  # (-A^3)^-w
    v = bracket * factor
    exps = list(v.terms)
    if all(e % 4 == 0 for e in exps):
        return LaurentPoly({-e // 4: c for e, c in v.terms.items()}, var="t")
    if all(e % 2 == 0 for e in exps):
        return LaurentPoly({-e // 2: c for e, c in v.terms.items()}, var="s")
    raise ArithmeticError("bracket has odd A-exponents; inconsistent state sum")


def _delta_power(k: int) -> LaurentPoly:
    return DELTA ** k if k >= 0 else LaurentPoly.const(1, "A")


def check_jones_limits(w: BraidWord) -> None:
    lim = limits()
    if w.strands > lim.tl_max_strands:
        raise ResourceLimitError(
            f"Jones on {w.strands} strands exceeds the Temperley-Lieb strand cap "
            f"{lim.tl_max_strands}; compare Alexander only or raise TWISTKNOT_TL_MAX_STRANDS")
    if len(w) > lim.max_crossings:
        raise ResourceLimitError(
            f"Jones on {len(w)} crossings exceeds the crossing cap {lim.max_crossings}; "
            f"compare Alexander only or raise TWISTKNOT_MAX_CROSSINGS")


def kauffman_bracket(w: BraidWord) -> LaurentPoly:
    """Kauffman bracket of the closure via the Temperley-Lieb trace (variable ``A``)."""
    basis = tl_basis(w.strands)
    # After k letters every A-exponent has the parity of k, so column c of X
    # holds the coefficient of A^(lo + 2c). The window is trimmed to the support.
    lo = 0
    X = np.zeros((len(basis), 1), dtype=np.int64)
    X[basis.identity, 0] = 1
    for e in w.letters:
        targets, loops = basis.action(abs(e))
        if X.dtype != object:
            # one step adds up to fan_in e_i images (each at most twice |X|) to the identity term
            bound = int(np.abs(X).max()) * (1 + 2 * basis.fan_in(abs(e)))
            if bound > _OVERFLOW_GUARD:
                X = X.astype(object)
        rows, width = X.shape
        new = np.zeros((rows, width + 3), dtype=X.dtype)
        # new window starts at lo - 3; identity smoothing gets A^sign, e_i smoothing A^-sign,
        # and a closed loop multiplies the e_i term by delta = -A^2 - A^-2
        ident, cup, loop_offsets = (2, 1, (0, 2)) if e > 0 else (1, 2, (1, 3))
        new[:, ident:ident + width] += X
        Y = np.zeros_like(new)
        plain = loops == 0
        Y[plain, cup:cup + width] = X[plain]
        looped = ~plain
        for off in loop_offsets:
            Y[looped, off:off + width] -= X[looped]
        np.add.at(new, targets, Y)
        lo -= 3
        support = np.nonzero(np.any(new != 0, axis=0))[0]
        if len(support) == 0:
            return LaurentPoly(var="A")
        X = new[:, support[0]:support[-1] + 1]
        lo += 2 * int(support[0])
    total = LaurentPoly(var="A")
    for k in np.nonzero(np.any(X != 0, axis=1))[0]:
        row = X[k]
        coeff = LaurentPoly({lo + 2 * int(j): int(row[j]) for j in np.nonzero(row != 0)[0]}, var="A")
        total = total + coeff * _delta_power(int(basis.closure_loops[k]) - 1)
    return total


def jones(w: BraidWord, check_limits: bool = True) -> LaurentPoly:
    """Jones polynomial of the oriented closure of ``w`` (see module conventions)."""
    if check_limits:
        check_jones_limits(w)
    return _bracket_to_jones(kauffman_bracket(w), exponent_sum(w))


def kauffman_bracket_state_sum(w: BraidWord) -> LaurentPoly:
    """Bracket by exhaustive enumeration of the 2^c smoothings of the closed braid diagram."""
    n, L = w.strands, len(w)
    if L == 0:
        return _delta_power(n - 1)
    # node (level, position); level L is identified with level 0 by the closure
    def node(level, pos):
        return (level % L) * n + pos

    total: dict[int, int] = {}
    for state in itertools.product((0, 1), repeat=L):
        parent = list(range(L * n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        weight = 0
        for k, (e, horizontal) in enumerate(zip(w.letters, state)):
            i = abs(e) - 1
            for pos in range(n):
                if pos not in (i, i + 1):
                    union(node(k, pos), node(k + 1, pos))
            if horizontal:
                union(node(k, i), node(k, i + 1))
                union(node(k + 1, i), node(k + 1, i + 1))
            else:
                union(node(k, i), node(k + 1, i))
                union(node(k, i + 1), node(k + 1, i + 1))
            sign = 1 if e > 0 else -1
            weight += -sign if horizontal else sign
        loops = len({find(x) for x in range(L * n)})
        for ex, c in _delta_power(loops - 1).terms.items():
            total[weight + ex] = total.get(weight + ex, 0) + c
    return LaurentPoly(total, var="A")


def jones_state_sum(w: BraidWord, max_crossings: int = 16) -> LaurentPoly:
    if len(w) > max_crossings:
        raise ResourceLimitError(f"state sum over 2^{len(w)} states refused (cap 2^{max_crossings})")
    return _bracket_to_jones(kauffman_bracket_state_sum(w), exponent_sum(w))


def mirror_poly(v: LaurentPoly) -> LaurentPoly:
    """Jones polynomial of the mirror image: t -> t^-1."""
    return v.substitute(-1)


def jones_at_one(v: LaurentPoly) -> int:
    return sum(v.terms.values())


def expected_jones_at_one(w: BraidWord) -> int:
    return (-2) ** (component_count(w) - 1)

"""Braid words with braid-group semantics.

A braid on ``n`` strands is a sequence of signed generator letters: ``i``
stands for sigma_i (a positive crossing between strands ``i`` and ``i+1``)
and ``-i`` for its inverse.

Conventions used throughout the package:

* letters are listed from the bottom of the braid to the top;
* ``Permutation.images[j-1]`` is the top position of the strand that starts
  at bottom position ``j``;
* permutations compose as functions, ``(f * g)(j) = f(g(j))``, so the bottom
  of a braid acts first and
  ``permutation_of(compose(a, b)) == permutation_of(b) * permutation_of(a)``.

No normal form is computed; equivalence of closures is decided downstream by
invariants.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Invalid braid word, move or braid text."""


class BraidParseError(BraidError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise BraidError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(e) for e in self.letters)
        object.__setattr__(self, "letters", letters)
        for idx, e in enumerate(letters):
            if e == 0 or abs(e) > self.strands - 1:
                raise BraidError(
                    f"letter {e} at index {idx} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return inverse(self) ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def is_positive(self) -> bool:
        return all(e > 0 for e in self.letters)

    def __str__(self) -> str:
        return format_braid(self)


def make_braid(n: int, letters: Iterable[int] = ()) -> BraidWord:
    """Validated braid word; no normalization is performed."""
    return BraidWord(n, tuple(letters))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """``a`` followed by ``b`` (``b`` stacked on top of ``a``)."""
    if a.strands != b.strands:
        raise BraidError(f"cannot compose braids on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-e for e in reversed(w.letters)))


def mirror(w: BraidWord) -> BraidWord:
    """Crossing-reversed word; its closure is the mirror image."""
    return BraidWord(w.strands, tuple(-e for e in w.letters))


def flip(w: BraidWord) -> BraidWord:
    """Rotate the braid about its vertical axis: letter ±i becomes ±(n-i)."""
    n = w.strands
    return BraidWord(n, tuple((n - abs(e)) * (1 if e > 0 else -1) for e in w.letters))


def reverse(w: BraidWord) -> BraidWord:
    """Reversed letter order; the closure is the same link with all orientations reversed."""
    return BraidWord(w.strands, w.letters[::-1])


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for e in w.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(w.strands, tuple(stack))


def exponent_sum(w: BraidWord) -> int:
    """Sum of letter signs, i.e. the writhe of the standard closure diagram."""
    return sum(1 if e > 0 else -1 for e in w.letters)


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise BraidError(f"{images} is not a permutation of 1..{len(images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Function composition: ``(self * other)(j) == self(other(j))``."""
        if len(self.images) != len(other.images):
            raise BraidError("permutation sizes differ")
        return Permutation(tuple(self.images[other.images[j] - 1] for j in range(len(self.images))))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            j = start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1


def permutation_of(w: BraidWord) -> Permutation:
    pos = list(range(1, w.strands + 1))  # pos[j-1]: current position of strand from bottom j
    where = list(range(w.strands))       # where[p]: bottom label (0-based) at position p
    for e in w.letters:
        i = abs(e) - 1
        a, b = where[i], where[i + 1]
        where[i], where[i + 1] = b, a
        pos[a], pos[b] = i + 2, i + 1
    return Permutation(tuple(pos))


def component_count(w: BraidWord) -> int:
    """Number of components of the closure."""
    return len(permutation_of(w).cycles())


def torus_component_count(p: int, q: int) -> int:
    return gcd(p, q)


# ---------------------------------------------------------------------------
# moves


class MoveKind(str, enum.Enum):
    FREE_CANCEL = "free-cancel"
    FAR = "braid-relation-far"
    NEAR = "braid-relation-near"
    CONJUGATE = "conjugate-cyclic"
    STABILIZE = "stabilize"
    DESTABILIZE = "destabilize"
    FLIP = "flip"
    MIRROR = "mirror"
    REVERSE = "reverse"


@dataclass(frozen=True)
class Move:
    """A rewrite of a braid word.

    ``position`` is the letter index for the local moves and the rotation
    amount for ``conjugate-cyclic``; ``sign`` selects the new letter's sign for
    ``stabilize``.
    """

    kind: MoveKind
    position: int = 0
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", MoveKind(self.kind))
        if self.sign not in (1, -1):
            raise BraidError("move sign must be +1 or -1")


def _near_rewrite(x: int, y: int, z: int) -> tuple[int, int, int] | None:
    if abs(x) != abs(z) or abs(abs(x) - abs(y)) != 1:
        return None
    i, j = abs(x), abs(y)
    sx, sy, sz = (1 if v > 0 else -1 for v in (x, y, z))
    if sx == sy == sz:
        return (sx * j, sx * i, sx * j)
    if sz == -sx:
        # s_i^e s_j^d s_i^-e = s_j^-e s_i^d s_j^e
        return (-sx * j, sy * i, sx * j)
    return None


def apply_move(w: BraidWord, m: Move) -> BraidWord:
    """Rewrite ``w`` by ``m``; every kind except ``mirror`` preserves the closure's link type."""
    k = m.position
    L = w.letters
    kind = m.kind
    if kind is MoveKind.FREE_CANCEL:
        if not 0 <= k < len(L) - 1 or L[k] != -L[k + 1]:
            raise BraidError(f"free-cancel: letters at {k},{k + 1} are not mutually inverse")
        return BraidWord(w.strands, L[:k] + L[k + 2:])
    if kind is MoveKind.FAR:
        if not 0 <= k < len(L) - 1 or abs(abs(L[k]) - abs(L[k + 1])) < 2:
            raise BraidError(f"braid-relation-far: letters at {k},{k + 1} are not distant")
        return BraidWord(w.strands, L[:k] + (L[k + 1], L[k]) + L[k + 2:])
    if kind is MoveKind.NEAR:
        new = _near_rewrite(*L[k:k + 3]) if 0 <= k < len(L) - 2 else None
        if new is None:
            raise BraidError(f"braid-relation-near: no braid relation applies at {k}")
        return BraidWord(w.strands, L[:k] + new + L[k + 3:])
    if kind is MoveKind.CONJUGATE:
        if not L:
            return w
        r = k % len(L)
        return BraidWord(w.strands, L[r:] + L[:r])
    if kind is MoveKind.STABILIZE:
        n = w.strands
        return BraidWord(n + 1, L + (m.sign * n,))
    if kind is MoveKind.DESTABILIZE:
        top = w.strands - 1
        if not L or abs(L[-1]) != top or sum(1 for e in L if abs(e) == top) != 1:
            raise BraidError(
                f"destabilize: last letter must be ±{top} and occur exactly once"
            )
        return BraidWord(w.strands - 1, L[:-1])
    if kind is MoveKind.FLIP:
        return flip(w)
    if kind is MoveKind.MIRROR:
        return mirror(w)
    if kind is MoveKind.REVERSE:
        return reverse(w)
    raise BraidError(f"unknown move {kind}")  # pragma: no cover


def applicable_moves(w: BraidWord, include_mirror: bool = False) -> list[Move]:
    """Every move applicable to ``w`` (stabilizations in both signs, one rotation per offset)."""
    L = w.letters
    moves = []
    for k in range(len(L) - 1):
        if L[k] == -L[k + 1]:
            moves.append(Move(MoveKind.FREE_CANCEL, k))
        if abs(abs(L[k]) - abs(L[k + 1])) >= 2:
            moves.append(Move(MoveKind.FAR, k))
        if k < len(L) - 2 and _near_rewrite(*L[k:k + 3]) is not None:
            moves.append(Move(MoveKind.NEAR, k))
    moves.extend(Move(MoveKind.CONJUGATE, r) for r in range(1, len(L)))
    moves.append(Move(MoveKind.STABILIZE, sign=1))
    moves.append(Move(MoveKind.STABILIZE, sign=-1))
    top = w.strands - 1
    if L and abs(L[-1]) == top and sum(1 for e in L if abs(e) == top) == 1:
        moves.append(Move(MoveKind.DESTABILIZE))
    moves.append(Move(MoveKind.FLIP))
    moves.append(Move(MoveKind.REVERSE))
    if include_mirror:
        moves.append(Move(MoveKind.MIRROR))
    return moves


def random_braid(rng: random.Random, max_strands: int = 5, max_letters: int = 12,
                 min_strands: int = 1) -> BraidWord:
    n = rng.randint(min_strands, max_strands)
    if n == 1:
        return BraidWord(1)
    count = rng.randint(0, max_letters)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(count)))


# ---------------------------------------------------------------------------
# text format: "n: e1 e2 ..."

def format_braid(w: BraidWord) -> str:
    body = " ".join(str(e) for e in w.letters)
    return f"{w.strands}: {body}" if body else f"{w.strands}:"


def parse_braid_text(text: str) -> BraidWord:
    """Parse ``"n: e1 e2 ..."``; errors carry the line and column of the bad token."""
    numbered = [(i, ln) for i, ln in enumerate(text.splitlines() or [""], start=1) if ln.strip()]
    if len(numbered) > 1:
        raise BraidParseError("braid text must be a single line", numbered[1][0], 1)
    lineno, line = numbered[0] if numbered else (1, "")
    if ":" not in line:
        raise BraidParseError("missing 'n:' header", lineno, 1)
    head, _, rest = line.partition(":")
    try:
        n = int(head.strip())
    except ValueError:
        raise BraidParseError(f"strand count {head.strip()!r} is not an integer", lineno,
                              len(head) - len(head.lstrip()) + 1) from None
    if n < 1:
        raise BraidParseError(f"strand count must be positive, got {n}", lineno, 1)
    letters = []
    for tok_no, mt in enumerate(re.finditer(r"\S+", rest), start=1):
        col = len(head) + 1 + mt.start() + 1
        tok = mt.group()
        try:
            e = int(tok)
        except ValueError:
            raise BraidParseError(f"token {tok_no} ({tok!r}) is not an integer", lineno, col) from None
        if e == 0 or abs(e) > n - 1:
            raise BraidParseError(f"token {tok_no}: letter {e} out of range for {n} strands",
                                  lineno, col)
        letters.append(e)
    return BraidWord(n, tuple(letters))


def braid_from_letters(letters: Sequence[int], strands: int | None = None) -> BraidWord:
    """Word on the fewest strands that fit ``letters`` unless ``strands`` is given."""
    need = max((abs(e) for e in letters), default=0) + 1
    return BraidWord(strands or need, tuple(letters))

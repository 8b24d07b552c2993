"""Alexander polynomials of braid closures from the reduced Burau representation.

``det(I - B(w)) = (1 + t + ... + t^(n-1)) * Alexander(t)`` up to units, where
``B`` is the reduced Burau matrix of the n-strand word ``w``.

Two routes compute the determinant:

* ``burau_det_modular`` evaluates the Burau product at the W-th roots of
  unity modulo NTT-friendly primes, eliminates at every point at once with
  numpy, interpolates by an inverse NTT and lifts the coefficients by CRT.
  W is at least twice the largest possible span, so the cyclic coefficient
  vector has a unique longest zero gap and the Laurent polynomial is
  recovered up to a power of t. CRT adds primes until two consecutive lifts
  agree.
* ``burau_det_exact`` multiplies exact Laurent matrices and runs
  fraction-free (Bareiss) elimination. It is slow beyond a few hundred
  crossings and exists as the independent cross-check.

Reduced Burau, sigma_i acting on the right of the row vector basis: the
matrix is the identity except in column ``i-1`` (0-based) where it holds
``t`` above the diagonal, ``-t`` on it and ``1`` below it.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .braid import BraidWord
from .laurent import LaurentPoly

# (prime, generator of the multiplicative group); all have 2-adic order >= 21.
NTT_PRIMES = (
    (998244353, 3),
    (167772161, 3),
    (469762049, 3),
    (754974721, 11),
    (1004535809, 3),
    (2013265921, 31),
    (2113929217, 5),
    (1811939329, 13),
)

_MAX_PRIMES = len(NTT_PRIMES)


def _mulmod(a, b, p):
    return (a * b) % p


def _powmod_vec(base: np.ndarray, exp: int, p: int) -> np.ndarray:
    result = np.ones_like(base)
    b = base % p
    while exp:
        if exp & 1:
            result = _mulmod(result, b, p)
        b = _mulmod(b, b, p)
        exp >>= 1
    return result


@lru_cache(maxsize=None)
def _roots(p: int, g: int, size: int) -> np.ndarray:
    if (p - 1) % size:
        raise ValueError(f"prime {p} has no roots of unity of order {size}")
    w = pow(g, (p - 1) // size, p)
    out = np.empty(size, dtype=np.int64)
    x = 1
    for k in range(size):
        out[k] = x
        x = x * w % p
    return out


def _intt(values: np.ndarray, p: int, g: int) -> np.ndarray:
    """Coefficients c_k with values[j] = sum_k c_k w^(jk), w the cached root of order len(values)."""
    size = len(values)
    # inverse transform = forward transform with w^-1, scaled by 1/size
    roots = _roots(p, g, size)
    inv_roots = np.concatenate(([1], roots[1:][::-1]))
    a = values.astype(np.int64).copy()
    # bit reversal
    bits = size.bit_length() - 1
    rev = np.zeros(size, dtype=np.int64)
    for b in range(bits):
        rev |= ((np.arange(size) >> b) & 1) << (bits - 1 - b)
    a = a[rev]
    length = 2
    while length <= size:
        half = length // 2
        tw = inv_roots[:: size // length][:half]
        a = a.reshape(-1, length)
        u = a[:, :half].copy()
        v = (a[:, half:] * tw) % p
        a[:, :half] = (u + v) % p
        a[:, half:] = (u - v) % p
        a = a.reshape(-1)
        length *= 2
    return (a * pow(size, p - 2, p)) % p


def _det_values_mod(w: BraidWord, p: int, points: np.ndarray) -> np.ndarray:
    """det(I - B(w)) evaluated at every entry of ``points`` modulo ``p``."""
    m = w.strands - 1
    size = len(points)
    t = (points % p)[:, None]
    tinv = _powmod_vec(points % p, p - 2, p)[:, None]
    # cols[c] holds column c of the Burau product for every point (contiguous updates)
    cols = np.zeros((m, size, m), dtype=np.int64)
    cols[np.arange(m), :, np.arange(m)] = 1
    zero = np.zeros((size, m), dtype=np.int64)
    for e in w.letters:
        c = abs(e) - 1
        left = cols[c - 1] if c >= 1 else zero
        right = cols[c + 1] if c + 1 < m else zero
        # sigma:   t (left - col) + right ;  sigma^-1: t^-1 (right - col) + left
        if e > 0:
            cols[c] = ((left - cols[c]) * t + right) % p
        else:
            cols[c] = ((right - cols[c]) * tinv + left) % p
    # det(I - M) = det((I - M)^T); row c of the transpose is column c of M
    A = (-np.transpose(cols, (1, 0, 2))) % p
    A[:, np.arange(m), np.arange(m)] = (A[:, np.arange(m), np.arange(m)] + 1) % p
    return _det_batch_mod(A, p)


def _det_batch_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Determinants of a stack of matrices over GF(p) by Gaussian elimination with row pivoting."""
    size, m, _ = A.shape
    A = A.copy()
    det = np.ones(size, dtype=np.int64)
    idx = np.arange(size)
    for c in range(m):
        nz = A[:, c:, c] != 0
        has = nz.any(axis=1)
        det[~has] = 0
        prow = c + np.argmax(nz, axis=1)
        swap = prow != c
        if swap.any():
            det[swap] = (-det[swap]) % p
            top = A[idx, c, :].copy()
            A[idx, c, :] = A[idx, prow, :]
            A[idx, prow, :] = top
        piv = A[:, c, c].copy()
        piv[~has] = 1
        det = _mulmod(det, piv, p)
        if c + 1 == m:
            break
        inv = _powmod_vec(piv, p - 2, p)
        factors = _mulmod(A[:, c + 1:, c], inv[:, None], p)
        A[:, c + 1:, c:] = (A[:, c + 1:, c:] - _mulmod(factors[:, :, None], A[:, None, c, c:], p)) % p
    return det


def _window(w: BraidWord) -> int:
    # span(det) <= span(Alexander) + n - 1 <= len(w); double it for an unambiguous wrap gap
    need = 2 * (len(w) + w.strands) + 2
    size = 1
    while size < need:
        size *= 2
    return size


def _signed_crt(residues: list[np.ndarray], primes: list[int]) -> list[int]:
    modulus = 1
    acc = [0] * len(residues[0])
    for res, p in zip(residues, primes):
        inv = pow(modulus, -1, p)
        new_acc = []
        for a, r in zip(acc, res.tolist()):
            k = ((r - a) * inv) % p
            new_acc.append(a + modulus * k)
        acc = new_acc
        modulus *= p
    half = modulus // 2
    return [a - modulus if a > half else a for a in acc]


def _unwrap_cyclic(coeffs: list[int]) -> LaurentPoly:
    """Laurent polynomial (up to t^k) from a cyclic coefficient vector with a long zero gap."""
    size = len(coeffs)
    if not any(coeffs):
        return LaurentPoly()
    best_len, best_end = -1, 0
    run = 0
    # scan twice around the circle to catch gaps crossing index 0
    for k in range(2 * size):
        if coeffs[k % size] == 0:
            run += 1
            if run > best_len:
                best_len, best_end = run, k % size
        else:
            run = 0
    start = (best_end + 1) % size
    ordered = coeffs[start:] + coeffs[:start]
    while ordered and ordered[-1] == 0:
        ordered.pop()
    return LaurentPoly.from_coeffs(ordered)


def burau_det_modular(w: BraidWord) -> LaurentPoly:
    """det(I - B(w)) up to a power of t, by multi-modular evaluation/interpolation."""
    if w.strands == 1:
        return LaurentPoly.const(1)
    size = _window(w)
    residues: list[np.ndarray] = []
    primes: list[int] = []
    previous = None
    for p, g in NTT_PRIMES:
        points = _roots(p, g, size)
        values = _det_values_mod(w, p, points)
        residues.append(_intt(values, p, g))
        primes.append(p)
        if len(primes) < 2:
            continue
        current = _unwrap_cyclic(_signed_crt(residues, primes))
        if previous is not None and current == previous:
            return current
        previous = current
    raise ArithmeticError("Burau determinant did not stabilize under CRT")


def burau_matrix(w: BraidWord) -> list[list[LaurentPoly]]:
    """Exact reduced Burau matrix of ``w`` (size n-1)."""
    m = w.strands - 1
    one = LaurentPoly.const(1)
    zero = LaurentPoly()
    t = LaurentPoly.monomial(1)
    tinv = LaurentPoly.monomial(-1)
    M = [[one if i == j else zero for j in range(m)] for i in range(m)]
    for e in w.letters:
        c = abs(e) - 1
        for row in M:
            if e > 0:
                new = -t * row[c]
                if c >= 1:
                    new = new + t * row[c - 1]
                if c + 1 < m:
                    new = new + row[c + 1]
            else:
                new = -tinv * row[c]
                if c >= 1:
                    new = new + row[c - 1]
                if c + 1 < m:
                    new = new + tinv * row[c + 1]
            row[c] = new
    return M


def bareiss_det(A: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free determinant of a square matrix of Laurent polynomials."""
    n = len(A)
    if n == 0:
        return LaurentPoly.const(1)
    A = [row[:] for row in A]
    sign = 1
    prev = LaurentPoly.const(1)
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not A[r][k].is_zero()), None)
            if swap is None:
                return LaurentPoly()
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]).divmod_exact(prev)
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def burau_det_exact(w: BraidWord) -> LaurentPoly:
    if w.strands == 1:
        return LaurentPoly.const(1)
    M = burau_matrix(w)
    m = len(M)
    A = [[(LaurentPoly.const(1) if i == j else LaurentPoly()) - M[i][j] for j in range(m)]
         for i in range(m)]
    return bareiss_det(A)


def _repunit(n: int) -> LaurentPoly:
    return LaurentPoly.from_coeffs([1] * n)


def alexander(w: BraidWord, method: str = "modular") -> LaurentPoly:
    """Normalized Alexander polynomial of the closure of ``w``.

    Returns the zero polynomial for closures with vanishing Alexander
    polynomial (split links, among others).
    """
    if method == "modular":
        det = burau_det_modular(w)
    elif method == "exact":
        det = burau_det_exact(w)
    else:
        raise ValueError(f"unknown method {method!r}")
    if det.is_zero():
        return det
    return det.divmod_exact(_repunit(w.strands)).normalized()

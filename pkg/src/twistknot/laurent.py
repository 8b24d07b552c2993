"""Integer Laurent polynomials in one variable.

Polynomials are immutable and hashable; zero coefficients are never stored, so
structural equality is polynomial equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Finitely supported map ``exponent -> nonzero int`` with ring operations."""

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t"):
        clean = {}
        for e, c in (terms or {}).items():
            c = int(c)
            if c:
                clean[int(e)] = c
        self._terms = tuple(sorted(clean.items()))
        self.var = var
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0, var: str = "t") -> LaurentPoly:
        """``coeffs[i]`` is the coefficient of ``var**(low + i)``."""
        return cls({low + i: c for i, c in enumerate(coeffs)}, var)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "t") -> LaurentPoly:
        return cls({exp: coeff}, var)

    @classmethod
    def const(cls, c: int, var: str = "t") -> LaurentPoly:
        return cls({0: c}, var)

    # inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    def span(self) -> int:
        """Degree span ``max_exp - min_exp`` (0 for the zero polynomial)."""
        return self.max_exp - self.min_exp if self._terms else 0

    def coeff(self, exp: int) -> int:
        return dict(self._terms).get(exp, 0)

    def coeffs(self) -> list[int]:
        """Dense coefficient list from ``min_exp`` to ``max_exp``."""
        if not self._terms:
            return []
        lo = self.min_exp
        out = [0] * (self.span() + 1)
        for e, c in self._terms:
            out[e - lo] = c
        return out

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._terms)
        for e, c in other._terms:
            d[e] = d.get(e, 0) + c
        return LaurentPoly(d, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(d, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only units ±t^e have Laurent inverses")
            (e, c), = self._terms
            return LaurentPoly({e * k: c ** (-k)}, self.var)
        result = LaurentPoly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``var**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms}, self.var)

    def substitute(self, k: int, var: str | None = None) -> LaurentPoly:
        """Substitute ``t -> t**k`` (``k`` may be negative)."""
        return LaurentPoly({e * k: c for e, c in self._terms}, var or self.var)

    def divmod_exact(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact quotient ``self / divisor``; raises ``ArithmeticError`` on a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly({}, self.var)
        num = self.coeffs()
        den = divisor.coeffs()
        lead = den[-1]
        q = [0] * max(len(num) - len(den) + 1, 0)
        rem = num[:]
        for i in range(len(q) - 1, -1, -1):
            top = rem[i + len(den) - 1]
            if top % lead:
                raise ArithmeticError("division is not exact over the integers")
            qi = top // lead
            q[i] = qi
            if qi:
                for j, dj in enumerate(den):
                    rem[i + j] -= qi * dj
        if any(rem):
            raise ArithmeticError("division leaves a nonzero remainder")
        return LaurentPoly.from_coeffs(q, self.min_exp - divisor.min_exp, self.var)

    def __call__(self, x):
        """Evaluate at ``x``; integer arguments are evaluated exactly as Fractions."""
        if isinstance(x, int):
            x = Fraction(x)
        total = sum(c * x ** e for e, c in self._terms)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    # normalization ------------------------------------------------------

    def normalized(self) -> LaurentPoly:
        """Unit representative: lowest exponent 0 with positive coefficient."""
        if not self._terms:
            return self
        out = self.shift(-self.min_exp)
        return -out if out._terms[0][1] < 0 else out

    def is_palindromic(self) -> bool:
        c = self.coeffs()
        return c == c[::-1]

    # comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms and (self.var == other.var or not self._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._terms, self.var if self._terms else None))
        return self._hash

    # rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms):
            mag = abs(c)
            if e == 0:
                body = f"{mag}"
            elif e == 1:
                body = f"{mag}*{self.var}"
            else:
                body = f"{mag}*{self.var}^{e}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict:
        """JSON form: variable name plus ``[exponent, coefficient]`` pairs, ascending."""
        return {"variable": self.var, "terms": [[e, c] for e, c in self._terms]}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls({e: c for e, c in data["terms"]}, data.get("variable", "t"))

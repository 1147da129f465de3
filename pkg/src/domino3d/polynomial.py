"""Sparse integer Laurent polynomials in a single variable q.

Exponents may be negative.  Values are immutable; all arithmetic is exact
integer arithmetic.  The printed form follows the convention used throughout
this project: descending exponents, with negative powers written ``q^{-1}``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping


class LaurentPoly:
    """An integer Laurent polynomial, stored as {exponent: nonzero coeff}."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, coeff in items:
            acc[exp] = acc.get(exp, 0) + coeff
        self._coeffs = {e: c for e, c in acc.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def q_power(cls, k: int, coeff: int = 1) -> "LaurentPoly":
        """The monomial ``coeff * q^k``."""
        return cls({k: coeff})

    # -- mapping-ish accessors --------------------------------------------

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs, exponent descending."""
        return iter(sorted(self._coeffs.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._coeffs

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        merged = dict(self._coeffs)
        for e, c in other._coeffs.items():
            merged[e] = merged.get(e, 0) + c
        return LaurentPoly(merged)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        merged = dict(self._coeffs)
        for e, c in other._coeffs.items():
            merged[e] = merged.get(e, 0) - c
        return LaurentPoly(merged)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def scale(self, n: int) -> "LaurentPoly":
        return LaurentPoly({e: n * c for e, c in self._coeffs.items()})

    def mul_qk(self, k: int) -> "LaurentPoly":
        """Multiply by q^k (shift every exponent by k)."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    # -- evaluation --------------------------------------------------------

    def eval_at_one(self) -> int:
        """Value at q = 1: the sum of all coefficients."""
        return sum(self._coeffs.values())

    def derivative_at_one(self) -> int:
        """Value of the derivative at q = 1: sum of exponent * coefficient."""
        return sum(e * c for e, c in self._coeffs.items())

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def equal_up_to_shift(self, other: "LaurentPoly") -> int | None:
        """Return k with self == other * q^k, or None if no such k exists.

        The zero polynomial equals only itself, with k = 0.
        """
        if self.is_zero() or other.is_zero():
            return 0 if self.is_zero() and other.is_zero() else None
        k = max(self._coeffs) - max(other._coeffs)
        return k if self == other.mul_qk(k) else None

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for exp, coeff in self.items():
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                qpart = "q" if exp == 1 else f"q^{{{exp}}}"
                body = qpart if mag == 1 else f"{mag}{qpart}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._coeffs.items(), reverse=True))})"

    # -- JSON form ---------------------------------------------------------

    def to_json(self) -> list[list[int]]:
        """[[exponent, coefficient], ...] sorted by exponent descending."""
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls([(int(e), int(c)) for e, c in data])


# -- free-function forms of the core operations ----------------------------


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def sub(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p - q


def scale(p: LaurentPoly, n: int) -> LaurentPoly:
    return p.scale(n)


def mul_qk(p: LaurentPoly, k: int) -> LaurentPoly:
    return p.mul_qk(k)


def eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def derivative_at_one(p: LaurentPoly) -> int:
    return p.derivative_at_one()


def equal_up_to_shift(p: LaurentPoly, q: LaurentPoly) -> int | None:
    return p.equal_up_to_shift(q)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-]?)\s*
        (?:
            (?P<coeff>\d+)\s*\*?\s*(?P<q1>q(?:\^\{?(?P<exp1>-?\d+)\}?)?)?
          | (?P<q2>q(?:\^\{?(?P<exp2>-?\d+)\}?)?)
        )""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical text form, e.g. ``-2q + 1 - 2q^{-1}``."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero()
    pos = 0
    terms: list[tuple[int, int]] = []
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial text at: {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coeff") is not None:
            coeff = sign * int(m.group("coeff"))
            q = m.group("q1")
            exp_s = m.group("exp1")
        else:
            coeff = sign
            q = m.group("q2")
            exp_s = m.group("exp2")
        if q is None:
            exp = 0
        elif exp_s is None:
            exp = 1
        else:
            exp = int(exp_s)
        terms.append((exp, coeff))
        pos = m.end()
    return LaurentPoly(terms)

"""Exact scalar arithmetic for the whole library.

Two kinds of scalars appear downstream: plain arbitrary-precision rationals,
and univariate polynomials in the deformation parameter lambda with rational
coefficients.  A ``ScalarRing`` bundles either choice together with the ring
element that plays the role of lambda, so the same generic code can run at a
fixed rational lambda or fully symbolically.  Every operation here is exact;
no floating point is used anywhere in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

#: The base scalar.  ``fractions.Fraction`` already maintains the canonical
#: form we need (positive denominator, fully reduced, 0 stored as 0/1).
Rational = Fraction

#: Degree marker for the zero polynomial; compares below every integer.
NEG_INF = float("-inf")

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def rat_normalize(numerator: int, denominator: int = 1) -> Fraction:
    """Canonical rational numerator/denominator (sign on the numerator)."""
    if denominator == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse the textual form "p/q" (q > 0) or "p"."""
    if not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


class LambdaPoly:
    """Polynomial in lambda with rational coefficients, lowest degree first.

    Immutable.  Trailing zero coefficients are stripped on construction, so
    the zero polynomial has an empty coefficient tuple.  A constant polynomial
    compares (and hashes) equal to its rational value, matching the natural
    embedding of the rationals into the polynomial ring.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [c if isinstance(c, Fraction) else Fraction(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def _trusted(cls, coeffs: tuple) -> "LambdaPoly":
        # internal fast path: coeffs already Fractions and trailing-stripped
        p = object.__new__(cls)
        p._coeffs = coeffs
        return p

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self):
        """Degree, or the negative-infinity marker for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def coefficient(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __call__(self, value) -> Fraction:
        """Evaluate at a rational point (Horner)."""
        value = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def _coerced(self, other):
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return LambdaPoly._trusted((c,) if c else ())
        return None

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if len(self._coeffs) <= 1:
            return hash(self._coeffs[0] if self._coeffs else Fraction(0))
        return hash(self._coeffs)

    def __neg__(self):
        return LambdaPoly._trusted(tuple(-c for c in self._coeffs))

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        while out and not out[-1]:
            out.pop()
        return LambdaPoly._trusted(tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return LambdaPoly._trusted(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        while out and not out[-1]:
            out.pop()
        return LambdaPoly._trusted(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            raise ZeroDivisionError("division of LambdaPoly by zero scalar")
        inv = Fraction(1, 1) / Fraction(scalar)
        return LambdaPoly._trusted(tuple(c * inv for c in self._coeffs))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("LambdaPoly exponent must be a nonnegative integer")
        result = LambdaPoly._trusted((Fraction(1),))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def to_strings(self) -> list:
        """Serialized form: list of rational strings, lowest degree first."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "LambdaPoly":
        return cls(parse_rational(s) for s in items)

    def __repr__(self):
        return f"LambdaPoly({self.to_strings()})"


#: The indeterminate lambda itself.
LAMBDA = LambdaPoly((0, 1))

ScalarElement = Union[Fraction, LambdaPoly]


def poly_eval(p, value) -> Fraction:
    """Evaluate a LambdaPoly at a rational lambda; rationals pass through.

    Evaluation at 0 or 1 realizes the lambda -> 0 / lambda -> 1 degenerations
    of any symbolically computed quantity.
    """
    if isinstance(p, LambdaPoly):
        return p(value)
    return Fraction(p)


def poly_degree(p):
    """Lambda-degree of a scalar; NEG_INF marks an exact zero."""
    if isinstance(p, LambdaPoly):
        return p.degree
    return 0 if p else NEG_INF


def scalar_to_jsonable(x):
    """JSON-ready form: "p/q" string for rationals, string list for polys."""
    if isinstance(x, LambdaPoly):
        return x.to_strings()
    return str(Fraction(x))


@dataclass(frozen=True)
class ScalarRing:
    """A commutative Q-algebra with a designated lambda element.

    ``fixed_ring(q)`` binds lambda to the rational q and works with plain
    Fractions; ``SYMBOLIC`` keeps lambda as an indeterminate and works with
    LambdaPoly values.  Rings are hashable and used as cache keys.
    """

    lam: ScalarElement

    @property
    def symbolic(self) -> bool:
        return isinstance(self.lam, LambdaPoly)

    def coerce(self, x) -> ScalarElement:
        if self.symbolic:
            if isinstance(x, LambdaPoly):
                return x
            return LambdaPoly((Fraction(x),))
        if isinstance(x, LambdaPoly):
            raise TypeError("cannot coerce a symbolic value into a fixed-lambda ring")
        return Fraction(x)

    @property
    def zero(self) -> ScalarElement:
        return self.coerce(0)

    @property
    def one(self) -> ScalarElement:
        return self.coerce(1)

    def label(self) -> str:
        return "symbolic" if self.symbolic else str(self.lam)


#: Ring of polynomials in lambda (the symbolic mode).
SYMBOLIC = ScalarRing(LAMBDA)


def fixed_ring(lam=0) -> ScalarRing:
    """Ring of rationals with lambda bound to the given rational value."""
    return ScalarRing(Fraction(lam))

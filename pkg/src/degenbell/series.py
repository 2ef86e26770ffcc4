"""Truncated formal power series over a scalar ring.

Series are stored as a fixed-length coefficient list: a series of order N
keeps the coefficients of t^0 .. t^N and every operation truncates beyond
t^N.  All generating functions used by the library are built from three
primitives:

  * ``ps_dlog(ring, order)``      -- the series of log(1 + lambda*t)/lambda,
    whose coefficients are polynomials in lambda, so nothing ever divides by
    lambda and lambda = 0 stays a plain evaluation;
  * ``exp`` of a series with zero constant term;
  * Cauchy products and integer powers.

Coefficients follow the exponential-generating-function (EGF) convention:
the "n-th value" carried by a series sum(a_n t^n / n!) is n! times the
stored coefficient of t^n, extracted with ``egf_coeff``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .scalars import ScalarRing, scalar_to_jsonable


class TruncatedSeries:
    """Immutable truncated series; binary operations require equal order."""

    __slots__ = ("ring", "_coeffs")

    def __init__(self, ring: ScalarRing, coefficients):
        self.ring = ring
        self._coeffs = tuple(ring.coerce(c) for c in coefficients)
        if not self._coeffs:
            raise ValueError("a series stores at least the constant term")

    @classmethod
    def _trusted(cls, ring, coeffs: tuple) -> "TruncatedSeries":
        s = object.__new__(cls)
        s.ring = ring
        s._coeffs = coeffs
        return s

    @classmethod
    def zero(cls, ring: ScalarRing, order: int) -> "TruncatedSeries":
        return cls(ring, [0] * (order + 1))

    @classmethod
    def one(cls, ring: ScalarRing, order: int) -> "TruncatedSeries":
        return cls(ring, [1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond series order {self.order}")
        return self._coeffs[n]

    def egf_coeff(self, n: int):
        """n! times the coefficient of t^n."""
        return factorial(n) * self.coeff(n)

    def _require_same_order(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} vs {other.order}"
            )
        if self.ring != other.ring:
            raise ValueError("series live in different scalar rings")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.ring, self._coeffs))

    def __neg__(self):
        return TruncatedSeries._trusted(self.ring, tuple(-c for c in self._coeffs))

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other)
            return TruncatedSeries._trusted(
                self.ring, tuple(a + b for a, b in zip(self._coeffs, other._coeffs))
            )
        coeffs = list(self._coeffs)
        coeffs[0] = coeffs[0] + self.ring.coerce(other)
        return TruncatedSeries._trusted(self.ring, tuple(coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self + (-other)
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = self.ring.coerce(other)
            return TruncatedSeries._trusted(self.ring, tuple(c * a for a in self._coeffs))
        self._require_same_order(other)
        n = self.order
        a, b = self._coeffs, other._coeffs
        zero = self.ring.zero
        out = [zero] * (n + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return TruncatedSeries._trusted(self.ring, tuple(out))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a nonnegative integer")
        result = TruncatedSeries.one(self.ring, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term.

        Uses the derivative recurrence b_n = (1/n) * sum_{k=1..n} k f_k b_{n-k}
        with b_0 = 1; the only divisions are by integers, which are exact in
        a Q-algebra.
        """
        if self._coeffs[0]:
            raise ValueError("exp requires a zero constant term")
        n = self.order
        f = self._coeffs
        out = [self.ring.one] + [self.ring.zero] * n
        for m in range(1, n + 1):
            acc = self.ring.zero
            for k in range(1, m + 1):
                fk = f[k]
                if fk:
                    acc = acc + (k * fk) * out[m - k]
            out[m] = acc / m
        return TruncatedSeries._trusted(self.ring, tuple(out))

    def to_jsonable(self) -> list:
        """Debug serialization: coefficient list, index = power of t."""
        return [scalar_to_jsonable(c) for c in self._coeffs]

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, {self.to_jsonable()})"


def ps_dlog(ring: ScalarRing, order: int) -> TruncatedSeries:
    """Series of log(1 + lambda*t)/lambda up to t^order.

    The t^m coefficient is (-1)^(m-1) lambda^(m-1) / m, a polynomial in
    lambda, so the division by lambda in the exponent laws never happens
    literally.  At lambda = 0 the series collapses to t.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [ring.zero]
    sign = 1
    for m in range(1, order + 1):
        coeffs.append((sign * ring.lam ** (m - 1)) / m)
        sign = -sign
    return TruncatedSeries._trusted(ring, tuple(coeffs))


def ps_binom_lambda(ring: ScalarRing, a, order: int) -> TruncatedSeries:
    """Series of (1 + lambda*t)^(a/lambda) = exp(a * log(1+lambda*t)/lambda).

    Its n-th EGF coefficient is the degenerate falling factorial (a|lambda)_n.
    """
    return (ring.coerce(a) * ps_dlog(ring, order)).exp()


def deg_exp(ring: ScalarRing, order: int) -> TruncatedSeries:
    """The degenerate exponential (1 + lambda*t)^(1/lambda); e^t at lambda=0."""
    return ps_binom_lambda(ring, 1, order)


def ps_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    if not isinstance(g, TruncatedSeries):
        raise TypeError("ps_mul multiplies two series")
    return f * g


def ps_exp(f: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term."""
    return f.exp()


def ps_pow(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """k-th power by repeated squaring; f^0 = 1."""
    return f ** k


def ps_egf_coeff(f: TruncatedSeries, n: int):
    """n! times the coefficient of t^n."""
    return f.egf_coeff(n)

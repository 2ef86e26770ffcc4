"""Degenerate and extended-degenerate Stirling numbers and Bell polynomials.

Everything here is computable through more than one route so that identity
checks never compare a formula against itself:

  * ``s2_ext`` evaluates the extended degenerate Stirling number by five
    methods (EGF extraction and four closed-form sums), each implementing
    its formula honestly with no n < k short-circuit;
  * ``s2_deg`` (EGF route) has ``s2_deg_closed`` (alternating binomial sum
    over degenerate falling factorials) as an independent twin;
  * Bell polynomials are assembled coefficient-wise from Stirling values,
    while ``bell_series_eval`` recomputes them through exp-of-x on the
    series side and ``dobinski_numeric`` through truncated infinite series.

All values are exact (Fraction at fixed lambda, LambdaPoly symbolically)
except the two Dobinski evaluators, which are the only floating-point
surface and carry an explicit tail bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, comb, factorial

import mpmath

from .classical import XPolynomial, forward_diff, s1
from .scalars import ScalarRing
from .series import TruncatedSeries, deg_exp, ps_binom_lambda

# Series caches are bucketed by truncation order so nearby n share work.
_ORDER_STEP = 16


def _order_for(n: int) -> int:
    return (n // _ORDER_STEP + 1) * _ORDER_STEP


@lru_cache(maxsize=None)
def _deg_exp_series(ring: ScalarRing, order: int) -> TruncatedSeries:
    return deg_exp(ring, order)


@lru_cache(maxsize=None)
def _em1_pow(ring: ScalarRing, k: int, order: int) -> TruncatedSeries:
    """((1+lam t)^(1/lam) - 1)^k, built incrementally over k."""
    if k == 0:
        return TruncatedSeries.one(ring, order)
    return _em1_pow(ring, k - 1, order) * (_deg_exp_series(ring, order) - 1)


@lru_cache(maxsize=None)
def _binom_series(ring: ScalarRing, a, order: int) -> TruncatedSeries:
    return ps_binom_lambda(ring, a, order)


@lru_cache(maxsize=None)
def _lam_pow(ring: ScalarRing, e: int):
    return ring.lam ** e


@lru_cache(maxsize=None)
def _fd(k: int, m: int, r: int) -> Fraction:
    return forward_diff(k, m, r)


def deg_falling(ring: ScalarRing, a, n: int):
    """Degenerate falling factorial (a|lambda)_n = a(a-lam)...(a-(n-1)lam).

    a may be a ring scalar or an XPolynomial (e.g. X + r for the basis
    identities); lambda comes from the ring.  (a|lambda)_0 = 1.
    """
    if n < 0:
        raise ValueError("deg_falling index must be nonnegative")
    if isinstance(a, XPolynomial):
        acc = XPolynomial((1,))
    else:
        a = ring.coerce(a)
        acc = ring.one
    for j in range(n):
        acc = acc * (a - j * ring.lam)
    return acc


def s2_deg(ring: ScalarRing, n: int, k: int):
    """Degenerate Stirling number S_{2,lambda}(n,k) by EGF extraction."""
    if not 0 <= k <= n:
        raise ValueError(f"s2_deg needs 0 <= k <= n, got n={n}, k={k}")
    return _s2_deg(ring, n, k)


@lru_cache(maxsize=None)
def _s2_deg(ring: ScalarRing, n: int, k: int):
    order = _order_for(n)
    return _em1_pow(ring, k, order).egf_coeff(n) / factorial(k)


def s2_deg_closed(ring: ScalarRing, n: int, k: int):
    """S_{2,lambda}(n,k) by the alternating sum (1/k!) sum_l C(k,l)(-1)^(k-l)(l|lam)_n.

    Shares no code with the EGF route; used as its independent twin.
    """
    if not 0 <= k <= n:
        raise ValueError(f"s2_deg_closed needs 0 <= k <= n, got n={n}, k={k}")
    return _s2_deg_closed(ring, n, k)


@lru_cache(maxsize=None)
def _s2_deg_closed(ring: ScalarRing, n: int, k: int):
    acc = ring.zero
    sign = (-1) ** k
    for l in range(k + 1):
        acc = acc + (sign * comb(k, l)) * deg_falling(ring, l, n)
        sign = -sign
    return acc / factorial(k)


class ExtMethod(enum.Enum):
    SERIES = "series"
    THM1 = "thm1"
    EQ17 = "eq17"
    THM4 = "thm4"
    BINOM = "binom-closed-form"


@dataclass(frozen=True)
class DegStirlingValue:
    value: object
    n: int
    k: int
    r: int
    method: ExtMethod


def s2_ext(ring: ScalarRing, n: int, k: int, r: int,
           method: ExtMethod = ExtMethod.SERIES) -> DegStirlingValue:
    """Extended degenerate Stirling number S_{2,r}(n+r, k+r | lambda).

    Methods:
      series            EGF coefficient of (1/k!)(1+lam t)^(r/lam)((1+lam t)^(1/lam)-1)^k
      thm1              sum_{l=k..n} sum_{m=0..n-l} C(n,l) r^m lam^(n-m-l) S_1(n-l,m) S_{2,lam}(l,k)
      eq17              sum_{m=0..n-k} C(m+k,m) C(r,m) m! S_{2,lam}(n,m+k)
      thm4              (1/k!) sum_{m=0..n} lam^(n-m) S_1(n,m) Delta^k r^m
      binom-closed-form (1/k!) sum_{l=0..k} C(k,l)(-1)^(k-l) (l+r|lam)_n

    Each route evaluates its own formula honestly, so the n < k vanishing
    is computed rather than special-cased.
    """
    if n < 0 or k < 0 or r < 0:
        raise ValueError("s2_ext arguments must be nonnegative")
    if not isinstance(method, ExtMethod):
        try:
            method = ExtMethod(method)
        except ValueError:
            valid = ", ".join(m.value for m in ExtMethod)
            raise ValueError(f"unknown method {method!r}; valid: {valid}") from None
    return DegStirlingValue(_ext_value(ring, n, k, r, method), n, k, r, method)


@lru_cache(maxsize=None)
def _ext_series(ring: ScalarRing, k: int, r: int, order: int) -> TruncatedSeries:
    return _binom_series(ring, r, order) * _em1_pow(ring, k, order)


@lru_cache(maxsize=None)
def _ext_value(ring: ScalarRing, n: int, k: int, r: int, method: ExtMethod):
    if method is ExtMethod.SERIES:
        series = _ext_series(ring, k, r, _order_for(n))
        return series.egf_coeff(n) / factorial(k)
    if method is ExtMethod.THM1:
        acc = ring.zero
        for l in range(k, n + 1):
            s2l = _s2_deg(ring, l, k)
            if not s2l:
                continue
            for m in range(n - l + 1):
                w = comb(n, l) * r ** m * s1(n - l, m)
                if w:
                    acc = acc + w * (_lam_pow(ring, n - m - l) * s2l)
        return acc
    if method is ExtMethod.EQ17:
        acc = ring.zero
        for m in range(n - k + 1):
            w = comb(m + k, m) * comb(r, m) * factorial(m)
            if w:
                acc = acc + w * _s2_deg(ring, n, m + k)
        return acc
    if method is ExtMethod.THM4:
        acc = ring.zero
        for m in range(n + 1):
            w = s1(n, m)
            if not w:
                continue
            d = _fd(k, m, r)
            if d:
                acc = acc + (w * d) * _lam_pow(ring, n - m)
        return acc / factorial(k)
    acc = ring.zero
    sign = (-1) ** k
    for l in range(k + 1):
        acc = acc + (sign * comb(k, l)) * deg_falling(ring, l + r, n)
        sign = -sign
    return acc / factorial(k)


@dataclass(frozen=True)
class DegBellPolynomial:
    poly: XPolynomial
    n: int
    r: int

    def __call__(self, x):
        return self.poly(x)


@lru_cache(maxsize=None)
def bell_deg_poly(ring: ScalarRing, n: int) -> DegBellPolynomial:
    """Degenerate Bell polynomial Bel_{n,lambda}(x) = sum_k x^k S_{2,lambda}(n,k)."""
    if n < 0:
        raise ValueError("bell_deg_poly index must be nonnegative")
    return DegBellPolynomial(
        XPolynomial(_s2_deg(ring, n, k) for k in range(n + 1)), n, 0
    )


@lru_cache(maxsize=None)
def bell_ext_poly(ring: ScalarRing, n: int, r: int) -> DegBellPolynomial:
    """Extended degenerate Bell polynomial Bel^{(r)}_{n,lambda}(x).

    Coefficient of x^k is S_{2,r}(n+r,k+r|lambda) computed by the series
    route; r = 0 coincides with bell_deg_poly.
    """
    if n < 0 or r < 0:
        raise ValueError("bell_ext_poly arguments must be nonnegative")
    coeffs = [_ext_value(ring, n, k, r, ExtMethod.SERIES) for k in range(n + 1)]
    return DegBellPolynomial(XPolynomial(coeffs), n, r)


def bell_series_eval(ring: ScalarRing, n: int, r: int, a, order: int = None) -> Fraction:
    """EGF coefficient n of (1+lam t)^(r/lam) exp(a((1+lam t)^(1/lam)-1)).

    Direct series-side evaluation at a fixed rational x = a.  The polynomial
    route never calls exp-of-x, so agreement with bell_ext_poly(n,r) at x=a
    is a genuine cross-check.  Fixed-lambda rings only.
    """
    if ring.symbolic:
        raise ValueError("bell_series_eval needs a fixed rational lambda")
    if n < 0 or r < 0:
        raise ValueError("bell_series_eval indices must be nonnegative")
    if order is None:
        order = n
    if order < n:
        raise ValueError(f"series order {order} too small for coefficient {n}")
    a = Fraction(a)
    em1 = _deg_exp_series(ring, order) - 1
    series = _binom_series(ring, r, order) * (a * em1).exp()
    return series.egf_coeff(n)


def _numeric_args(ring: ScalarRing, a, tol):
    if ring.symbolic:
        raise ValueError("Dobinski evaluation needs a fixed rational lambda")
    a = Fraction(a)
    if a <= 0:
        raise ValueError("Dobinski evaluation needs a > 0")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("Dobinski tolerance must be positive")
    return a, tol


def _truncation_limit(n: int, a: Fraction, tol: Fraction, c: Fraction, w: Fraction) -> int:
    """Smallest usable truncation index K for a Dobinski-type series.

    The summand at index k is bounded by w * a^k/k! * (k+c)^n.  For
    k >= max(1, n, 6a) consecutive bounds shrink by at least
    a/(k+1) * e^(n/(k+c)) <= e/6 < 1/2, so the whole tail is at most twice
    the bound at K; K is pushed until that is below tol/4, leaving room for
    the final floating-point rounding.
    """
    k = max(1, n, ceil(6 * a))
    term = a ** k / factorial(k)
    quarter = tol / 4
    while 2 * w * term * (k + c) ** n >= quarter:
        term = term * a / (k + 1)
        k += 1
    return k


def _finish(a: Fraction, total: Fraction) -> float:
    # exact partial sum -> one high-precision combine -> double
    with mpmath.workdps(40):
        av = mpmath.mpf(a.numerator) / a.denominator
        tv = mpmath.mpf(total.numerator) / total.denominator
        return float(mpmath.e ** (-av) * tv)


def dobinski_numeric(ring: ScalarRing, n: int, r: int, a, tol=Fraction(1, 10 ** 9)) -> float:
    """Truncated Dobinski-type value of Bel^{(r)}_{n,lambda}(a).

    Evaluates e^(-a) sum_{m=0..n} lam^(n-m) S_1(n,m) sum_{k>=0} a^k (k+r)^m / k!
    with the inner series truncated under the bound documented in
    _truncation_limit; the result is within tol of the exact value.  The
    partial sum is exact rational arithmetic; floating point appears only in
    the final e^(-a) combine at 40 significant digits.
    """
    if n < 0 or r < 0:
        raise ValueError("dobinski_numeric indices must be nonnegative")
    a, tol = _numeric_args(ring, a, tol)
    weights = [_lam_pow(ring, n - m) * s1(n, m) for m in range(n + 1)]
    w_sum = sum(abs(w) for w in weights)
    limit = _truncation_limit(n, a, tol, Fraction(r), w_sum)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(limit):
        y = Fraction(k + r)
        acc = Fraction(0)
        for w in reversed(weights):
            acc = acc * y + w
        total += term * acc
        term = term * a / (k + 1)
    return _finish(a, total)


def dobinski_direct(ring: ScalarRing, n: int, a, tol=Fraction(1, 10 ** 9)) -> float:
    """Truncated direct Dobinski value e^(-a) sum_{k>=0} (k|lambda)_n a^k / k!.

    The r = 0 companion of dobinski_numeric computed without the S_1
    weights: each summand uses the product form of (k|lambda)_n, so the two
    evaluators share no intermediate quantities.
    """
    if n < 0:
        raise ValueError("dobinski_direct index must be nonnegative")
    a, tol = _numeric_args(ring, a, tol)
    shift = (n - 1) * abs(ring.lam) if n > 1 else Fraction(0)
    limit = _truncation_limit(n, a, tol, shift, Fraction(1))
    total = Fraction(0)
    term = Fraction(1)
    for k in range(limit):
        total += term * deg_falling(ring, k, n)
        term = term * a / (k + 1)
    return _finish(a, total)

"""Classical combinatorial numbers and their brute-force oracles.

Stirling numbers of both kinds come from the standard triangle recurrences
with row-by-row caching.  r-Stirling numbers of the second kind are computed
by the binomial closed form over ordinary Stirling numbers.  Independent
ground truth is provided by explicit enumeration of set partitions, which is
deliberately free of any recurrence shared with the fast paths.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .scalars import NEG_INF, scalar_to_jsonable


class StirlingKind(enum.Enum):
    FIRST_SIGNED = "first-signed"
    SECOND = "second"


class StirlingTriangle:
    """Triangular table of Stirling numbers, grown row by row on demand.

    Rows are append-only; concurrent readers are safe once a row exists.
    First-kind entries are signed: the sign of (n, k) is (-1)^(n-k).
    """

    def __init__(self, kind: StirlingKind):
        self.kind = kind
        self._rows = [(1,)]

    def ensure(self, n_max: int) -> None:
        while len(self._rows) <= n_max:
            n = len(self._rows)
            prev = self._rows[-1]
            row = [0] * (n + 1)
            for k in range(1, n + 1):
                if self.kind is StirlingKind.SECOND:
                    row[k] = k * (prev[k] if k < n else 0) + prev[k - 1]
                else:
                    row[k] = prev[k - 1] - (n - 1) * (prev[k] if k < n else 0)
            self._rows.append(tuple(row))

    def row(self, n: int) -> tuple:
        self.ensure(n)
        return self._rows[n]

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            raise ValueError(f"Stirling index out of range: n={n}, k={k}")
        return self.row(n)[k]


_S1 = StirlingTriangle(StirlingKind.FIRST_SIGNED)
_S2 = StirlingTriangle(StirlingKind.SECOND)


def s1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind: (x)_n = sum_k s1(n,k) x^k."""
    return _S1.value(n, k)


def s2(n: int, k: int) -> int:
    """Stirling number of the second kind: partitions of n into k blocks."""
    return _S2.value(n, k)


def r_s2(n: int, k: int, r: int) -> int:
    """r-Stirling number of the second kind, shifted indexing.

    Counts partitions of an (n+r)-set into k+r blocks with the first r
    elements in distinct blocks, via sum_{l=k..n} C(n,l) r^(n-l) s2(l,k).
    Zero for n < k.
    """
    if n < 0 or k < 0 or r < 0:
        raise ValueError("r_s2 arguments must be nonnegative")
    return sum(comb(n, l) * r ** (n - l) * s2(l, k) for l in range(k, n + 1))


class XPolynomial:
    """Polynomial in the Bell variable x; coefficients are ring scalars.

    Coefficients may be rationals or LambdaPolys (symbolic mode); trailing
    zeros are stripped.  Immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=()):
        coeffs = [Fraction(c) if isinstance(c, int) else c for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def _trusted(cls, coeffs: tuple) -> "XPolynomial":
        p = object.__new__(cls)
        p._coeffs = coeffs
        return p

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def coefficient(self, k: int):
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self._coeffs)

    def __call__(self, value):
        """Evaluate at x = value (Horner); value may be any ring scalar."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = XPolynomial((other,))
        if not isinstance(other, XPolynomial):
            return NotImplemented
        if len(self._coeffs) != len(other._coeffs):
            return False
        return all(a == b for a, b in zip(self._coeffs, other._coeffs))

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return XPolynomial._trusted(tuple(-c for c in self._coeffs))

    def __add__(self, other):
        if not isinstance(other, XPolynomial):
            other = XPolynomial((other,))
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and not out[-1]:
            out.pop()
        return XPolynomial._trusted(tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, XPolynomial):
            other = XPolynomial((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, XPolynomial):
            return XPolynomial(other * c for c in self._coeffs)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return XPolynomial._trusted(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return XPolynomial(out)

    def __rmul__(self, other):
        return XPolynomial(other * c for c in self._coeffs)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("XPolynomial exponent must be a nonnegative integer")
        result = XPolynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def to_jsonable(self) -> list:
        return [scalar_to_jsonable(c) for c in self._coeffs]

    def __repr__(self):
        return f"XPolynomial({self.to_jsonable()})"


#: The Bell variable x itself.
X = XPolynomial((0, 1))


@lru_cache(maxsize=None)
def bell_poly(n: int) -> XPolynomial:
    """Classical Bell polynomial sum_k s2(n,k) x^k; value at 1 = Bell number."""
    if n < 0:
        raise ValueError("bell_poly index must be nonnegative")
    return XPolynomial(_S2.row(n))


@lru_cache(maxsize=None)
def falling_factorial_poly(n: int) -> XPolynomial:
    """Expanded falling factorial x(x-1)...(x-n+1); x-coefficients are s1."""
    if n < 0:
        raise ValueError("falling factorial index must be nonnegative")
    acc = XPolynomial((1,))
    for j in range(n):
        acc = acc * (X - j)
    return acc


def forward_diff(k: int, m: int, r) -> Fraction:
    """k-th forward difference of x^m evaluated at x = r.

    Returns sum_{l=0..k} C(k,l) (-1)^(k-l) (l+r)^m; for r = 0 this equals
    k! times s2(m, k).
    """
    if k < 0 or m < 0:
        raise ValueError("forward_diff orders must be nonnegative")
    r = Fraction(r)
    acc = Fraction(0)
    sign = (-1) ** k
    for l in range(k + 1):
        acc += sign * comb(k, l) * (l + r) ** m
        sign = -sign
    return acc


# Explicit enumeration bounds for the partition oracles.
ORACLE_MAX_R = 3
ORACLE_MAX_ELEMENTS = 11


def restricted_partitions(m: int, r: int):
    """Yield every set partition of {1..m} with 1..r in distinct blocks.

    Blocks are tuples in order of their least element.  Pure enumeration:
    element i either joins an existing block (skipping blocks that already
    hold a distinguished element when i <= r) or opens a new one.
    """
    blocks: list = []

    def extend(i):
        if i > m:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            if i <= r and b[0] <= r:
                continue
            b.append(i)
            yield from extend(i + 1)
            b.pop()
        blocks.append([i])
        yield from extend(i + 1)
        blocks.pop()

    yield from extend(1)


@lru_cache(maxsize=None)
def _partition_block_counts(m: int, r: int) -> tuple:
    """counts[j] = number of restricted partitions of {1..m} into j blocks."""
    counts = [0] * (m + 2)
    blocks: list = []

    def extend(i):
        if i > m:
            counts[len(blocks)] += 1
            return
        for b in blocks:
            if i <= r and b[0] <= r:
                continue
            b.append(i)
            extend(i + 1)
            b.pop()
        blocks.append([i])
        extend(i + 1)
        blocks.pop()

    extend(1)
    return tuple(counts)


def oracle_partitions(n: int, k: int, r: int = 0) -> int:
    """Count partitions of {1..n+r} into k+r blocks, 1..r in distinct blocks.

    Brute-force ground truth for s2 (r = 0) and r_s2; inputs beyond the
    enumeration bound are rejected.
    """
    if n < 0 or k < 0 or r < 0:
        raise ValueError("oracle_partitions arguments must be nonnegative")
    if r > ORACLE_MAX_R or n + r > ORACLE_MAX_ELEMENTS:
        raise ValueError(
            f"enumeration bound exceeded: need r <= {ORACLE_MAX_R} "
            f"and n + r <= {ORACLE_MAX_ELEMENTS}"
        )
    counts = _partition_block_counts(n + r, r)
    total = k + r
    return counts[total] if total < len(counts) else 0

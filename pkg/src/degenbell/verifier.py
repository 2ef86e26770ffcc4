"""Grid-driven verification of the identity catalogue.

Each identity is checked by evaluating its two (or three) sides through
deliberately disjoint code paths at every point of a parameter grid: series
extraction against closed-form sums, polynomial assembly against classical
triangles, exact values against truncated numeric series.  Exact identities
compare scalars or polynomials for literal equality; the two Dobinski-type
identities compare within a tolerance and report residuals.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, perm

from .classical import (
    X,
    XPolynomial,
    bell_poly,
    falling_factorial_poly,
    forward_diff,
    r_s2,
    s1,
    s2,
)
from .degenerate import (
    ExtMethod,
    bell_deg_poly,
    bell_ext_poly,
    bell_series_eval,
    deg_falling,
    dobinski_direct,
    dobinski_numeric,
    s2_deg,
    s2_deg_closed,
    s2_ext,
)
from .scalars import SYMBOLIC, fixed_ring, parse_rational, poly_eval, scalar_to_jsonable


class IdentityId(enum.Enum):
    THM1 = "THM1"
    THM2 = "THM2"
    THM3 = "THM3"
    THM4 = "THM4"
    THM5 = "THM5"
    THM6 = "THM6"
    EQ10 = "EQ10"
    EQ11 = "EQ11"
    EQ12 = "EQ12"
    EQ13 = "EQ13"
    EQ17 = "EQ17"
    EQ24 = "EQ24"
    EQ27 = "EQ27"
    LIMIT_LAMBDA0 = "LIMIT_LAMBDA0"
    LIMIT_LAMBDA1 = "LIMIT_LAMBDA1"
    REMARK_BELLNUM = "REMARK_BELLNUM"


#: Identities checked numerically (truncated series, tolerance-based).
NUMERIC_IDS = frozenset({IdentityId.EQ10, IdentityId.EQ27})

# Hard bound on caller-supplied grids; verification is a desk-scale tool.
GRID_CAP = 64

# Numeric identities stay where double precision can honor the tolerance.
_NUMERIC_N_CAP = 8
_NUMERIC_R_CAP = 2


@dataclass(frozen=True)
class GridSpec:
    """Parameter grid for identity checks.

    lambdas holds rational literals plus the "symbolic" keyword; k_max only
    matters for identities that range k beyond n (vanishing checks) and
    defaults per identity when None.
    """

    n_max: int = 10
    r_max: int = 3
    k_max: int = None
    lambdas: tuple = ("0", "1", "1/2", "-1/3", "symbolic")
    xs: tuple = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(-1))
    tol: float = 1e-9

    def rings(self) -> tuple:
        out = []
        for label in self.lambdas:
            if label == "symbolic":
                out.append(SYMBOLIC)
            else:
                out.append(fixed_ring(parse_rational(str(label))))
        return tuple(out)

    def fixed_rings(self) -> tuple:
        return tuple(r for r in self.rings() if not r.symbolic)

    def positive_xs(self) -> tuple:
        return tuple(Fraction(x) for x in self.xs if Fraction(x) > 0)


DEFAULT_GRID = GridSpec()


def _validate_grid(grid: GridSpec):
    if not 0 <= grid.n_max <= GRID_CAP:
        raise ValueError(f"n_max must lie in 0..{GRID_CAP}, got {grid.n_max}")
    if not 0 <= grid.r_max <= 16:
        raise ValueError(f"r_max must lie in 0..16, got {grid.r_max}")
    if grid.k_max is not None and not 0 <= grid.k_max <= GRID_CAP:
        raise ValueError(f"k_max must lie in 0..{GRID_CAP}, got {grid.k_max}")
    if float(grid.tol) <= 0:
        raise ValueError("tol must be positive")
    grid.rings()


@dataclass(frozen=True)
class VerificationReport:
    identity: IdentityId
    grid: dict
    checked: int
    failures: tuple
    elapsed_ms: float

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_jsonable(self, include_elapsed: bool = True) -> dict:
        out = {
            "identity": self.identity.value,
            "grid": self.grid,
            "checked": self.checked,
            "failures": list(self.failures),
        }
        if include_elapsed:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        out["status"] = self.status
        return out


def _fmt(v):
    if isinstance(v, XPolynomial):
        return v.to_jsonable()
    if isinstance(v, float):
        return repr(v)
    return scalar_to_jsonable(v)


class _Collector:
    """Accumulates comparisons in deterministic grid order."""

    def __init__(self, tol=None):
        self.checked = 0
        self.failures = []
        self.tol = Fraction(tol) if tol is not None else None

    def check(self, params: dict, left, right):
        self.checked += 1
        if left != right:
            self.failures.append(
                {"params": params, "left": _fmt(left), "right": _fmt(right)}
            )

    def close(self, params: dict, left: float, right: Fraction):
        self.checked += 1
        residual = abs(Fraction(left) - right)
        if residual > self.tol:
            self.failures.append(
                {
                    "params": params,
                    "left": repr(left),
                    "right": _fmt(right),
                    "residual": float(residual),
                }
            )


def _lambda_labels(rings) -> list:
    return [ring.label() for ring in rings]


def _check_thm1(grid: GridSpec):
    rings = grid.rings()
    desc = {
        "n_max": grid.n_max,
        "k": "0..n",
        "r_max": grid.r_max,
        "lambdas": _lambda_labels(rings),
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            for k in range(n + 1):
                for r in range(grid.r_max + 1):
                    col.check(
                        {"lambda": lam, "n": n, "k": k, "r": r},
                        s2_ext(ring, n, k, r, ExtMethod.SERIES).value,
                        s2_ext(ring, n, k, r, ExtMethod.THM1).value,
                    )
    return desc, col


def _check_thm2(grid: GridSpec):
    rings = grid.rings()
    desc = {
        "n_max": grid.n_max,
        "r_max": grid.r_max,
        "lambdas": _lambda_labels(rings),
        "forms": ["stirling-basis", "power-basis"],
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            for r in range(grid.r_max + 1):
                lhs = deg_falling(ring, X + r, n)
                stirling = XPolynomial(())
                for k in range(n + 1):
                    coeff = s2_ext(ring, n, k, r, ExtMethod.SERIES).value
                    stirling = stirling + coeff * falling_factorial_poly(k)
                power = XPolynomial(())
                for k in range(n + 1):
                    w = s1(n, k)
                    if w:
                        power = power + (w * ring.lam ** (n - k)) * (X + r) ** k
                base = {"lambda": lam, "n": n, "r": r}
                col.check({**base, "form": "stirling-basis"}, lhs, stirling)
                col.check({**base, "form": "power-basis"}, lhs, power)
    return desc, col


def _check_thm3(grid: GridSpec):
    rings = grid.rings()
    desc = {
        "n_max": grid.n_max,
        "r_max": grid.r_max,
        "lambdas": _lambda_labels(rings),
        "x_set": [str(Fraction(x)) for x in grid.xs],
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            for r in range(grid.r_max + 1):
                left = bell_ext_poly(ring, n, r).poly
                coeffs = []
                for k in range(n + 1):
                    acc = ring.zero
                    for m in range(k, n + 1):
                        s2m = s2_deg(ring, m, k)
                        if not s2m:
                            continue
                        for l in range(n - m + 1):
                            w = comb(n, m) * r ** l * s1(n - m, l)
                            if w:
                                acc = acc + w * (ring.lam ** (n - m - l) * s2m)
                    coeffs.append(acc)
                base = {"lambda": lam, "n": n, "r": r}
                col.check({**base, "form": "double-sum"}, left, XPolynomial(coeffs))
                if not ring.symbolic:
                    for a in grid.xs:
                        a = Fraction(a)
                        col.check(
                            {**base, "form": "series-eval", "x": str(a)},
                            bell_series_eval(ring, n, r, a),
                            left(a),
                        )
    return desc, col


def _check_thm4(grid: GridSpec):
    rings = grid.rings()
    k_max = grid.k_max if grid.k_max is not None else grid.n_max + 2
    desc = {
        "n_max": grid.n_max,
        "k_max": k_max,
        "r_max": grid.r_max,
        "lambdas": _lambda_labels(rings),
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            for k in range(k_max + 1):
                for r in range(grid.r_max + 1):
                    col.check(
                        {"lambda": lam, "n": n, "k": k, "r": r},
                        s2_ext(ring, n, k, r, ExtMethod.THM4).value,
                        s2_ext(ring, n, k, r, ExtMethod.SERIES).value,
                    )
    return desc, col


def _check_thm5(grid: GridSpec):
    rings = grid.rings()
    desc = {
        "n_max": grid.n_max,
        "r_max": grid.r_max,
        "lambdas": _lambda_labels(rings),
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            for r in range(grid.r_max + 1):
                left = bell_ext_poly(ring, n, r).poly
                right = XPolynomial(())
                for k in range(n + 1):
                    base = bell_deg_poly(ring, n - k).poly
                    for m in range(k + 1):
                        w = comb(n, k) * r ** m * s1(k, m)
                        if w:
                            right = right + (w * ring.lam ** (k - m)) * base
                col.check({"lambda": lam, "n": n, "r": r}, left, right)
    return desc, col


def _check_thm6(grid: GridSpec):
    rings = grid.rings()
    desc = {
        "n_max": grid.n_max,
        "indices": "m,k >= 0 with m+k <= n",
        "r_max": grid.r_max,
        "lambdas": _lambda_labels(rings),
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            for m in range(n + 1):
                for k in range(n - m + 1):
                    for r in range(grid.r_max + 1):
                        left = comb(m + k, m) * s2_ext(
                            ring, n, m + k, r, ExtMethod.SERIES
                        ).value
                        right = ring.zero
                        for l in range(m, n - k + 1):
                            right = right + comb(n, l) * (
                                s2_ext(ring, l, m, r, ExtMethod.EQ17).value
                                * s2_deg(ring, n - l, k)
                            )
                        col.check(
                            {"lambda": lam, "n": n, "m": m, "k": k, "r": r},
                            left,
                            right,
                        )
    return desc, col


def _check_eq10(grid: GridSpec):
    rings = grid.fixed_rings()
    n_max = min(grid.n_max, _NUMERIC_N_CAP)
    xs = grid.positive_xs()
    desc = {
        "n_max": n_max,
        "lambdas": _lambda_labels(rings),
        "x_set": [str(x) for x in xs],
        "tol": float(grid.tol),
    }
    col = _Collector(tol=grid.tol)
    for ring in rings:
        lam = ring.label()
        for n in range(n_max + 1):
            exact = bell_deg_poly(ring, n).poly
            for a in xs:
                col.close(
                    {"lambda": lam, "n": n, "x": str(a)},
                    dobinski_direct(ring, n, a, grid.tol),
                    exact(a),
                )
    return desc, col


def _check_eq11(grid: GridSpec):
    rings = grid.rings()
    desc = {
        "n_min": 1,
        "n_max": grid.n_max,
        "lambdas": _lambda_labels(rings),
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(1, grid.n_max + 1):
            acc = XPolynomial(())
            for k in range(1, n + 1):
                w1 = s1(n, k)
                if not w1:
                    continue
                lamp = ring.lam ** (n - k)
                for j in range(1, k + 1):
                    w = comb(k - 1, j - 1) * w1
                    acc = acc + (w * lamp) * bell_poly(j - 1)
            col.check(
                {"lambda": lam, "n": n},
                bell_deg_poly(ring, n).poly,
                X * acc,
            )
    return desc, col


def _check_eq12(grid: GridSpec):
    rings = grid.rings()
    desc = {"n_max": grid.n_max, "lambdas": _lambda_labels(rings)}
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            coeffs = [ring.zero] * (n + 1)
            for k in range(n + 1):
                w1 = s1(n, k)
                if not w1:
                    continue
                lamp = ring.lam ** (n - k)
                for m in range(k + 1):
                    w = s2(k, m) * w1
                    if w:
                        coeffs[m] = coeffs[m] + w * lamp
            col.check(
                {"lambda": lam, "n": n},
                bell_deg_poly(ring, n).poly,
                XPolynomial(coeffs),
            )
    return desc, col


def _check_eq13(grid: GridSpec):
    rings = grid.rings()
    desc = {"n_max": grid.n_max, "lambdas": _lambda_labels(rings)}
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            col.check(
                {"lambda": lam, "n": n},
                bell_deg_poly(ring, n).poly,
                XPolynomial(s2_deg_closed(ring, n, k) for k in range(n + 1)),
            )
    return desc, col


def _check_eq17(grid: GridSpec):
    rings = grid.rings()
    desc = {
        "n_max": grid.n_max,
        "k": "0..n",
        "r_max": grid.r_max,
        "lambdas": _lambda_labels(rings),
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            for k in range(n + 1):
                for r in range(grid.r_max + 1):
                    col.check(
                        {"lambda": lam, "n": n, "k": k, "r": r},
                        s2_ext(ring, n, k, r, ExtMethod.SERIES).value,
                        s2_ext(ring, n, k, r, ExtMethod.EQ17).value,
                    )
    return desc, col


def _check_eq24(grid: GridSpec):
    rings = grid.rings()
    desc = {
        "n_max": grid.n_max,
        "r_max": grid.r_max,
        "lambdas": _lambda_labels(rings),
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            for r in range(grid.r_max + 1):
                coeffs = []
                for k in range(n + 1):
                    acc = ring.zero
                    for m in range(n + 1):
                        w = s1(n, m)
                        if not w:
                            continue
                        d = forward_diff(k, m, r)
                        if d:
                            acc = acc + (w * d) * ring.lam ** (n - m)
                    coeffs.append(acc / factorial(k))
                col.check(
                    {"lambda": lam, "n": n, "r": r},
                    bell_ext_poly(ring, n, r).poly,
                    XPolynomial(coeffs),
                )
    return desc, col


def _check_eq27(grid: GridSpec):
    rings = grid.fixed_rings()
    n_max = min(grid.n_max, _NUMERIC_N_CAP)
    r_max = min(grid.r_max, _NUMERIC_R_CAP)
    xs = grid.positive_xs()
    desc = {
        "n_max": n_max,
        "r_max": r_max,
        "lambdas": _lambda_labels(rings),
        "x_set": [str(x) for x in xs],
        "tol": float(grid.tol),
    }
    col = _Collector(tol=grid.tol)
    for ring in rings:
        lam = ring.label()
        for n in range(n_max + 1):
            for r in range(r_max + 1):
                exact = bell_ext_poly(ring, n, r).poly
                for a in xs:
                    col.close(
                        {"lambda": lam, "n": n, "r": r, "x": str(a)},
                        dobinski_numeric(ring, n, r, a, grid.tol),
                        exact(a),
                    )
    return desc, col


def _check_limit_lambda0(grid: GridSpec):
    ring0 = fixed_ring(0)
    desc = {
        "n_max": grid.n_max,
        "k": "0..n",
        "r_max": grid.r_max,
        "lambdas": ["0", "symbolic"],
    }
    col = _Collector()
    for n in range(grid.n_max + 1):
        for k in range(n + 1):
            for r in range(grid.r_max + 1):
                target = Fraction(r_s2(n, k, r))
                base = {"n": n, "k": k, "r": r}
                col.check(
                    {**base, "mode": "fixed"},
                    s2_ext(ring0, n, k, r, ExtMethod.SERIES).value,
                    target,
                )
                col.check(
                    {**base, "mode": "symbolic-eval"},
                    poly_eval(s2_ext(SYMBOLIC, n, k, r, ExtMethod.SERIES).value, 0),
                    target,
                )
    return desc, col


def _check_limit_lambda1(grid: GridSpec):
    ring1 = fixed_ring(1)
    desc = {
        "n_max": grid.n_max,
        "k": "0..n",
        "r_max": grid.r_max,
        "lambdas": ["1", "symbolic"],
    }
    col = _Collector()
    for n in range(grid.n_max + 1):
        for k in range(n + 1):
            for r in range(grid.r_max + 1):
                target = Fraction(comb(n, k) * perm(r, n - k))
                base = {"n": n, "k": k, "r": r}
                col.check(
                    {**base, "mode": "fixed"},
                    s2_ext(ring1, n, k, r, ExtMethod.SERIES).value,
                    target,
                )
                col.check(
                    {**base, "mode": "symbolic-eval"},
                    poly_eval(s2_ext(SYMBOLIC, n, k, r, ExtMethod.SERIES).value, 1),
                    target,
                )
    for n in range(grid.n_max + 1):
        col.check(
            {"n": n, "mode": "falling-factorial"},
            deg_falling(ring1, X, n),
            falling_factorial_poly(n),
        )
    return desc, col


def _check_remark_bellnum(grid: GridSpec):
    rings = grid.rings()
    desc = {
        "n_max": grid.n_max,
        "r_max": grid.r_max,
        "lambdas": _lambda_labels(rings),
    }
    col = _Collector()
    for ring in rings:
        lam = ring.label()
        for n in range(grid.n_max + 1):
            for r in range(grid.r_max + 1):
                left = bell_ext_poly(ring, n, r).poly(1)
                single = ring.zero
                for k in range(n + 1):
                    single = single + s2_ext(ring, n, k, r, ExtMethod.EQ17).value
                triple = ring.zero
                for k in range(n + 1):
                    for m in range(k, n + 1):
                        s2m = s2_deg(ring, m, k)
                        if not s2m:
                            continue
                        for l in range(n - m + 1):
                            w = comb(n, m) * r ** l * s1(n - m, l)
                            if w:
                                triple = triple + w * (
                                    ring.lam ** (n - m - l) * s2m
                                )
                base = {"lambda": lam, "n": n, "r": r}
                col.check({**base, "form": "single-sum"}, left, single)
                col.check({**base, "form": "triple-sum"}, left, triple)
    return desc, col


_CHECKERS = {
    IdentityId.THM1: _check_thm1,
    IdentityId.THM2: _check_thm2,
    IdentityId.THM3: _check_thm3,
    IdentityId.THM4: _check_thm4,
    IdentityId.THM5: _check_thm5,
    IdentityId.THM6: _check_thm6,
    IdentityId.EQ10: _check_eq10,
    IdentityId.EQ11: _check_eq11,
    IdentityId.EQ12: _check_eq12,
    IdentityId.EQ13: _check_eq13,
    IdentityId.EQ17: _check_eq17,
    IdentityId.EQ24: _check_eq24,
    IdentityId.EQ27: _check_eq27,
    IdentityId.LIMIT_LAMBDA0: _check_limit_lambda0,
    IdentityId.LIMIT_LAMBDA1: _check_limit_lambda1,
    IdentityId.REMARK_BELLNUM: _check_remark_bellnum,
}

_CATALOG = {
    IdentityId.THM1: (
        "S_{2,r}(n+r,k+r|lam) = sum_{l=k..n} sum_{m=0..n-l} C(n,l) r^m "
        "lam^(n-m-l) S_1(n-l,m) S_{2,lam}(l,k)",
        "Theorem 1",
    ),
    IdentityId.THM2: (
        "(x+r|lam)_n = sum_k S_{2,r}(n+r,k+r|lam) (x)_k "
        "= sum_k lam^(n-k) S_1(n,k) (x+r)^k",
        "Theorem 2",
    ),
    IdentityId.THM3: (
        "Bel^(r)_{n,lam}(x) = sum_k x^k S_{2,r}(n+r,k+r|lam), equal to the "
        "double-sum coefficient form over S_1 and S_{2,lam}",
        "Theorem 3",
    ),
    IdentityId.THM4: (
        "(1/k!) sum_m lam^(n-m) S_1(n,m) Delta^k r^m = S_{2,r}(n+r,k+r|lam) "
        "for n >= k and 0 for n < k",
        "Theorem 4",
    ),
    IdentityId.THM5: (
        "Bel^(r)_{n,lam}(x) = sum_{k,m<=k} C(n,k) Bel_{n-k,lam}(x) "
        "lam^(k-m) r^m S_1(k,m)",
        "Theorem 5",
    ),
    IdentityId.THM6: (
        "C(m+k,m) S_{2,r}(n+r,m+k+r|lam) = sum_{l=m..n-k} C(n,l) "
        "S_{2,r}(l+r,m+r|lam) S_{2,lam}(n-l,k)",
        "Theorem 6",
    ),
    IdentityId.EQ10: (
        "Bel_{n,lam}(x) = e^(-x) sum_{k>=0} (k|lam)_n x^k / k! "
        "(numeric, tolerance-based)",
        "Eq. (10)",
    ),
    IdentityId.EQ11: (
        "Bel_{n,lam}(x) = x sum_{k=1..n} sum_{j=1..k} C(k-1,j-1) S_1(n,k) "
        "lam^(n-k) Bel_{j-1}(x), checked for n >= 1",
        "Eq. (11)",
    ),
    IdentityId.EQ12: (
        "Bel_{n,lam}(x) = sum_{k} sum_{m<=k} S_2(k,m) S_1(n,k) lam^(n-k) x^m",
        "Eq. (12)",
    ),
    IdentityId.EQ13: (
        "Bel_{n,lam}(x) = sum_k x^k S_{2,lam}(n,k)",
        "Eq. (13)",
    ),
    IdentityId.EQ17: (
        "S_{2,r}(n+r,k+r|lam) = sum_m C(m+k,m) C(r,m) m! S_{2,lam}(n,m+k)",
        "Eq. (17)",
    ),
    IdentityId.EQ24: (
        "Bel^(r)_{n,lam}(x) = sum_m lam^(n-m) S_1(n,m) sum_k x^k "
        "Delta^k r^m / k!",
        "Eq. (24)",
    ),
    IdentityId.EQ27: (
        "Bel^(r)_{n,lam}(x) = e^(-x) sum_m lam^(n-m) S_1(n,m) "
        "sum_{k>=0} x^k (k+r)^m / k! (numeric, tolerance-based)",
        "Eq. (27)",
    ),
    IdentityId.LIMIT_LAMBDA0: (
        "S_{2,r}(n+r,k+r|lam) at lam = 0 equals the classical r-Stirling "
        "number S_{2,r}(n+r,k+r)",
        "note after Theorem 1",
    ),
    IdentityId.LIMIT_LAMBDA1: (
        "at lam = 1: S_{2,r}(n+r,k+r|1) = C(n,k) (r)_(n-k) and "
        "(x|1)_n = (x)_n",
        "note after Eq. (7)",
    ),
    IdentityId.REMARK_BELLNUM: (
        "Bel^(r)_{n,lam} = sum_k S_{2,r}(n+r,k+r|lam) (the extended "
        "degenerate Bell numbers, x = 1)",
        "Remark after Theorem 3",
    ),
}


def _coerce_id(identity) -> IdentityId:
    if isinstance(identity, IdentityId):
        return identity
    try:
        return IdentityId(str(identity))
    except ValueError:
        valid = ", ".join(i.value for i in IdentityId)
        raise ValueError(f"unknown identity {identity!r}; valid ids: {valid}") from None


def verify_identity(identity, grid: GridSpec = None) -> VerificationReport:
    """Check one identity over the grid and return a structured report."""
    identity = _coerce_id(identity)
    if grid is None:
        grid = DEFAULT_GRID
    _validate_grid(grid)
    start = time.perf_counter()
    desc, col = _CHECKERS[identity](grid)
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(identity, desc, col.checked, tuple(col.failures), elapsed)


def run_suite(ids=None, grid: GridSpec = None) -> list:
    """Run the named identities (all 16 when ids is None), ordered by id.

    A checker that raises is reported as a failing entry rather than
    aborting the remaining identities.
    """
    if ids is None:
        selected = list(IdentityId)
    else:
        wanted = {_coerce_id(i) for i in ids}
        selected = [i for i in IdentityId if i in wanted]
    reports = []
    for identity in selected:
        try:
            reports.append(verify_identity(identity, grid))
        except Exception as exc:  # one broken checker must not abort the suite
            failure = {
                "params": {"error": type(exc).__name__},
                "left": "exception",
                "right": str(exc),
            }
            reports.append(
                VerificationReport(identity, {"error": str(exc)}, 0, (failure,), 0.0)
            )
    return reports


def list_identities() -> list:
    """Catalogue of (id, human-readable statement, source location)."""
    return [(identity, *(_CATALOG[identity])) for identity in IdentityId]

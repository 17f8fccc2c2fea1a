"""Bounds on the largest (n, d, N, r) packing: exact ball-covering and
sphere-packing bounds, the Johnson-style averaging bound, and their
asymptotic rate forms.

Exact bounds use only integer arithmetic.  The lower bound I rounds the
ratio up; the upper bound S rounds down, the direction a packing argument
permits (and the one the reference tables realize: 6435/17 appears as 378,
not 379).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError
from .series import ball_series


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one (n, d, N, r) parameter point.  nu_lower is
    the constructive lattice count when the caller supplies one; johnson is
    present only when its hypothesis d > N(1 - 1/(2n)) holds.
    in_theorem_domain flags N > nr, n >= d, r > e >= 1."""

    n: int
    d: int
    N: int
    r: int
    e: int
    ambient: int
    gilbert_lower: int
    hamming_upper: int
    johnson_upper: int | None
    nu_lower: int | None
    in_theorem_domain: bool


@dataclass(frozen=True)
class AsymptoticPoint:
    r: int
    eta: float
    delta: float
    lower: float
    upper: float


def ball_volume(n: int, e: int) -> int:
    """Number of integer points in the Manhattan ball of radius e in Z^n:
    sum_i 2^i C(n, i) C(e, i)."""
    if n < 1 or e < 0:
        raise ParameterError("need n >= 1, e >= 0")
    return sum((1 << i) * math.comb(n, i) * math.comb(e, i) for i in range(min(n, e) + 1))


def ambient_count(n: int, N: int, r: int) -> int:
    """Number of length-n integer vectors with entries >= r summing to N:
    the stars-and-bars binomial C(N - nr + n - 1, n - 1); zero when N < nr."""
    if n < 1:
        raise ParameterError("need n >= 1")
    if N < n * r:
        return 0
    return math.comb(N - n * r + n - 1, n - 1)


def gilbert_lower(n: int, d: int, N: int, r: int) -> int:
    """Ball-covering lower bound: ceil(ambient / V(n, d-1))."""
    amb = ambient_count(n, N, r)
    return -(-amb // ball_volume(n, d - 1))


def hamming_upper(n: int, d: int, N: int, r: int) -> int:
    """Sphere-packing upper bound: floor(ambient / V(n, e)), e = (d-1)//2."""
    amb = ambient_count(n, N, r)
    return amb // ball_volume(n, (d - 1) // 2)


def johnson_upper(n: int, d: int, N: int) -> int | None:
    """floor(d / (d - N(1 - 1/(2n)))) when d > N(1 - 1/(2n)), else None.
    Evaluated in exact integer arithmetic so the hypothesis test cannot be
    misclassified at the boundary."""
    if n < 1 or d < 1 or N < 1:
        raise ParameterError("need n, d, N >= 1")
    # d > N(2n-1)/(2n)  <=>  2nd > N(2n-1)
    denom = 2 * n * d - N * (2 * n - 1)
    if denom <= 0:
        return None
    return 2 * n * d // denom


def in_theorem_domain(n: int, d: int, N: int, r: int) -> bool:
    e = (d - 1) // 2
    return N > n * r and n >= d and r > e >= 1


def bound_report(n: int, d: int, N: int, r: int, nu_lower: int | None = None) -> BoundReport:
    lower = gilbert_lower(n, d, N, r)
    upper = hamming_upper(n, d, N, r)
    return BoundReport(
        n=n,
        d=d,
        N=N,
        r=r,
        e=(d - 1) // 2,
        ambient=ambient_count(n, N, r),
        gilbert_lower=lower,
        hamming_upper=upper,
        johnson_upper=johnson_upper(n, d, N),
        nu_lower=nu_lower,
        in_theorem_domain=in_theorem_domain(n, d, N, r),
    )


def entropy(q: float) -> float:
    """Binary entropy in bits, with 0 log 0 = 0."""
    if not 0.0 <= q <= 1.0:
        raise ParameterError(f"entropy argument {q} outside [0, 1]")
    if q in (0.0, 1.0):
        return 0.0
    return -q * math.log2(q) - (1.0 - q) * math.log2(1.0 - q)


def lee_exponent(x: float) -> float:
    """Exponential growth rate of large-alphabet Lee/Manhattan balls:
    x log2 x + log2(x + sqrt(x^2+1)) - x log2(sqrt(x^2+1) - 1), extended
    continuously by 0 at x = 0.  Rewritten via sqrt(x^2+1) - 1 =
    x^2 / (sqrt(x^2+1) + 1) so small x stay numerically stable."""
    if x < 0:
        raise ParameterError("lee_exponent needs x >= 0")
    if x == 0:
        return 0.0
    root = math.hypot(x, 1.0)
    return -x * math.log2(x) + math.log2(x + root) + x * math.log2(root + 1.0)


def rate_exponent(x: float, y: float, z: float) -> float:
    """Rate function [1 - y + y/x] H(y / (y + x(1-y))) - (y/x) L(xz/y)."""
    prefactor = 1.0 - y + y / x
    arg = y / (y + x * (1.0 - y))
    return prefactor * entropy(arg) - (y / x) * lee_exponent(x * z / y)


def rate_bound(r: int, eta: float, delta: float) -> AsymptoticPoint:
    """Asymptotic sandwich on the rate exponent at run floor r, run density
    eta, and normalized distance delta: the rate function at delta bounds
    below, at delta/2 above."""
    if r < 1:
        raise ParameterError("need r >= 1")
    if not 0.0 < eta < 1.0:
        raise ParameterError("need 0 < eta < 1")
    if not 0.0 <= delta < 2.0:
        raise ParameterError("need 0 <= delta < 2")
    return AsymptoticPoint(
        r=r,
        eta=eta,
        delta=delta,
        lower=rate_exponent(r, eta, delta),
        upper=rate_exponent(r, eta, delta / 2.0),
    )


def curve_rows(r: int, etas, deltas):
    """Deterministic (eta, delta, rate) rows, eta outer, delta inner."""
    for eta in etas:
        for delta in deltas:
            yield eta, delta, rate_exponent(r, eta, delta)


def ball_volume_series_check(n: int, e: int) -> int:
    """Same ball count via the generating function module (cross route)."""
    return ball_series(n, e).coeff(e)


def int_log2(x: int) -> float:
    """log2 of a positive integer too large for float conversion."""
    if x <= 0:
        raise ParameterError("need a positive integer")
    bits = x.bit_length()
    if bits <= 53:
        return math.log2(x)
    top = x >> (bits - 53)
    return (bits - 53) + math.log2(top)

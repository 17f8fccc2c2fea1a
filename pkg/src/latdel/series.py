"""Exact truncated power series and the point-counting generating functions.

All coefficients are Python ints, so nothing ever overflows: the largest
table entries exceed 10^13 and the binomials in the ambient-space counts
grow without bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegreeError, LatdelError, ParameterError


@dataclass(frozen=True)
class IntSeries:
    """A power series truncated at a fixed degree, with exact integer
    coefficients.  Arithmetic is exact up to the truncation degree;
    multiplication truncates, never rounds."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ParameterError("series needs at least the degree-0 coefficient")

    @classmethod
    def from_terms(cls, terms: dict[int, int], degree: int) -> "IntSeries":
        coeffs = [0] * (degree + 1)
        for deg, c in terms.items():
            if deg < 0:
                raise ParameterError(f"negative degree {deg}")
            if deg <= degree:
                coeffs[deg] += c
        return cls(tuple(coeffs))

    @property
    def truncation_degree(self) -> int:
        return len(self.coefficients) - 1

    def coeff(self, i: int) -> int:
        if i < 0:
            return 0
        if i > self.truncation_degree:
            raise DegreeError(
                f"coefficient {i} beyond truncation degree {self.truncation_degree}"
            )
        return self.coefficients[i]

    def truncate(self, degree: int) -> "IntSeries":
        if degree > self.truncation_degree:
            raise DegreeError("cannot extend a truncated series")
        return IntSeries(self.coefficients[: degree + 1])

    def __add__(self, other: "IntSeries") -> "IntSeries":
        d = min(self.truncation_degree, other.truncation_degree)
        return IntSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))[: d + 1]
        )

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        d = min(self.truncation_degree, other.truncation_degree)
        return IntSeries(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients))[: d + 1]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return IntSeries(tuple(c * other for c in self.coefficients))
        d = min(self.truncation_degree, other.truncation_degree)
        out = [0] * (d + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0 or i > d:
                continue
            for j, b in enumerate(other.coefficients[: d - i + 1]):
                if b:
                    out[i + j] += a * b
        return IntSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntSeries":
        if k < 0:
            raise ParameterError("negative powers not supported; use reciprocal()")
        result = IntSeries.from_terms({0: 1}, self.truncation_degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self) -> "IntSeries":
        """Multiplicative inverse, by the usual linear recurrence.  The
        constant term must be a unit in Z, i.e. +-1."""
        a0 = self.coefficients[0]
        if a0 not in (1, -1):
            raise ParameterError("reciprocal requires constant term +-1")
        d = self.truncation_degree
        inv = [a0] + [0] * d
        for k in range(1, d + 1):
            acc = 0
            for i in range(1, k + 1):
                acc += self.coefficients[i] * inv[k - i] if i < len(self.coefficients) else 0
            inv[k] = -a0 * acc
        return IntSeries(tuple(inv))


@dataclass(frozen=True)
class NuSeries:
    """Point-count series of a lattice: coefficient N counts lattice points
    with every coordinate >= shift and coordinate sum N."""

    lattice_tag: str
    modulus: int
    dimension: int
    shift: int
    series: IntSeries


def geometric_power(m: int, n: int, degree: int) -> IntSeries:
    """1 / (1 - q^m)^n: the coefficient at degree m*i is C(i+n-1, n-1)."""
    if m < 1 or n < 1 or degree < 0:
        raise ParameterError("need m >= 1, n >= 1, degree >= 0")
    coeffs = [0] * (degree + 1)
    for i in range(degree // m + 1):
        coeffs[m * i] = math.comb(i + n - 1, n - 1)
    return IntSeries(tuple(coeffs))


def nu_series(code, r: int, degree: int) -> NuSeries:
    """Series counting points of the mod-m preimage lattice of `code` that
    have all coordinates >= r, graded by coordinate sum.

    Computed as the shifted one-variable weight polynomial of the code times
    1/(1-q^m)^n: each codeword residue class contributes a geometric series
    per coordinate, starting at the first admissible representative >= r.
    """
    if r < 0:
        raise ParameterError("shift r must be >= 0")
    shifted = code.shifted_weight_coeffs(r)
    numerator = IntSeries.from_terms(dict(enumerate(shifted)), degree)
    series = numerator * geometric_power(code.modulus, code.length, degree)
    n = code.length
    for i in range(min(n * r, degree + 1)):
        if series.coefficients[i] != 0:
            raise LatdelError(
                f"internal: nu coefficient {i} below n*r = {n * r} is nonzero"
            )
    if any(c < 0 for c in series.coefficients):
        raise LatdelError("internal: negative nu coefficient")
    return NuSeries(
        lattice_tag=getattr(code, "name", "code"),
        modulus=code.modulus,
        dimension=n,
        shift=r,
        series=series,
    )


def hat_coefficient(nu: NuSeries, r: int, norm: int) -> int:
    """Size at coordinate-sum `norm` of the one-dimension-higher point set
    obtained by appending the coordinate norm - sum(x) to every point x of
    the base lattice.  The appended coordinate must also be >= r, so this is
    the partial sum of the base series through degree norm - r."""
    top = norm - r
    if top < 0:
        return 0
    if nu.series.truncation_degree < top:
        raise DegreeError(
            f"series truncated at {nu.series.truncation_degree}, need {top}"
        )
    return sum(nu.series.coefficients[: top + 1])


def ball_series(n: int, degree: int) -> IntSeries:
    """Cumulative Manhattan ball sizes of Z^n: coefficient e is the number
    of integer points with |x_1| + ... + |x_n| <= e, i.e. the coefficient
    of q^e in (1+q)^n / (1-q)^(n+1)."""
    if n < 1 or degree < 0:
        raise ParameterError("need n >= 1, degree >= 0")
    coeffs = []
    for e in range(degree + 1):
        coeffs.append(sum(math.comb(n, k) * math.comb(e - k + n, n) for k in range(min(n, e) + 1)))
    return IntSeries(tuple(coeffs))

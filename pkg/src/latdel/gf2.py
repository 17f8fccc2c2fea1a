"""Binary linear codes and their weight enumerators.

Codewords are held as integer bitmasks (bit i = coordinate i), which keeps
exhaustive enumeration of all 2^k codewords cheap at the sizes used here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import CapacityError, ParameterError

MAX_ENUM_DIMENSION = 26


@dataclass(frozen=True)
class WeightDistribution:
    """Hamming weight profile: coefficients[w] counts codewords of weight w."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coefficients):
            raise ParameterError("weight counts must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def min_positive_weight(self) -> int:
        for w, c in enumerate(self.coefficients):
            if w > 0 and c > 0:
                return w
        raise ParameterError("zero code has no nonzero codeword")


class BinaryLinearCode:
    """An [n, k] code given by k linearly independent generator rows."""

    modulus = 2

    def __init__(self, length: int, rows, name: str = "binary"):
        if length < 1:
            raise ParameterError("length must be positive")
        rows = [tuple(int(x) % 2 for x in row) for row in rows]
        for row in rows:
            if len(row) != length:
                raise ParameterError("generator row length mismatch")
        self.length = length
        self.generator = tuple(rows)
        self.name = name
        self._masks = [_row_mask(row) for row in rows]
        self._pivots, self._reduced = _rref(self._masks, length)
        if len(self._reduced) != len(rows):
            raise ParameterError("generator rows are linearly dependent")
        self._weights = None

    @property
    def dimension(self) -> int:
        return len(self.generator)

    @property
    def size(self) -> int:
        return 1 << self.dimension

    def contains(self, vec) -> bool:
        """Membership by reducing against the row-echelon generator."""
        bits = [int(x) % 2 for x in vec]
        if len(bits) != self.length:
            raise ParameterError("vector length mismatch")
        m = _row_mask(bits)
        for piv, row in zip(self._pivots, self._reduced):
            if m >> piv & 1:
                m ^= row
        return m == 0

    def iter_codeword_masks(self):
        """All codewords as bitmasks, in Gray-code order (one row XOR per
        step).  Order never matters to callers; only counts are kept."""
        k = self.dimension
        if k > MAX_ENUM_DIMENSION:
            raise CapacityError(f"2^{k} codewords is beyond desk scale")
        word = 0
        yield word
        for i in range(1, 1 << k):
            word ^= self._masks[(i & -i).bit_length() - 1]
            yield word

    def weight_profile(self) -> WeightDistribution:
        if self._weights is None:
            counts = [0] * (self.length + 1)
            for mask in self.iter_codeword_masks():
                counts[mask.bit_count()] += 1
            self._weights = WeightDistribution(tuple(counts))
        return self._weights

    def shifted_weight_coeffs(self, r: int) -> list[int]:
        """Dense coefficients of sum over codewords of q^(sum_i s(c_i)),
        where s(j) is the first integer >= r congruent to j mod 2."""
        a, b = shift_exponents(2, r)
        n = self.length
        dist = self.weight_profile().coefficients
        out = [0] * (max(a, b) * n + 1)
        for w, count in enumerate(dist):
            if count:
                out[a * (n - w) + b * w] += count
        return out

    def __repr__(self):
        return f"BinaryLinearCode({self.name!r}, [{self.length},{self.dimension}])"


def shift_exponents(m: int, r: int) -> tuple[int, ...]:
    """First integers >= r congruent to 0, 1, ..., m-1 modulo m."""
    return tuple(r + ((j - r) % m) for j in range(m))


def repetition(s: int) -> BinaryLinearCode:
    if s < 1:
        raise ParameterError("repetition length must be >= 1")
    return BinaryLinearCode(s, [(1,) * s], name=f"repetition({s})")


def even_weight(s: int) -> BinaryLinearCode:
    """All words of even Hamming weight; dual of the repetition code."""
    if s < 1:
        raise ParameterError("even-weight length must be >= 1")
    rows = []
    for i in range(s - 1):
        row = [0] * s
        row[i] = row[i + 1] = 1
        rows.append(row)
    return BinaryLinearCode(s, rows, name=f"even_weight({s})")


def reed_muller(k: int, m: int) -> BinaryLinearCode:
    """Order-k Reed-Muller code of length 2^m: evaluations of all monomials
    of degree <= k at the points of F_2^m, points in lexicographic order."""
    if not 0 <= k <= m:
        raise ParameterError(f"need 0 <= k <= m, got k={k}, m={m}")
    n = 1 << m
    points = [[(j >> (m - 1 - i)) & 1 for i in range(m)] for j in range(n)]
    rows = []
    for deg in range(k + 1):
        for combo in itertools.combinations(range(m), deg):
            rows.append([math.prod(p[i] for i in combo) for p in points])
    return BinaryLinearCode(n, rows, name=f"RM({k},{m})")


def hamming8() -> BinaryLinearCode:
    """The [8, 4, 4] extended Hamming code, realized as RM(1, 3)."""
    code = reed_muller(1, 3)
    code.name = "H8"
    return code


def build_binary_code(name: str, *params: int) -> BinaryLinearCode:
    """Named construction dispatch: extended_hamming_8, reed_muller(k, m),
    repetition(s), even_weight(s)."""
    builders = {
        "extended_hamming_8": (hamming8, 0),
        "reed_muller": (reed_muller, 2),
        "repetition": (repetition, 1),
        "even_weight": (even_weight, 1),
    }
    if name not in builders:
        raise ParameterError(f"unknown binary code {name!r}")
    fn, arity = builders[name]
    if len(params) != arity:
        raise ParameterError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def weight_distribution(code: BinaryLinearCode) -> WeightDistribution:
    return code.weight_profile()


def min_hamming_weight(code: BinaryLinearCode) -> int:
    return code.weight_profile().min_positive_weight()


def _row_mask(row) -> int:
    mask = 0
    for i, bit in enumerate(row):
        if bit:
            mask |= 1 << i
    return mask


def _rref(masks, n):
    """Row-echelon form over GF(2); returns (pivot columns, reduced rows)
    with zero rows dropped."""
    rows = list(masks)
    pivots, reduced = [], []
    for col in range(n):
        hit = next((i for i, r in enumerate(rows) if r >> col & 1), None)
        if hit is None:
            continue
        piv = rows.pop(hit)
        rows = [r ^ piv if r >> col & 1 else r for r in rows]
        reduced = [r ^ piv if r >> col & 1 else r for r in reduced]
        pivots.append(col)
        reduced.append(piv)
    return pivots, reduced

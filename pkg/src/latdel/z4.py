"""Linear codes over Z4: standard-form reduction, streaming enumeration,
complete weight enumerators, and the three named constructions used by the
mod-4 lattices (the Klemm family, the Reed-Muller combination behind the
16-dimensional Barnes-Wall packing, and the extended Hensel-lifted
quadratic-residue code of length 24).

Enumeration never stores the full codeword list: blocks of codewords are
streamed through numpy and only weight statistics are accumulated, so the
4^12 words of the length-24 code stay within a desk-scale run.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapacityError, ConstructionError, ParameterError
from .gf2 import shift_exponents
from .series import IntSeries

MAX_ENUM_SIZE = 1 << 25

LEE_WEIGHT = (0, 1, 2, 1)


@dataclass(frozen=True)
class CompleteWeightEnumerator:
    """Sparse symbol-count statistics: terms maps a composition
    (n_0, n_1, n_2, n_3) with sum n to the number of codewords having
    exactly n_j entries equal to j."""

    length: int
    terms: tuple[tuple[tuple[int, int, int, int], int], ...]

    @property
    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def as_dict(self) -> dict[tuple[int, int, int, int], int]:
        return dict(self.terms)

    def substitute_exponents(self, exps: tuple[int, int, int, int]) -> dict[int, int]:
        """Collapse to one variable: each composition contributes its count
        at degree sum_j exps[j] * n_j."""
        out: dict[int, int] = {}
        for comp, count in self.terms:
            deg = sum(e * nj for e, nj in zip(exps, comp))
            out[deg] = out.get(deg, 0) + count
        return out

    def min_lee_weight(self) -> int:
        best = None
        for comp, _ in self.terms:
            w = comp[1] + 2 * comp[2] + comp[3]
            if w > 0 and (best is None or w < best):
                best = w
        if best is None:
            raise ParameterError("zero code has no nonzero codeword")
        return best


class Z4LinearCode:
    """A Z4-submodule of Z4^n given by generator rows.  Rows are reduced to
    a standard form with k1 rows of order 4 (unit pivot) and k2 rows of
    order 2 (pivot entry 2), so the code has exactly 4^k1 * 2^k2 elements."""

    modulus = 4

    def __init__(self, length: int, rows, name: str = "z4"):
        if length < 1:
            raise ParameterError("length must be positive")
        rows = [tuple(int(x) % 4 for x in row) for row in rows]
        for row in rows:
            if len(row) != length:
                raise ParameterError("generator row length mismatch")
        self.length = length
        self.generator = tuple(rows)
        self.name = name
        self._unit_rows, self._two_rows = _standard_form(rows, length)
        self._cwe = None

    @property
    def k1(self) -> int:
        return len(self._unit_rows)

    @property
    def k2(self) -> int:
        return len(self._two_rows)

    @property
    def size(self) -> int:
        return 4**self.k1 * 2**self.k2

    def contains(self, vec) -> bool:
        x = [int(v) % 4 for v in vec]
        if len(x) != self.length:
            raise ParameterError("vector length mismatch")
        for piv, row in self._unit_rows:
            c = x[piv]
            if c:
                x = [(a - c * b) % 4 for a, b in zip(x, row)]
        for piv, row in self._two_rows:
            if x[piv] % 2:
                return False
            if x[piv]:
                x = [(a - b) % 4 for a, b in zip(x, row)]
        return not any(x)

    def reduce_mod2_rows(self) -> list[tuple[int, ...]]:
        """Generator rows of the mod-2 reduction (possibly dependent)."""
        return [tuple(v % 2 for v in row) for _, row in self._unit_rows]

    def codeword_blocks(self):
        """Yield numpy int8 blocks whose rows together run over every
        codeword exactly once."""
        if self.size > MAX_ENUM_SIZE:
            raise CapacityError(f"{self.size} codewords is beyond desk scale")
        basis = [(row, 4) for _, row in self._unit_rows]
        basis += [(row, 2) for _, row in self._two_rows]
        first, second, prod = [], [], 1
        target = int(self.size**0.5)
        for row, order in basis:
            (first if prod < target else second).append((row, order))
            if prod < target:
                prod *= order
        lead = _combos(first, self.length)
        tail = _combos(second, self.length)
        for i in range(lead.shape[0]):
            yield (lead[i][None, :] + tail) & 3

    def complete_weight_profile(self) -> CompleteWeightEnumerator:
        if self._cwe is None:
            n = self.length
            base = n + 1
            counts = np.zeros(base**3, dtype=np.int64)
            for block in self.codeword_blocks():
                n1 = np.count_nonzero(block == 1, axis=1)
                n2 = np.count_nonzero(block == 2, axis=1)
                n3 = np.count_nonzero(block == 3, axis=1)
                key = (n1 * base + n2) * base + n3
                counts += np.bincount(key, minlength=base**3)
            terms = []
            for key in np.nonzero(counts)[0]:
                k = int(key)
                n3 = k % base
                n2 = (k // base) % base
                n1 = k // (base * base)
                comp = (n - n1 - n2 - n3, n1, n2, n3)
                terms.append((comp, int(counts[k])))
            terms.sort()
            self._cwe = CompleteWeightEnumerator(n, tuple(terms))
        return self._cwe

    def shifted_weight_coeffs(self, r: int) -> list[int]:
        exps = shift_exponents(4, r)
        sub = self.complete_weight_profile().substitute_exponents(exps)
        out = [0] * (max(sub) + 1)
        for deg, c in sub.items():
            out[deg] = c
        return out

    def __repr__(self):
        return f"Z4LinearCode({self.name!r}, n={self.length}, 4^{self.k1}*2^{self.k2})"


def klemm(s: int) -> Z4LinearCode:
    """Klemm code of length s: spanned by the all-ones vector together with
    2(e_i + e_s) for 1 < i < s.  This is the mod-4 image of the lattice
    generator matrix in `lattice.klemm_generator_matrix`; for even s it
    equals repetition plus twice the even-weight code."""
    if s < 2:
        raise ParameterError("klemm length must be >= 2")
    rows = [(1,) * s]
    for i in range(1, s - 1):
        row = [0] * s
        row[i] = 2
        row[-1] = 2
        rows.append(row)
    return Z4LinearCode(s, rows, name=f"K{s}")


def bw16_code() -> Z4LinearCode:
    """RM(1,4) + 2 RM(2,4) read over Z4; Construction A on it yields the
    16-dimensional Barnes-Wall packing.  Order-4 rows evaluate the degree
    <= 1 monomials, order-2 rows twice the degree-2 monomials."""
    from .gf2 import reed_muller

    rm1 = reed_muller(1, 4)
    rm2 = reed_muller(2, 4)
    rows = [row for row in rm1.generator]
    rows += [tuple(2 * v for v in row) for row in rm2.generator[rm1.dimension :]]
    return Z4LinearCode(16, rows, name="BW16")


GOLAY_G2 = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)  # x^11+x^10+x^6+x^5+x^4+x^2+1


def hensel_lift_golay() -> tuple[int, ...]:
    """Degree-11 divisor of x^23 - 1 over Z4 reducing mod 2 to the binary
    Golay generator, computed by one Graeffe step: with g(x) written as
    e(x^2) + x o(x^2), the lift satisfies g4(y) = +-(y o(y)^2 - e(y)^2)."""
    e = tuple(GOLAY_G2[i] for i in range(0, len(GOLAY_G2), 2))
    o = tuple(GOLAY_G2[i] for i in range(1, len(GOLAY_G2), 2))
    e2 = _poly_mul(e, e)
    yo2 = (0,) + _poly_mul(o, o)
    g4 = [(a - b) % 4 for a, b in zip(_pad(yo2, 12), _pad(e2, 12))]
    if g4[-1] == 3:
        g4 = [(-c) % 4 for c in g4]
    g4 = tuple(g4)
    if tuple(c % 2 for c in g4) != GOLAY_G2:
        raise ConstructionError("lift does not reduce to the binary generator")
    x23_minus_1 = (3,) + (0,) * 22 + (1,)
    _, rem = _poly_divmod(x23_minus_1, g4)
    if any(rem):
        raise ConstructionError("lifted generator does not divide x^23 - 1 mod 4")
    return g4


def golay_z4() -> Z4LinearCode:
    """Length-24 extension of the cyclic code generated by the Hensel lift:
    each length-23 word c gains the coordinate -sum(c) mod 4.  The extension
    is linear, so it is applied to the generator rows."""
    g4 = hensel_lift_golay()
    rows = []
    for shift in range(12):
        row = [0] * 23
        for j, c in enumerate(g4):
            row[shift + j] = c
        row.append(-sum(row) % 4)
        rows.append(row)
    return Z4LinearCode(24, rows, name="QR24")


def build_z4_code(name: str, s: int | None = None) -> Z4LinearCode:
    """Named construction dispatch: klemm(s), bw16_code, golay_z4."""
    if name == "klemm":
        if s is None:
            raise ParameterError("klemm needs a length parameter")
        return klemm(s)
    if s is not None:
        raise ParameterError(f"{name} takes no length parameter")
    if name in ("bw16_code", "bw16"):
        return bw16_code()
    if name in ("golay_z4", "golay24"):
        return golay_z4()
    raise ParameterError(f"unknown Z4 code {name!r}")


def complete_weight_enumerator(code: Z4LinearCode) -> CompleteWeightEnumerator:
    return code.complete_weight_profile()


def shifted_weight_distribution(code: Z4LinearCode, r: int) -> IntSeries:
    """Polynomial sum over codewords of q^(sum_i s(c_i)), with s(j) the
    first integer >= r congruent to j mod 4.  This is the numerator of the
    lattice point-count series over (1 - q^4)^n."""
    if r < 0:
        raise ParameterError("shift r must be >= 0")
    return IntSeries(tuple(code.shifted_weight_coeffs(r)))


def min_lee_distance(code: Z4LinearCode) -> int:
    """Least Lee weight sum(min(c_i, 4 - c_i)) over nonzero codewords."""
    return code.complete_weight_profile().min_lee_weight()


def _combos(rows_orders, n) -> np.ndarray:
    out = np.zeros((1, n), dtype=np.int8)
    for row, order in rows_orders:
        arr = np.asarray(row, dtype=np.int8)
        shifts = (np.arange(order, dtype=np.int8)[:, None] * arr[None, :]) & 3
        out = (out[:, None, :] + shifts[None, :, :]).reshape(-1, n) & 3
    return out


def _standard_form(rows, n):
    """Split the row span into order-4 rows with unit pivots and order-2
    rows in echelon form, using row operations only.  Unit pivots are found
    by scanning whole rows for a unit (a row like (2, 1) is order 4 even
    though its leading entry is even)."""
    work = [list(r) for r in rows]
    unit_rows = []
    while True:
        best = None
        for idx, row in enumerate(work):
            cols = [j for j, v in enumerate(row) if v % 2 == 1]
            if cols and (best is None or cols[0] < best[1]):
                best = (idx, cols[0])
        if best is None:
            break
        idx, piv = best
        row = work.pop(idx)
        if row[piv] == 3:
            row = [(3 * v) % 4 for v in row]
        unit_rows.append((piv, row))
        work = [_clear(w, row, piv) for w in work]
        unit_rows = [(p, r) if p == piv else (p, _clear(r, row, piv)) for p, r in unit_rows]
    # remaining rows are all-even: echelon-reduce them as 2 * (binary rows)
    two_rows = []
    for col in range(n):
        hit = next((i for i, w in enumerate(work) if w[col]), None)
        if hit is None:
            continue
        row = work.pop(hit)
        work = [[(a - b) % 4 for a, b in zip(w, row)] if w[col] else w for w in work]
        two_rows.append((col, row))
    return unit_rows, two_rows


def _clear(target, pivot_row, piv):
    c = target[piv] * 1
    if c:
        return [(a - c * b) % 4 for a, b in zip(target, pivot_row)]
    return target


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % 4
    return tuple(out)


def _poly_divmod(num, den):
    """Divide polynomials over Z4, denominator monic; coefficients ascending."""
    if den[-1] != 1:
        raise ParameterError("divisor must be monic")
    rem = list(num)
    quot = [0] * max(1, len(num) - len(den) + 1)
    for top in range(len(num) - 1, len(den) - 2, -1):
        c = rem[top] % 4
        if c:
            shift = top - (len(den) - 1)
            quot[shift] = c
            for j, d in enumerate(den):
                rem[shift + j] = (rem[shift + j] - c * d) % 4
    return tuple(quot), tuple(v % 4 for v in rem)


def _pad(t, size):
    return tuple(t) + (0,) * (size - len(t))

"""Mod-m preimage lattices of linear codes (Construction A).

A lattice here is just (modulus, base code): x belongs iff its componentwise
reduction mod m is a codeword.  Membership is a standard-form syndrome
check on the code side, so no basis reduction is ever needed.
"""

from __future__ import annotations

from itertools import product

from .errors import ParameterError
from .gf2 import BinaryLinearCode
from .z4 import Z4LinearCode, klemm, min_lee_distance


class ConstructionALattice:
    """Preimage of a linear code under componentwise reduction mod m."""

    def __init__(self, code: BinaryLinearCode | Z4LinearCode):
        if code.modulus not in (2, 4):
            raise ParameterError("supported moduli are 2 and 4")
        self.code = code
        self.modulus = code.modulus
        self.dimension = code.length

    def contains(self, x) -> bool:
        x = tuple(int(v) for v in x)
        if len(x) != self.dimension:
            raise ParameterError(
                f"dimension mismatch: {len(x)} vs {self.dimension}"
            )
        return self.code.contains([v % self.modulus for v in x])

    def __repr__(self):
        return f"ConstructionALattice(mod {self.modulus}, {self.code.name})"


def min_distance(lattice: ConstructionALattice) -> int:
    """min(d', m) where d' is the minimum Lee distance of the base code.
    A zero base code gives m (the lattice is mZ^n)."""
    code = lattice.code
    if code.modulus == 2:
        profile = code.weight_profile()
        try:
            d_code = profile.min_positive_weight()
        except ParameterError:
            d_code = None
    else:
        try:
            d_code = min_lee_distance(code)
        except ParameterError:
            d_code = None
    if d_code is None:
        return lattice.modulus
    return min(d_code, lattice.modulus)


def klemm_generator_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Square generator matrix of the mod-4 Klemm lattice: all-ones first
    row, then rows with 2 on the diagonal and 2 in the last column, then a
    final row of 4 in the last column.  Triangular up to the first row, so
    |det| = 2^n."""
    if n < 2:
        raise ParameterError("need n >= 2")
    rows = [(1,) * n]
    for i in range(1, n - 1):
        row = [0] * n
        row[i] = 2
        row[-1] = 2
        rows.append(tuple(row))
    last = [0] * n
    last[-1] = 4
    rows.append(tuple(last))
    return tuple(rows)


def in_klemm_lattice_span(n: int, x) -> bool:
    """Membership in the integer row span of klemm_generator_matrix(n),
    solved directly off the triangular structure."""
    x = list(x)
    if len(x) != n:
        raise ParameterError("dimension mismatch")
    a = x[0]
    bs = []
    for v in x[1:-1]:
        if (v - a) % 2:
            return False
        bs.append((v - a) // 2)
    return (x[-1] - a - 2 * sum(bs)) % 4 == 0


def coset_structure_check(n: int, box: int = 3) -> bool:
    """Exhaustively verify, over the window [0, box]^n, that membership in
    the mod-4 Klemm lattice matches the two-coset description: all-even
    coordinates with sum divisible by 4, or the same after subtracting 1
    from every coordinate."""
    lat = ConstructionALattice(klemm(n))
    for x in product(range(box + 1), repeat=n):
        even = all(v % 2 == 0 for v in x) and sum(x) % 4 == 0
        odd = all(v % 2 == 1 for v in x) and (sum(x) - n) % 4 == 0
        if lat.contains(x) != (even or odd):
            return False
    return True

"""Nearest-codeword decoding for codebooks carved from the mod-4 Klemm
lattice, correcting a single deletion.

The lattice splits into two cosets: vectors with all coordinates even and
even half-sum, and their all-odd translate by the all-ones vector.  A
single deletion lowers one coordinate by 1, so either the received sum is
N-1 and the corrupted coordinate is the unique parity outlier, or the sum
is N and the word passes through unchanged.  The general branch subtracts
a coset representative, projects onto the zero-sum hyperplane at each
index in turn, and keeps the first projection with all coordinates even.

Every decode uses at most 5n-2 integer additions and n parity tests; the
instrumented counts ride along in the returned trace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class DecodeTrace:
    input: tuple[int, ...]
    output: tuple[int, ...] | None
    branch: str
    projection_index: int | None
    additions_used: int
    parity_tests_used: int
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def phi_projection(x, i: int) -> tuple[int, ...]:
    """Copy of x with the full coordinate sum subtracted from coordinate i
    (1-indexed); the result sums to zero and is a nearest point of the
    zero-sum lattice."""
    x = tuple(int(v) for v in x)
    if not 1 <= i <= len(x):
        raise ParameterError(f"index {i} out of range 1..{len(x)}")
    s = sum(x)
    return x[: i - 1] + (x[i - 1] - s,) + x[i:]


def nearest_zero_sum_point(x) -> tuple[tuple[int, ...], int]:
    """A closest zero-sum integer vector to x together with the distance,
    which equals |sum(x)|."""
    x = tuple(int(v) for v in x)
    return phi_projection(x, 1), abs(sum(x))


def default_coset_rep(x, N: int) -> tuple[int, ...]:
    """Coset representative of the zero-sum sublattice, picked from the
    majority coordinate parity of the received vector: all-odd words pair
    with (1, ..., 1, N-n+1), all-even words with (N, 0, ..., 0)."""
    x = tuple(int(v) for v in x)
    n = len(x)
    odd = sum(v % 2 for v in x)
    if odd > n - odd:
        return (1,) * (n - 1) + (N - n + 1,)
    return (N,) + (0,) * (n - 1)


def decode(x, N: int, a=None, force_projection: bool = False) -> DecodeTrace:
    """Decode a received vector against the codebook with coordinate sum N.

    Within the channel contract (at most one deletion against a codebook
    with run floor r >= 2) the output is always the transmitted codeword;
    outside it, failure is an explicit signal on the trace, not an
    exception.
    """
    x = tuple(int(v) for v in x)
    n = len(x)
    if n < 2:
        raise ParameterError("need at least 2 coordinates")
    if a is None:
        a = default_coset_rep(x, N)
    a = tuple(int(v) for v in a)
    if len(a) != n:
        raise ParameterError("coset representative dimension mismatch")

    additions = n - 1  # coordinate sum of the received vector
    parity = 0
    total = sum(x)

    if total == N - 1 and not force_projection:
        parity += n
        odd_idx = [i for i, v in enumerate(x) if v % 2 == 1]
        even_idx = [i for i, v in enumerate(x) if v % 2 == 0]
        minority = odd_idx if len(odd_idx) < len(even_idx) else even_idx
        if len(minority) != 1:
            return DecodeTrace(x, None, "parity_fix", None, additions, parity,
                               failure="no unique parity outlier")
        j = minority[0]
        additions += 1
        fixed = x[:j] + (x[j] + 1,) + x[j + 1 :]
        return DecodeTrace(x, fixed, "parity_fix", None, additions, parity)

    shifted = tuple(v - av for v, av in zip(x, a))
    additions += n
    s = sum(shifted)
    additions += n - 1
    for i in range(1, n + 1):
        candidate = shifted[: i - 1] + (shifted[i - 1] - s,) + shifted[i:]
        additions += 1
        parity += 1
        if all(v % 2 == 0 for v in candidate):
            result = tuple(v + av for v, av in zip(candidate, a))
            additions += n
            return DecodeTrace(x, result, "projection", i, additions, parity)
    return DecodeTrace(x, None, "projection", None, additions, parity,
                       failure="no all-even projection; more than one deletion?")


def count_operations(trace: DecodeTrace) -> tuple[int, int]:
    """(integer additions, parity tests) consumed by a completed decode."""
    return trace.additions_used, trace.parity_tests_used

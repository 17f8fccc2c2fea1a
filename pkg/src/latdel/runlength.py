"""Runlength coding: binary words under indel distance versus positive
integer vectors under Manhattan distance.

Words are ASCII strings over {0, 1}.  A word admitted here starts with a
zero and ends with a one, so its run count n is even and the run vector
(x_1, y_1, ..., x_{n/2}, y_{n/2}) alternates zero-runs and one-runs.
Deleting j <= min_run - 1 symbols changes one run length by at most j, so
run counts survive transmission and the map below is an isometry.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Sequence

from .errors import HypothesisViolation, ParameterError


@dataclass(frozen=True)
class RunVector:
    """Run lengths of a binary word, in order.  Entries are positive and
    the count is even."""

    runs: tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(x, int) or x < 1 for x in self.runs):
            raise ParameterError(f"run lengths must be positive integers: {self.runs}")
        if len(self.runs) % 2 != 0:
            raise ParameterError(f"run count must be even, got {len(self.runs)}")

    @property
    def n(self) -> int:
        return len(self.runs)

    @property
    def total(self) -> int:
        """Length N of the underlying binary word."""
        return sum(self.runs)


def phi(word: str | Sequence[int]) -> RunVector:
    """Run vector of a binary word."""
    bits = _as_bits(word)
    if not bits:
        raise HypothesisViolation("empty word", word)
    if bits[0] != 0:
        raise HypothesisViolation("word must start with 0", word)
    if bits[-1] != 1:
        raise HypothesisViolation("word must end with 1", word)
    return RunVector(tuple(len(list(g)) for _, g in groupby(bits)))


def phi_inverse(rv: RunVector | Sequence[int]) -> str:
    """Binary word with the given run lengths (first run is zeros)."""
    if not isinstance(rv, RunVector):
        rv = RunVector(tuple(rv))
    return "".join(("0" if i % 2 == 0 else "1") * x for i, x in enumerate(rv.runs))


def manhattan_distance(u, v) -> int:
    """Sum of absolute coordinate differences."""
    ur = u.runs if isinstance(u, RunVector) else tuple(u)
    vr = v.runs if isinstance(v, RunVector) else tuple(v)
    if len(ur) != len(vr):
        raise ParameterError(f"dimension mismatch: {len(ur)} vs {len(vr)}")
    return sum(abs(a - b) for a, b in zip(ur, vr))


def levenshtein_indel_distance(u: str | Sequence[int], v: str | Sequence[int]) -> int:
    """Fewest insertions plus deletions turning one word into the other,
    via |u| + |v| - 2 * LCS(u, v) with a two-row dynamic program."""
    ub, vb = _as_bits(u), _as_bits(v)
    if len(ub) < len(vb):
        ub, vb = vb, ub
    m = len(vb)
    prev = [0] * (m + 1)
    for a in ub:
        cur = [0] * (m + 1)
        for j in range(1, m + 1):
            if a == vb[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                pj, cj = prev[j], cur[j - 1]
                cur[j] = pj if pj >= cj else cj
        prev = cur
    return len(ub) + len(vb) - 2 * prev[m]


def validate_hypothesis(rv: RunVector | Sequence[int], r: int) -> bool:
    """True iff every run length is at least r."""
    if r < 1:
        raise ParameterError("run-length floor r must be >= 1")
    runs = rv.runs if isinstance(rv, RunVector) else tuple(rv)
    return min(runs) >= r


def _as_bits(word) -> list[int]:
    if isinstance(word, str):
        try:
            return [{"0": 0, "1": 1}[ch] for ch in word]
        except KeyError:
            raise HypothesisViolation(f"non-binary character in word", word) from None
    bits = list(word)
    if any(b not in (0, 1) for b in bits):
        raise HypothesisViolation("word entries must be 0 or 1", word)
    return bits

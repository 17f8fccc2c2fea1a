"""Explicit codebooks carved from the mod-4 Klemm lattice: all lattice
points with coordinates >= r and coordinate sum N.

Generation runs a depth-first tree search over the generator-matrix
coefficients x_1..x_n, with per-level windows [l_i, u_i] tight enough that
the level-(n-1) node count equals the codebook size whenever N is a
multiple of 4.  Levels are expanded breadth-first as numpy arrays so the
multi-million-node searches stay fast; the per-level visited counts are
the number of coefficient prefixes explored.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import CapacityError, ParameterError
from .lattice import ConstructionALattice, min_distance
from .z4 import klemm


@dataclass(frozen=True)
class Codebook:
    """An (n, d, N, r) point set with its search statistics."""

    n: int
    N: int
    r: int
    d: int
    words: tuple[tuple[int, ...], ...]
    visited_nodes: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.words)


def generate(n: int, N: int, r: int) -> Codebook:
    """Search the codebook, materializing the words in lexicographic order.
    Infeasible parameters yield an empty codebook, not an error."""
    words, visited = _search(n, N, r, collect=True)
    return Codebook(
        n=n, N=N, r=r, d=_parent_min_distance(n), words=words, visited_nodes=visited
    )


def visit_counts(n: int, N: int, r: int) -> tuple[int, ...]:
    """Per-level visited node counts only, without storing any words."""
    _, visited = _search(n, N, r, collect=False)
    return visited


def naive_node_bound(n: int, N: int, r: int, level: int) -> int:
    """Crude per-level cap (N-nr+1) * ((N-nr+2)/2)^(level-1) on the number
    of visited nodes.  The base (N-nr+2)/2 is an integer for the tabulated
    even N; odd N round the exact rational down."""
    if level < 1:
        raise ParameterError("level must be >= 1")
    span = N - n * r
    if span < 0:
        return 0
    return (span + 1) * (span + 2) ** (level - 1) // 2 ** (level - 1)


def exact_packing_number(n: int, N: int, r: int, d: int, cap: int = 100_000) -> int:
    """Largest set of vectors >= r summing to N with pairwise Manhattan
    distance >= d, by exact maximum-independent-set search on the conflict
    graph.  Test oracle; tiny instances only."""
    if n < 1 or r < 0 or d < 0:
        raise ParameterError("need n >= 1, r >= 0, d >= 0")
    cands = list(_compositions(n, N, r))
    if len(cands) > cap:
        raise CapacityError(f"{len(cands)} candidate vectors exceeds cap {cap}")
    if d <= 1 or len(cands) <= 1:
        return len(cands)
    conflict = [0] * len(cands)
    for i, j in combinations(range(len(cands)), 2):
        if sum(abs(a - b) for a, b in zip(cands[i], cands[j])) < d:
            conflict[i] |= 1 << j
            conflict[j] |= 1 << i
    if len(cands) > 400:
        raise CapacityError("conflict graph too large for exact search")
    return _max_independent_set(conflict)


def format_codebook(cb: Codebook) -> str:
    lines = [f"# n={cb.n} d={cb.d} N={cb.N} r={cb.r} count={cb.size}"]
    lines += [" ".join(str(v) for v in w) for w in cb.words]
    return "\n".join(lines) + "\n"


def parse_codebook(text: str) -> Codebook:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ParameterError("missing codebook header line")
    fields = dict(kv.split("=") for kv in lines[0][1:].split())
    n, d, N, r = (int(fields[k]) for k in ("n", "d", "N", "r"))
    words = tuple(tuple(int(v) for v in ln.split()) for ln in lines[1:])
    if len(words) != int(fields["count"]):
        raise ParameterError("word count does not match header")
    if any(len(w) != n for w in words):
        raise ParameterError("word dimension does not match header")
    return Codebook(n=n, N=N, r=r, d=d, words=words, visited_nodes=())


def _search(n, N, r, collect):
    if n < 2:
        raise ParameterError("need n >= 2")
    if r < 1:
        raise ParameterError("need r >= 1")
    visited = []
    # level 1: x_1 = c_1 runs over [r, N-(n-1)r]
    x1 = np.arange(r, N - (n - 1) * r + 1, dtype=np.int64)
    state_sum = x1.copy()
    coeff_sum = np.zeros_like(x1)  # x_2 + ... + x_i
    cols = [x1] if collect else None
    visited.append(int(x1.size))
    for i in range(2, n):
        lo = -((x1 - r) // 2)  # ceil((r - x1) / 2)
        hi = (N - (n - i) * r - state_sum - x1) // 2
        counts = np.maximum(hi - lo + 1, 0)
        total = int(counts.sum())
        visited.append(total)
        if total == 0:
            empty = tuple()
            return (empty if collect else None), tuple(visited) + (0,) * (n - i)
        idx = np.repeat(np.arange(x1.size), counts)
        offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        xi = lo[idx] + offsets
        coord = x1[idx] + 2 * xi
        x1 = x1[idx]
        state_sum = state_sum[idx] + coord
        coeff_sum = coeff_sum[idx] + xi
        if collect:
            cols = [c[idx] for c in cols] + [coord]
    # level n: the remaining coefficient is forced by the sum constraint
    t = x1 + 2 * coeff_sum
    residue = N - state_sum - t
    xn = residue // 4
    feasible = (
        (residue % 4 == 0)
        & (4 * xn >= r - t)
        & (4 * xn <= N - (n - 1) * r - t)
    )
    visited.append(int(np.count_nonzero(feasible)))
    if not collect:
        return None, tuple(visited)
    last = t + 4 * xn
    matrix = np.stack(cols + [last], axis=1)[feasible]
    order = np.lexsort(matrix.T[::-1])
    words = tuple(tuple(int(v) for v in row) for row in matrix[order])
    return words, tuple(visited)


def _parent_min_distance(n: int) -> int:
    return min_distance(ConstructionALattice(klemm(n)))


def _compositions(n, total, floor):
    """All integer vectors of length n with entries >= floor summing to total."""
    if total < n * floor:
        return
    if n == 1:
        yield (total,)
        return
    for head in range(floor, total - (n - 1) * floor + 1):
        for rest in _compositions(n - 1, total - head, floor):
            yield (head,) + rest


def _max_independent_set(conflict):
    order = sorted(range(len(conflict)), key=lambda v: -bin(conflict[v]).count("1"))
    rank = {v: i for i, v in enumerate(order)}
    adj = [0] * len(conflict)
    for v in range(len(conflict)):
        mask = conflict[v]
        new = 0
        while mask:
            low = mask & -mask
            new |= 1 << rank[low.bit_length() - 1]
            mask ^= low
        adj[rank[v]] = new
    best = 0

    def walk(avail, size):
        nonlocal best
        if avail == 0:
            best = max(best, size)
            return
        if size + bin(avail).count("1") <= best:
            return
        v = (avail & -avail).bit_length() - 1
        walk(avail & ~(1 << v) & ~adj[v], size + 1)  # take v
        walk(avail & ~(1 << v), size)  # skip v
        return

    walk((1 << len(conflict)) - 1, 0)
    return best

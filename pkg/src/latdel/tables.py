"""Reference-table reproduction and golden-file comparison.

Each table id maps to a fixed recipe over the other modules.  Output is
byte-stable CSV: fixed column order, plain decimal integers, LF endings.
Golden copies of the integer tables ship with the package and `golden_diff`
guards them; the figure datasets are float-valued and have no golden copy.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import bounds as bounds_mod
from . import codebook as codebook_mod
from .errors import ParameterError
from .gf2 import hamming8
from .series import hat_coefficient, nu_series
from .z4 import bw16_code, golay_z4, klemm

INTEGER_TABLE_IDS = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII")
TABLE_IDS = INTEGER_TABLE_IDS + ("fig1", "fig2")

FIG_ETAS = {"fig1": (0.2, 0.4, 0.5, 0.6, 0.8), "fig2": (0.1, 0.3, 0.5, 0.7, 0.9)}


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    r: int | None = None
    n_min: int | None = None
    n_max: int | None = None


@dataclass(frozen=True)
class DiffResult:
    ok: bool
    message: str


@lru_cache(maxsize=None)
def _code(tag: str):
    if tag == "H8":
        return hamming8()
    if tag.startswith("K"):
        return klemm(int(tag[1:]))
    if tag == "BW16":
        return bw16_code()
    if tag == "QR24":
        return golay_z4()
    raise ParameterError(f"unknown code tag {tag!r}")


def reproduce_table(spec: TableSpec | str) -> str:
    if isinstance(spec, str):
        spec = TableSpec(spec)
    try:
        builder = _BUILDERS[spec.table_id]
    except KeyError:
        raise ParameterError(f"unknown table id {spec.table_id!r}") from None
    return builder(spec)


def golden_text(table_id: str) -> str:
    if table_id not in INTEGER_TABLE_IDS:
        raise ParameterError(f"no golden file for table {table_id!r}")
    path = resources.files("latdel").joinpath(f"golden/table_{table_id}.csv")
    return path.read_text()


def golden_diff(generated: str, golden: str, float_tol: float = 1e-6) -> DiffResult:
    """Exact cell-by-cell comparison for integer cells, tolerance compare
    for float cells.  Differing headers, shapes, or cell kinds are schema
    errors, not mismatches."""
    gen_rows = [ln.split(",") for ln in generated.strip().splitlines()]
    gold_rows = [ln.split(",") for ln in golden.strip().splitlines()]
    if gen_rows[0] != gold_rows[0]:
        raise ParameterError(f"schema mismatch: {gen_rows[0]} vs {gold_rows[0]}")
    if len(gen_rows) != len(gold_rows):
        return DiffResult(False, f"row count {len(gen_rows) - 1} vs {len(gold_rows) - 1}")
    header = gen_rows[0]
    for ri, (grow, drow) in enumerate(zip(gen_rows[1:], gold_rows[1:]), start=1):
        if len(grow) != len(header) or len(drow) != len(header):
            raise ParameterError(f"schema mismatch: ragged row {ri}")
        for ci, (a, b) in enumerate(zip(grow, drow)):
            ka, kb = _cell_kind(a), _cell_kind(b)
            if ka != kb:
                raise ParameterError(
                    f"schema mismatch at row {ri} column {header[ci]}: {a} vs {b}"
                )
            if ka == "int":
                same = int(a) == int(b)
            elif ka == "float":
                same = abs(float(a) - float(b)) <= float_tol
            else:
                same = a == b
            if not same:
                return DiffResult(False, f"row {ri} column {header[ci]}: {a} != {b}")
    return DiffResult(True, "match")


def _cell_kind(cell: str) -> str:
    if re.fullmatch(r"-?\d+", cell):
        return "int"
    if re.fullmatch(r"-?\d+\.\d+(e-?\d+)?", cell):
        return "float"
    return "str"


def _render(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(str(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _nu_hat_table(tag: str, blocks) -> str:
    code = _code(tag)
    rows = []
    for r, norms in blocks:
        norms = list(norms)
        degree = max(norms) + code.modulus * code.length
        nu = nu_series(code, r, degree)
        for N in norms:
            rows.append((r, N, nu.series.coeff(N), hat_coefficient(nu, r, N)))
    return _render(["r", "N", "nu", "nu_hat"], rows)


def _table_i(spec):
    return _nu_hat_table("H8", [(1, range(8, 37, 2)), (2, range(16, 45, 2))])


def _table_ii(spec):
    return _nu_hat_table("K8", [(1, range(8, 65, 4)), (2, range(16, 73, 4))])


def _table_iii(spec):
    rows = []
    for tag, blocks in (
        ("BW16", [(1, range(16, 73, 4)), (2, range(32, 89, 4))]),
        ("QR24", [(1, range(24, 81, 4)), (2, range(48, 105, 4))]),
    ):
        code = _code(tag)
        for r, norms in blocks:
            norms = list(norms)
            nu = nu_series(code, r, max(norms))
            rows += [(tag, r, N, nu.series.coeff(N)) for N in norms]
    return _render(["lattice", "r", "N", "nu"], rows)


def _table_iv(spec):
    cb = codebook_mod.generate(8, 12, 1)
    return _render([f"c{i}" for i in range(1, 9)], cb.words)


def _table_v(spec):
    visited = codebook_mod.visit_counts(8, 12, 1)
    rows = [
        (level, visited[level - 1], codebook_mod.naive_node_bound(8, 12, 1, level))
        for level in range(2, 8)
    ]
    return _render(["level", "nodes", "bound"], rows)


def _table_vi(spec):
    rows = []
    for N in range(8, 65, 4):
        visited = codebook_mod.visit_counts(8, N, 1)
        rows.append(
            (N, visited[6], visited[5], codebook_mod.naive_node_bound(8, N, 1, 6))
        )
    return _render(["N", "nodes_level7", "nodes_level6", "bound_level6"], rows)


def _bounds_table(tag: str, n: int, start: int) -> str:
    code = _code(tag)
    row_count = 16 if n == 16 else 15
    rows = []
    for r in (2, 3, 4):
        lo = start + (r - 2) * n
        norms = list(range(lo, lo + 4 * row_count, 4))
        nu = nu_series(code, r, max(norms))
        for N in norms:
            rows.append(
                (
                    r,
                    N,
                    bounds_mod.gilbert_lower(n, 4, N, r),
                    nu.series.coeff(N),
                    bounds_mod.hamming_upper(n, 4, N, r),
                )
            )
    return _render(["r", "N", "gilbert_I", "nu", "hamming_S"], rows)


def _table_vii(spec):
    return _bounds_table("K8", 8, 24)


def _table_viii(spec):
    return _bounds_table("BW16", 16, 36)


def _fig_table(spec):
    etas = FIG_ETAS[spec.table_id]
    deltas = [round(0.02 * i, 2) for i in range(51)]
    rows = [
        (f"{eta:.2f}", f"{delta:.2f}", f"{f:.9f}")
        for eta, delta, f in bounds_mod.curve_rows(2, etas, deltas)
    ]
    return _render(["eta", "delta", "f"], rows)


_BUILDERS = {
    "I": _table_i,
    "II": _table_ii,
    "III": _table_iii,
    "IV": _table_iv,
    "V": _table_v,
    "VI": _table_vi,
    "VII": _table_vii,
    "VIII": _table_viii,
    "fig1": _fig_table,
    "fig2": _fig_table,
}

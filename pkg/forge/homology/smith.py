import logging
import math
from typing import Dict, List, Sequence, Set, Union

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from forge.homology.boundary import BoundaryMatrix

logger = logging.getLogger("forge")

SparseColumns = Dict[int, Dict[int, int]]


def smith_normal_form(matrix: Union[BoundaryMatrix, Sequence[Sequence[int]]]) -> List[int]:
    """
    Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix.

    Unit pivots are eliminated sparsely first (each contributes a divisor 1); the remaining
    core, which has no unit entries, goes through sympy's exact Smith normal form.
    """
    rows = _to_sparse_rows(matrix)
    units = _eliminate_unit_pivots(rows)
    core_rows = sorted(rows)
    core_cols = sorted({j for row in rows.values() for j in row})
    divisors = [1] * units
    if core_rows and core_cols:
        logger.debug(f"Smith normal form core of size {len(core_rows)}x{len(core_cols)} after {units} unit pivots")
        col_index = {j: k for k, j in enumerate(core_cols)}
        dense = [[0] * len(core_cols) for _ in core_rows]
        for r, i in enumerate(core_rows):
            for j, value in rows[i].items():
                dense[r][col_index[j]] = value
        normal = sympy_smith_normal_form(Matrix(dense), domain=ZZ)
        diagonal = [abs(int(normal[k, k])) for k in range(min(normal.shape))]
        divisors.extend(_divisibility_chain([value for value in diagonal if value]))
    return divisors


def _divisibility_chain(values: List[int]) -> List[int]:
    values = sorted(values)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            g = math.gcd(values[i], values[j])
            values[i], values[j] = g, values[i] * values[j] // g
    return values


def integer_rank(matrix: Union[BoundaryMatrix, Sequence[Sequence[int]]]) -> int:
    return len(smith_normal_form(matrix))


def _to_sparse_rows(matrix) -> SparseColumns:
    rows: SparseColumns = {}
    if isinstance(matrix, BoundaryMatrix):
        for j, column in matrix.columns.items():
            for i, value in column.items():
                if value:
                    rows.setdefault(i, {})[j] = value
        return rows
    for i, row in enumerate(matrix):
        entries = {j: int(value) for j, value in enumerate(row) if value}
        if entries:
            rows[i] = entries
    return rows


def _eliminate_unit_pivots(rows: SparseColumns) -> int:
    """
    Repeatedly pivots on ±1 entries, replacing the matrix by its Schur complement.
    Mutates rows in place and returns the number of pivots.
    """
    cols: Dict[int, Set[int]] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)

    pivots = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(cols, key=lambda c: len(cols[c])):
            if j not in cols:
                continue
            best = None
            for i in cols[j]:
                if rows[i][j] in (1, -1) and (best is None or len(rows[i]) < len(rows[best])):
                    best = i
            if best is None:
                continue
            _pivot(rows, cols, best, j)
            pivots += 1
            progress = True
    return pivots


def _pivot(rows: SparseColumns, cols: Dict[int, Set[int]], i: int, j: int) -> None:
    pivot_row = rows.pop(i)
    sign = pivot_row[j]
    for c in pivot_row:
        cols[c].discard(i)
    for r in list(cols[j]):
        row = rows[r]
        factor = row[j] * sign
        for c, value in pivot_row.items():
            updated = row.get(c, 0) - factor * value
            if updated:
                if c not in row:
                    cols[c].add(r)
                row[c] = updated
            elif c in row:
                del row[c]
                cols[c].discard(r)
        if not row:
            del rows[r]
    for c in list(pivot_row):
        if not cols.get(c):
            cols.pop(c, None)
    cols.pop(j, None)


def rank_mod2(matrix: BoundaryMatrix) -> int:
    """
    Rank over the two-element field by column reduction on lowest set bits.
    """
    pivot_of_low: Dict[int, int] = {}
    rank = 0
    for column in matrix.columns.values():
        bits = 0
        for i, value in column.items():
            if value % 2:
                bits |= 1 << i
        while bits:
            low = bits.bit_length() - 1
            if low not in pivot_of_low:
                pivot_of_low[low] = bits
                rank += 1
                break
            bits ^= pivot_of_low[low]
    return rank

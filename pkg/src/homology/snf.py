"""Smith normal form over Z for sparse integer matrices.

Only the rank and the invariant factors > 1 are returned; the unimodular transforms
are never materialized. Entries are Python ints, so no intermediate value can overflow.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Protocol, Sequence, Set, Tuple

import numpy as np

logger = logging.getLogger(__name__)

Rows = Dict[int, Dict[int, int]]
Cols = Dict[int, Set[int]]


class SparseColumns(Protocol):
    n_rows: int
    n_cols: int
    columns: Sequence[Dict[int, int]]


@dataclass(frozen=True)
class SnfResult:
    rank: int
    invariant_factors: Tuple[int, ...]


def normalize_invariant_factors(values: Sequence[int]) -> Tuple[int, ...]:
    """Turn any diagonal into the divisibility chain d_1 | d_2 | ..., dropping units and zeros."""
    chain = [abs(v) for v in values if abs(v) > 1]
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            a, b = chain[i], chain[j]
            common = gcd(a, b)
            chain[i], chain[j] = common, a // common * b
    return tuple(v for v in chain if v > 1)


def _load(matrix: SparseColumns) -> Tuple[Rows, Cols]:
    rows: Rows = defaultdict(dict)
    cols: Cols = defaultdict(set)
    for c, column in enumerate(matrix.columns):
        for r, value in column.items():
            if value:
                rows[r][c] = value
                cols[c].add(r)
    return dict(rows), dict(cols)


def _row_axpy(rows: Rows, cols: Cols, target_row: int, source: Dict[int, int], factor: int) -> None:
    """row[target] -= factor * source."""
    target = rows[target_row]
    for j, value in source.items():
        updated = target.get(j, 0) - factor * value
        if updated:
            if j not in target:
                cols.setdefault(j, set()).add(target_row)
            target[j] = updated
        elif j in target:
            del target[j]
            cols[j].discard(target_row)
    if not target:
        del rows[target_row]


def _col_axpy(rows: Rows, cols: Cols, target_col: int, source_col: int, factor: int) -> None:
    """col[target] -= factor * col[source]."""
    for i in list(cols[source_col]):
        row = rows[i]
        updated = row.get(target_col, 0) - factor * row[source_col]
        if updated:
            if target_col not in row:
                cols.setdefault(target_col, set()).add(i)
            row[target_col] = updated
        elif target_col in row:
            del row[target_col]
            cols[target_col].discard(i)


def _drop_pivot(rows: Rows, cols: Cols, r: int, c: int) -> None:
    for j in rows.pop(r):
        cols[j].discard(r)
    del cols[c]


def _eliminate_unit_pivots(rows: Rows, cols: Cols) -> int:
    """Pivot on +-1 entries, sparsest columns first, shortest candidate row. Returns pivots used."""
    eliminated = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols, key=lambda col: len(cols[col])):
            column = cols.get(c)
            if not column:
                cols.pop(c, None)
                continue
            pivot_row, shortest = None, None
            for r in column:
                if abs(rows[r][c]) == 1 and (shortest is None or len(rows[r]) < shortest):
                    pivot_row, shortest = r, len(rows[r])
            if pivot_row is None:
                continue
            sign = rows[pivot_row][c]
            source = rows[pivot_row]
            for i in list(column):
                if i != pivot_row:
                    _row_axpy(rows, cols, i, source, rows[i][c] * sign)
            _drop_pivot(rows, cols, pivot_row, c)
            eliminated += 1
            progress = True
    return eliminated


def _diagonalize(rows: Rows, cols: Cols) -> List[int]:
    """Euclidean reduction of what is left: repeatedly pivot on a smallest entry."""
    diagonal = []
    while rows:
        r, c = min(
            ((i, j) for i, row in rows.items() for j in row),
            key=lambda ij: (abs(rows[ij[0]][ij[1]]), len(rows[ij[0]]), len(cols[ij[1]])),
        )
        while True:
            pivot = rows[r][c]
            for i in list(cols[c]):
                if i != r:
                    quotient = rows[i][c] // pivot
                    if quotient:
                        _row_axpy(rows, cols, i, rows[r], quotient)
            for j in list(rows[r]):
                if j != c:
                    quotient = rows[r][j] // pivot
                    if quotient:
                        _col_axpy(rows, cols, j, c, quotient)
            leftovers = [(i, c) for i in cols[c] if i != r] + [(r, j) for j in rows[r] if j != c]
            if not leftovers:
                break
            r, c = min(leftovers, key=lambda ij: abs(rows[ij[0]][ij[1]]))
        diagonal.append(abs(rows[r][c]))
        _drop_pivot(rows, cols, r, c)
    return diagonal


def smith_normal_form(matrix: SparseColumns) -> SnfResult:
    rows, cols = _load(matrix)
    units = _eliminate_unit_pivots(rows, cols)
    remaining = sum(len(row) for row in rows.values())
    diagonal = _diagonalize(rows, cols)
    if remaining:
        logger.debug(f"SNF: {units} unit pivots, {len(diagonal)} Euclidean pivots over {remaining} entries")
    return SnfResult(rank=units + len(diagonal), invariant_factors=normalize_invariant_factors(diagonal))


def rank_mod_p(matrix: SparseColumns, p: int = 2 ** 31 - 1) -> int:
    """Rank over Z/p by dense Gaussian elimination; a lower bound for the rank over Q."""
    if matrix.n_rows == 0 or matrix.n_cols == 0:
        return 0
    dense = np.zeros((matrix.n_rows, matrix.n_cols), dtype=np.int64)
    for c, column in enumerate(matrix.columns):
        for r, value in column.items():
            dense[r, c] = value % p
    rank = 0
    for c in range(matrix.n_cols):
        candidates = np.nonzero(dense[rank:, c])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            dense[[rank, pivot]] = dense[[pivot, rank]]
        inverse = pow(int(dense[rank, c]), p - 2, p)
        dense[rank] = (dense[rank] * inverse) % p
        below = np.nonzero(dense[rank + 1:, c])[0] + rank + 1
        if below.size:
            factors = dense[below, c].reshape(-1, 1)
            dense[below] = (dense[below] - factors * dense[rank]) % p
        rank += 1
        if rank == matrix.n_rows:
            break
    return rank

from functools import reduce
from itertools import combinations
from math import gcd

import numpy as np
import pytest
from sympy import Matrix

from src.homology.boundary import BoundaryMatrix
from src.homology.snf import normalize_invariant_factors, rank_mod_p, smith_normal_form


def as_sparse(rows):
    n_rows, n_cols = len(rows), len(rows[0]) if rows else 0
    columns = tuple({r: int(rows[r][c]) for r in range(n_rows) if rows[r][c]} for c in range(n_cols))
    return BoundaryMatrix(0, n_rows, n_cols, columns)


def determinantal_factors(rows):
    """Rank and invariant factors from gcds of k x k minors, computed with sympy."""
    m = Matrix(rows)
    rank = m.rank()
    divisors = [1]
    for k in range(1, rank + 1):
        minors = [int(m.extract(list(r), list(c)).det())
                  for r in combinations(range(m.rows), k) for c in combinations(range(m.cols), k)]
        divisors.append(reduce(gcd, (abs(x) for x in minors)))
    factors = [divisors[k] // divisors[k - 1] for k in range(1, rank + 1)]
    return rank, tuple(f for f in factors if f > 1)


def test_normalize_invariant_factors():
    assert normalize_invariant_factors([2, 3]) == (6,)
    assert normalize_invariant_factors([4, 6]) == (2, 12)
    assert normalize_invariant_factors([1, 0, -5]) == (5,)
    assert normalize_invariant_factors([]) == ()


def test_known_smith_form():
    rows = [[12, 6, 4], [3, 9, 6], [2, 16, 14]]
    result = smith_normal_form(as_sparse(rows))
    assert result.rank == 3
    assert result.invariant_factors == (10, 30)


def test_zero_and_empty_matrices():
    assert smith_normal_form(as_sparse([[0, 0], [0, 0]])).rank == 0
    assert smith_normal_form(BoundaryMatrix(0, 0, 3, ({}, {}, {}))).rank == 0
    assert rank_mod_p(BoundaryMatrix(0, 3, 0, ())) == 0


def test_single_entry_torsion():
    result = smith_normal_form(as_sparse([[0, 2], [0, 0]]))
    assert (result.rank, result.invariant_factors) == (1, (2,))


@pytest.mark.parametrize("seed", range(40))
def test_matches_determinantal_divisors(seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    n_rows, n_cols = int(rng.integers(1, 5)), int(rng.integers(1, 6))
    # sparse-ish entries, biased towards non-units so the Euclidean phase runs
    rows = rng.choice([-4, -2, -1, 0, 0, 0, 1, 2, 3, 6], size=(n_rows, n_cols)).tolist()
    result = smith_normal_form(as_sparse(rows))
    assert (result.rank, result.invariant_factors) == determinantal_factors(rows)
    assert rank_mod_p(as_sparse(rows)) == result.rank


def test_large_entries_do_not_overflow():
    big = 2 ** 70
    result = smith_normal_form(as_sparse([[big, 0], [0, 3 * big]]))
    assert result.invariant_factors == (big, 3 * big)

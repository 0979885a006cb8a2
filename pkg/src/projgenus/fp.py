"""Row reduction over the prime field F_p."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = ["DenominatorDivisibleByP", "reduce_mod_p", "row_echelon_mod_p", "rank_mod_p", "in_row_span_mod_p"]


class DenominatorDivisibleByP(ValueError):
    pass


def reduce_mod_p(matrix, p: int) -> np.ndarray:
    """Reduce a matrix of ints or ``Fraction``s with p-coprime denominators."""
    rows = []
    for row in matrix:
        out = []
        for x in row:
            q = Fraction(x)
            if q.denominator % p == 0:
                raise DenominatorDivisibleByP(f"{q} is not p-integral for p={p}")
            out.append(q.numerator * pow(q.denominator, -1, p) % p)
        rows.append(out)
    return np.array(rows, dtype=np.int64).reshape(len(rows), -1)


def row_echelon_mod_p(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``M`` over F_p and its pivot columns."""
    R = np.asarray(M, dtype=np.int64) % p
    R = R.copy()
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        r = row + nz[0]
        if r != row:
            R[[row, r]] = R[[r, row]]
        R[row] = R[row] * pow(int(R[row, col]), -1, p) % p
        others = np.nonzero(R[:, col])[0]
        for r in others:
            if r != row:
                R[r] = (R[r] - R[r, col] * R[row]) % p
        pivots.append(col)
        row += 1
    return R, pivots


def rank_mod_p(M: np.ndarray, p: int) -> int:
    if np.size(M) == 0:
        return 0
    return len(row_echelon_mod_p(M, p)[1])


def in_row_span_mod_p(rows: np.ndarray, v: np.ndarray, p: int) -> bool:
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, np.size(v))
    if not np.any(np.asarray(v) % p):
        return True
    return rank_mod_p(np.vstack([rows, np.reshape(v, (1, -1))]), p) == rank_mod_p(rows, p)

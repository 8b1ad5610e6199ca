"""Exact rational linear algebra: rank and small solves over Fraction matrices."""

from __future__ import annotations

from fractions import Fraction


def rational_rank(rows):
    """Rank of a matrix given as a list of rows of Fractions/ints.

    Plain Gaussian elimination with exact arithmetic; the input is copied.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    row_idx = 0
    for col in range(ncols):
        pivot = None
        for i in range(row_idx, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[row_idx], mat[pivot] = mat[pivot], mat[row_idx]
        prow = mat[row_idx]
        pval = prow[col]
        for i in range(row_idx + 1, len(mat)):
            f = mat[i][col]
            if f == 0:
                continue
            ratio = f / pval
            ri = mat[i]
            for j in range(col, ncols):
                ri[j] -= ratio * prow[j]
        row_idx += 1
        rank += 1
        if row_idx == len(mat):
            break
    return rank


def solve_columns(columns, target):
    """Solve sum_j y_j * columns[j] = target exactly, or return None.

    `columns` is a list of equal-length Fraction sequences; the solution, when
    it exists, is unique only if the columns are independent, which is the
    case everywhere this is used (power-basis embeddings).
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    pivots = []
    row_idx = 0
    for col in range(ncols):
        pivot = None
        for i in range(row_idx, nrows):
            if aug[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        aug[row_idx], aug[pivot] = aug[pivot], aug[row_idx]
        prow = aug[row_idx]
        pval = prow[col]
        for i in range(nrows):
            if i == row_idx:
                continue
            f = aug[i][col]
            if f == 0:
                continue
            ratio = f / pval
            ri = aug[i]
            for j in range(col, ncols + 1):
                ri[j] -= ratio * prow[j]
        pivots.append((row_idx, col))
        row_idx += 1
        if row_idx == nrows:
            break
    # rows below the pivot rows must have vanished entirely for consistency
    for i in range(row_idx, nrows):
        if aug[i][ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for i, col in pivots:
        solution[col] = aug[i][ncols] / aug[i][col]
    return solution

"""Gaussian elimination over a field of ``FieldElement`` values."""

from __future__ import annotations


def row_reduce(rows):
    """Return (echelon rows, pivot columns); input is not modified."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        inv = m[top][col].inverse()
        m[top] = [inv * x for x in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[top])]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(row_reduce(rows)[1])


def solve(matrix, rhs):
    """Solve matrix * x = rhs for a square invertible matrix."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = row_reduce(aug)
    if pivots != list(range(n)):
        raise ArithmeticError("singular linear system")
    return [red[i][n] for i in range(n)]


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]

"""Small exact integer matrices, stored as tuples of row tuples.

Plain Python integers keep every product exact; nothing here ever rounds or
wraps.  Sizes stay at 4x4 so the cofactor determinant is fine.
"""

from __future__ import annotations

Mat = tuple[tuple[int, ...], ...]


def identity(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Mat, b: Mat) -> Mat:
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
        for row in a
    )


def matvec(a: Mat, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def determinant(a: Mat) -> int:
    n = len(a)
    if n == 1:
        return a[0][0]
    total = 0
    for j, entry in enumerate(a[0]):
        if entry == 0:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in a[1:])
        total += (-1) ** j * entry * determinant(minor)
    return total


def unimodular_inverse(a: Mat) -> Mat:
    """Exact inverse of an integer matrix with determinant +-1."""
    det = determinant(a)
    if det not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {det})")
    n = len(a)
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                r[:j] + r[j + 1:] for k, r in enumerate(a) if k != i
            )
            row.append((-1) ** (i + j) * determinant(minor))
        cof.append(tuple(row))
    # adjugate = transpose of cofactors; inverse = adjugate / det = adjugate * det
    return tuple(
        tuple(det * cof[j][i] for j in range(n)) for i in range(n)
    )


def is_identity(a: Mat) -> bool:
    return a == identity(len(a))

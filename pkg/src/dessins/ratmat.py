"""Small dense matrices over the rationals, stored as tuples of tuples of Fraction."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def mat(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(c) for c in r) for r in rows)


def zeros(r: int, c: int) -> Matrix:
    return tuple((Fraction(0),) * c for _ in range(r))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def shape(a: Matrix, cols: int | None = None) -> tuple[int, int]:
    """Rows and columns; ``cols`` disambiguates matrices with no rows."""
    if not a:
        return 0, cols or 0
    return len(a), len(a[0])


def matmul(a: Matrix, b: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """``a @ b``; ``cols`` gives the column count when ``b`` has no rows."""
    if not a:
        return ()
    k = len(a[0])
    if k != len(b):
        raise ValueError(f"cannot multiply {len(a)}x{k} by {len(b)}x?")
    ncols = len(b[0]) if b else (cols or 0)
    out = []
    for row in a:
        acc = [Fraction(0)] * ncols
        for t, c in enumerate(row):
            if c:
                for j, d in enumerate(b[t]):
                    if d:
                        acc[j] += c * d
        out.append(tuple(acc))
    return tuple(out)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(a: Matrix, c) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in r) for r in a)


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for r in a for x in r)


def power(a: Matrix, k: int) -> Matrix:
    out, base = identity(len(a)), a
    while k:
        if k & 1:
            out = matmul(out, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return out


def is_nilpotent(a: Matrix) -> bool:
    return not a or is_zero(power(a, len(a)))


def rank(a: Matrix) -> int:
    rows = [list(r) for r in a]
    if not rows:
        return 0
    r = 0
    for c in range(len(rows[0])):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(r) + list(e) for r, e in zip(a, identity(n))]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(r[n:]) for r in aug)


def random_invertible(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Matrix:
    while True:
        a = mat([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if rank(a) == n:
            return a


def random_nilpotent(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Matrix:
    """Conjugate of a random strictly upper-triangular matrix."""
    u = mat([[rng.randint(lo, hi) if j > i else 0 for j in range(n)] for i in range(n)])
    g = random_invertible(n, rng)
    return matmul(matmul(g, u), inverse(g))


def jordan_nilpotent(partition: Sequence[int]) -> Matrix:
    """Nilpotent in Jordan form with blocks of the given sizes (ones on the superdiagonal)."""
    n = sum(partition)
    rows = [[0] * n for _ in range(n)]
    start = 0
    for size in partition:
        for i in range(start, start + size - 1):
            rows[i][i + 1] = 1
        start += size
    return mat(rows)


def to_strings(a: Matrix) -> list[list[str]]:
    return [[str(x) for x in r] for r in a]


def format_matrix(a: Matrix) -> str:
    if not a:
        return "[]"
    cells = to_strings(a)
    width = max(len(c) for r in cells for c in r)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

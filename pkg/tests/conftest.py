"""Shared brute-force oracles, deliberately independent of the library paths
they check (cofactor expansion instead of Bareiss/Berkowitz, elementary row
products instead of any library routine)."""

import random
from fractions import Fraction

import pytest

from petrie import IntMatrix


def cofactor_det(rows) -> int:
    """Determinant by first-row cofactor expansion (exponential, tiny dims)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[rows[i][c] for c in range(n) if c != j] for i in range(1, n)]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def charpoly_by_cofactor(m: IntMatrix):
    """det(xI - A) over Q[x] computed by cofactor expansion with polynomial
    entries (ascending coefficient tuples)."""

    def padd(a, b):
        k = max(len(a), len(b))
        return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(k))

    def pmul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return tuple(out)

    def pneg(a):
        return tuple(-c for c in a)

    def pdet(mat):
        k = len(mat)
        if k == 0:
            return (1,)
        if k == 1:
            return mat[0][0]
        acc = (0,)
        for j in range(k):
            minor = [[mat[i][c] for c in range(k) if c != j] for i in range(1, k)]
            term = pmul(mat[0][j], pdet(minor))
            acc = padd(acc, term if j % 2 == 0 else pneg(term))
        return acc

    n = m.dim
    entries = [
        [(-m.rows[i][j], 1) if i == j else (-m.rows[i][j],) for j in range(n)]
        for i in range(n)
    ]
    coeffs = pdet(entries)
    # strip trailing zeros
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def random_unimodular(n: int, rng: random.Random, steps: int = 12) -> IntMatrix:
    """Product of elementary integer row operations; determinant +-1."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if op == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            for col in range(n):
                m[i][col] += c * m[j][col]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 2:
            for col in range(n):
                m[i][col] = -m[i][col]
    return IntMatrix.from_rows(m)


def int_inverse_unimodular(u: IntMatrix) -> IntMatrix:
    """Exact integer inverse of a determinant +-1 matrix."""
    n = u.dim
    aug = [[Fraction(u.rows[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [aug[i][k] - f * aug[c][k] for k in range(2 * n)]
    rows = [[aug[i][n + j] for j in range(n)] for i in range(n)]
    assert all(v.denominator == 1 for r in rows for v in r)
    return IntMatrix.from_rows([[int(v) for v in r] for r in rows])


@pytest.fixture
def rng():
    return random.Random(20260810)

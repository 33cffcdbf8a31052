"""Exact dense linear algebra over big integers, rationals, Q[x], and GF(2).

Everything here is exact: integer matrices use Python big integers, rational
work uses ``fractions.Fraction``, and GF(2) matrices use 0/1 arrays.  The two
machine-word kernels (Bareiss determinant, Berkowitz characteristic
polynomial) are only taken when a proven overflow bound holds; otherwise the
same algorithms run on big integers.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DegreeMismatchError, SingularMatrixError

# --------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix with arbitrary-precision integer entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in self.rows))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def max_abs(self) -> int:
        return max((abs(v) for r in self.rows for v in r), default=0)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def to_q(self) -> "QMatrix":
        return QMatrix(tuple(tuple(Fraction(v) for v in r) for r in self.rows))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        width = max((len(str(v)) for r in self.rows for v in r), default=1)
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)


@dataclass(frozen=True)
class QMatrix:
    """Immutable square matrix with exact rational entries."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", tuple(tuple(Fraction(v) for v in r) for r in self.rows))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "QMatrix":
        return cls(tuple(tuple(Fraction(v) for v in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for r in self.rows for v in r)

    def to_int(self) -> IntMatrix:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return IntMatrix(tuple(tuple(int(v) for v in r) for r in self.rows))

    def to_json(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "QMatrix":
        return cls(tuple(tuple(Fraction(s) for s in r) for r in data))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product of two integer matrices."""
    if a.dim != b.dim:
        raise DegreeMismatchError(f"dims {a.dim} and {b.dim}")
    n = a.dim
    bt = list(zip(*b.rows))
    return IntMatrix(
        tuple(tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a.rows)
    )


def q_mat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    if a.dim != b.dim:
        raise DegreeMismatchError(f"dims {a.dim} and {b.dim}")
    n = a.dim
    bt = list(zip(*b.rows))
    return QMatrix(
        tuple(tuple(sum((ra[k] * cb[k] for k in range(n)), Fraction(0)) for cb in bt) for ra in a.rows)
    )


def q_det(a: QMatrix) -> Fraction:
    """Determinant over Q by fraction Gaussian elimination."""
    n = a.dim
    m = [list(r) for r in a.rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / inv
                m[i] = [m[i][j] - f * m[c][j] for j in range(n)]
    return det


def q_inverse(a: QMatrix) -> QMatrix:
    """Exact inverse over Q; raises SingularMatrixError when det = 0."""
    n = a.dim
    m = [list(r) + [Fraction(1 if i == j else 0) for j in range(n)] for i, r in enumerate(a.rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular over Q")
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [m[i][j] - f * m[c][j] for j in range(2 * n)]
    return QMatrix(tuple(tuple(row[n:]) for row in m))


def q_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Row rank over Q of a (possibly non-square) list of rows."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        for i in range(rank + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / pv
                m[i] = [m[i][j] - f * m[rank][j] for j in range(ncols)]
        rank += 1
        if rank == len(m):
            break
    return rank


@dataclass(frozen=True)
class GF2Matrix:
    """Square 0/1 matrix over the two-element field."""

    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.bits)
        if any(len(r) != n for r in self.bits):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "bits", tuple(tuple(int(v) & 1 for v in r) for r in self.bits))

    @classmethod
    def from_int_matrix(cls, a: IntMatrix) -> "GF2Matrix":
        return cls(tuple(tuple(v % 2 for v in r) for r in a.rows))

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.bits)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.int64)


def gf2_mul(a: GF2Matrix, b: GF2Matrix) -> GF2Matrix:
    """Exact product over GF(2)."""
    if a.dim != b.dim:
        raise DegreeMismatchError(f"dims {a.dim} and {b.dim}")
    prod = kernels.gf2_matmul(a.to_numpy(), b.to_numpy())
    return GF2Matrix(tuple(tuple(int(v) for v in row) for row in prod))


# --------------------------------------------------------------------------
# polynomials


def _format_poly(desc: Sequence, unit) -> str:
    """Shared pretty-printer: descending powers, unit coefficients omitted."""
    deg = len(desc) - 1
    if all(c == 0 for c in desc):
        return "0"
    parts = []
    for i, c in enumerate(desc):
        if c == 0:
            continue
        power = deg - i
        mag = -c if c < 0 else c
        if power == 0:
            body = str(mag)
        else:
            xs = "x" if power == 1 else f"x^{power}"
            if mag == unit:
                body = xs
            elif isinstance(mag, Fraction) and mag.denominator != 1:
                body = f"({mag}){xs}"
            else:
                body = f"{mag}{xs}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        if not c:
            c = (0,)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __call__(self, v: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def to_rat(self) -> "RatPoly":
        return RatPoly(tuple(Fraction(c) for c in self.coeffs))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        return _format_poly(list(reversed(self.coeffs)), 1)


@dataclass(frozen=True)
class RatPoly:
    """Dense rational polynomial, coefficients lowest degree first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        if not c:
            c = (Fraction(0),)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_ints(cls, coeffs: Iterable[int]) -> "RatPoly":
        return cls(tuple(Fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return RatPoly(tuple(c / lead for c in self.coeffs))

    def mul(self, other: "RatPoly") -> "RatPoly":
        return RatPoly(_pmul(self.coeffs, other.coeffs))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        return _format_poly(list(reversed(self.coeffs)), Fraction(1))


# private tuple-of-Fraction polynomial arithmetic (ascending, normalized)

_PZERO = (Fraction(0),)


def _pnorm(c):
    c = tuple(c)
    while len(c) > 1 and c[-1] == 0:
        c = c[:-1]
    return c if c else _PZERO


def _pis_zero(a) -> bool:
    return len(a) == 1 and a[0] == 0


def _pdeg(a) -> int:
    return len(a) - 1


def _padd(a, b):
    n = max(len(a), len(b))
    return _pnorm(
        tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))
    )


def _psub(a, b):
    n = max(len(a), len(b))
    return _pnorm(
        tuple((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))
    )


def _pmul(a, b):
    if _pis_zero(a) or _pis_zero(b):
        return _PZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _pnorm(out)


def _pdivmod(a, b):
    """Polynomial division with remainder over Q."""
    if _pis_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    db, lead = _pdeg(b), b[-1]
    while not _pis_zero(tuple(r)) and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        f = r[-1] / lead
        q[shift] = f
        for i in range(len(b)):
            r[shift + i] -= f * b[i]
        while len(r) > 1 and r[-1] == 0:
            r.pop()
    return _pnorm(q), _pnorm(r)


def _pmonic(a):
    if _pis_zero(a):
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


# --------------------------------------------------------------------------
# determinant / trace / characteristic polynomial


def _det_bareiss_big(rows: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination on Python big integers."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def _berkowitz_big(rows: Sequence[Sequence[int]]) -> list[int]:
    """Division-free Berkowitz recursion on Python big integers (descending)."""
    n = len(rows)
    c = [1]
    for r in range(1, n + 1):
        col = [1, -rows[r - 1][r - 1]]
        v = [rows[i][r - 1] for i in range(r - 1)]
        for _ in range(r - 1):
            col.append(-sum(rows[r - 1][i] * v[i] for i in range(r - 1)))
            v = [sum(rows[i][k] * v[k] for k in range(r - 1)) for i in range(r - 1)]
        c = [
            sum(col[i - j] * c[j] for j in range(max(0, i - len(col) + 1), min(i, len(c) - 1) + 1))
            for i in range(r + 1)
        ]
    return c


def det(a: IntMatrix) -> int:
    """Exact determinant (Bareiss fraction-free elimination)."""
    if kernels.det_fits64(a.dim, a.max_abs()):
        return kernels.det64(a.to_numpy())
    return _det_bareiss_big([list(r) for r in a.rows])


def trace(a: IntMatrix) -> int:
    """Sum of the diagonal entries."""
    return sum(a.rows[i][i] for i in range(a.dim))


def charpoly(a: IntMatrix) -> IntPoly:
    """Monic characteristic polynomial det(xI - A), division-free (Berkowitz)."""
    if kernels.charpoly_fits64(a.dim, a.max_abs()):
        desc = [int(v) for v in kernels.charpoly64(a.to_numpy())]
    else:
        desc = _berkowitz_big(a.rows)
    return IntPoly(tuple(reversed(desc)))


# --------------------------------------------------------------------------
# invariant factors, minimal polynomial, similarity over Q


def _smith_qx(mat: list[list[tuple]]) -> list[tuple]:
    """Smith reduction of a square polynomial matrix over Q[x].

    Returns the monic diagonal, each entry dividing the next.  Classic
    Euclidean pivoting: pick a minimal-degree nonzero entry, clear its row
    and column by division with remainder, then enforce that the pivot
    divides every remaining entry before moving on.
    """
    n = len(mat)
    diag = []
    p = 0
    while p < n:
        best = None
        for i in range(p, n):
            for j in range(p, n):
                if not _pis_zero(mat[i][j]):
                    d = _pdeg(mat[i][j])
                    if best is None or d < best[0]:
                        best = (d, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != p:
            mat[p], mat[bi] = mat[bi], mat[p]
        if bj != p:
            for row in mat:
                row[p], row[bj] = row[bj], row[p]

        dirty = False
        for i in range(p + 1, n):
            if not _pis_zero(mat[i][p]):
                q, r = _pdivmod(mat[i][p], mat[p][p])
                mat[i] = [_psub(mat[i][j], _pmul(q, mat[p][j])) for j in range(n)]
                if not _pis_zero(r):
                    dirty = True
        for j in range(p + 1, n):
            if not _pis_zero(mat[p][j]):
                q, r = _pdivmod(mat[p][j], mat[p][p])
                for i in range(n):
                    mat[i][j] = _psub(mat[i][j], _pmul(q, mat[i][p]))
                if not _pis_zero(r):
                    dirty = True
        if dirty:
            continue

        offending = None
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                _, r = _pdivmod(mat[i][j], mat[p][p])
                if not _pis_zero(r):
                    offending = i
                    break
            if offending is not None:
                break
        if offending is not None:
            mat[p] = [_padd(mat[p][k], mat[offending][k]) for k in range(n)]
            continue

        diag.append(_pmonic(mat[p][p]))
        p += 1
    while len(diag) < n:
        diag.append(_PZERO)
    return diag


def _char_matrix(a: IntMatrix) -> list[list[tuple]]:
    """xI - A as a matrix of ascending rational coefficient tuples."""
    n = a.dim
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(_pnorm((Fraction(-a.rows[i][j]), Fraction(1))))
            else:
                row.append(_pnorm((Fraction(-a.rows[i][j]),)))
        out.append(row)
    return out


def invariant_factors(a: IntMatrix) -> list[RatPoly]:
    """Nonunit invariant factors of xI - A over Q[x], each dividing the next.

    Their product is the characteristic polynomial and the last one is the
    minimal polynomial; equality of the lists decides similarity over Q.
    """
    diag = _smith_qx(_char_matrix(a))
    return [RatPoly(d) for d in diag if _pdeg(d) >= 1]


def minpoly(a: IntMatrix) -> RatPoly:
    """Monic minimal polynomial over Q (largest invariant factor)."""
    facs = invariant_factors(a)
    if not facs:
        return RatPoly((Fraction(1),))
    return facs[-1]


def similar(a: IntMatrix, b: IntMatrix) -> bool:
    """Similarity over Q: equal invariant-factor lists.

    Equal characteristic polynomials are necessary, so that cheap exact
    comparison gates the Smith reduction.
    """
    if a.dim != b.dim:
        raise DegreeMismatchError(f"dims {a.dim} and {b.dim}")
    if charpoly(a) != charpoly(b):
        return False
    return invariant_factors(a) == invariant_factors(b)


# --------------------------------------------------------------------------
# rational linear solve (row-vector convention)


def solve_rational(a: IntMatrix, b: Sequence) -> tuple[Fraction, ...]:
    """Exact x with x·A = b (vectors multiply from the left).

    Raises SingularMatrixError when A is singular over Q.
    """
    n = a.dim
    if len(b) != n:
        raise DegreeMismatchError(f"vector length {len(b)} vs dim {n}")
    # x.A = b is A^T x^T = b^T
    m = [[Fraction(a.rows[j][i]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular over Q")
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [m[r][j] - f * m[c][j] for j in range(n + 1)]
    return tuple(m[i][n] for i in range(n))


def is_invertible_q(a: IntMatrix) -> bool:
    """True iff det(A) is nonzero."""
    return det(a) != 0

"""Transition matrices of interval linearizations.

A map f on {1..n} with no equal values at consecutive points sends the unit
interval J_i = [i, i+1] onto the run of intervals between f(i) and f(i+1).
Collecting those covers row by row yields an (n-1) x (n-1) zero-one matrix
whose ones are consecutive in every row; the row-vector action v -> v*M is
the induced linear map on the span of the J_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegreeMismatchError
from .exact import GF2Matrix, IntMatrix, QMatrix, q_det
from .perms import Permutation, PointMap


def petrie_matrix(f: PointMap) -> IntMatrix:
    """The transition matrix M_f: row i covers columns min(f(i), f(i+1)) ..
    max(f(i), f(i+1)) - 1."""
    n = f.degree
    if n < 2:
        raise ValueError("degree must be at least 2 (a 1x1 matrix needs two points)")
    imgs = f.images
    rows = []
    for i in range(n - 1):
        a, b = imgs[i], imgs[i + 1]
        lo, hi = (a, b) if a < b else (b, a)
        rows.append(tuple(1 if lo <= j <= hi - 1 else 0 for j in range(1, n)))
    return IntMatrix(tuple(rows))


def petrie_matrix_gf2(f: PointMap) -> GF2Matrix:
    """The transition matrix reduced mod 2 (it is already 0/1)."""
    return GF2Matrix.from_int_matrix(petrie_matrix(f))


def is_petrie(a: IntMatrix) -> bool:
    """True iff entries are 0/1 and the ones in each row are consecutive."""
    for row in a.rows:
        if any(v not in (0, 1) for v in row):
            return False
        ones = [j for j, v in enumerate(row) if v == 1]
        if ones and ones[-1] - ones[0] + 1 != len(ones):
            return False
    return True


@dataclass(frozen=True)
class IntervalVector:
    """A vector in the span of the unit intervals J_1..J_m, exact coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(v) for v in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: "IntervalVector") -> "IntervalVector":
        if self.dim != other.dim:
            raise DegreeMismatchError(f"dims {self.dim} and {other.dim}")
        return IntervalVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "IntervalVector") -> "IntervalVector":
        if self.dim != other.dim:
            raise DegreeMismatchError(f"dims {self.dim} and {other.dim}")
        return IntervalVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)


def unit_interval(i: int, m: int) -> IntervalVector:
    """J_i as a coordinate vector in dimension m."""
    if not 1 <= i <= m:
        raise ValueError(f"index {i} outside 1..{m}")
    return IntervalVector(tuple(Fraction(1 if j == i else 0) for j in range(1, m + 1)))


def interval_element(j: int, k: int, m: int) -> IntervalVector:
    """The element [j, k] = J_j + J_{j+1} + ... + J_{k-1} in dimension m."""
    if not 1 <= j < k <= m + 1:
        raise ValueError(f"need 1 <= j < k <= {m + 1}, got j={j}, k={k}")
    return IntervalVector(tuple(Fraction(1 if j <= i <= k - 1 else 0) for i in range(1, m + 1)))


def interval_between(a: int, b: int, m: int) -> IntervalVector:
    """The interval element with unordered endpoints a and b."""
    lo, hi = (a, b) if a < b else (b, a)
    return interval_element(lo, hi, m)


def phi_apply(f: PointMap, v: IntervalVector) -> IntervalVector:
    """The induced linear action: the row-vector product v * M_f."""
    m = petrie_matrix(f)
    if v.dim != m.dim:
        raise DegreeMismatchError(f"vector dim {v.dim} vs matrix dim {m.dim}")
    return phi_apply_matrix(m, v)


def phi_apply_matrix(m: IntMatrix, v: IntervalVector) -> IntervalVector:
    if v.dim != m.dim:
        raise DegreeMismatchError(f"vector dim {v.dim} vs matrix dim {m.dim}")
    n = m.dim
    return IntervalVector(
        tuple(sum((v.coords[i] * m.rows[i][j] for i in range(n)), Fraction(0)) for j in range(n))
    )


@dataclass(frozen=True)
class BasisMatrix:
    """Rows of interval vectors stacked into a square matrix M(V|B)."""

    vectors: tuple[IntervalVector, ...]

    def __post_init__(self):
        vecs = tuple(self.vectors)
        if not vecs:
            raise ValueError("empty vector list")
        dim = vecs[0].dim
        if any(v.dim != dim for v in vecs):
            raise DegreeMismatchError("vectors of unequal dimension")
        if len(vecs) != dim:
            raise DegreeMismatchError(f"{len(vecs)} vectors in dimension {dim}")
        object.__setattr__(self, "vectors", vecs)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def matrix(self) -> QMatrix:
        return QMatrix(tuple(v.coords for v in self.vectors))

    def as_int_matrix(self) -> IntMatrix:
        """Integer view; raises when any coordinate is a proper fraction."""
        return self.matrix.to_int()

    def determinant(self) -> Fraction:
        return q_det(self.matrix)

    def is_basis(self) -> bool:
        return self.determinant() != 0


def basis_matrix(vectors: Iterable[IntervalVector]) -> BasisMatrix:
    """Stack interval vectors as the rows of M(V|B)."""
    return BasisMatrix(tuple(vectors))


def reversal_matrix(n: int) -> IntMatrix:
    """The anti-diagonal 0/1 matrix; conjugating by it mirrors the interval order."""
    return IntMatrix(tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n)))


def export_digraph(f: PointMap) -> str:
    """DOT text of the covering digraph: an edge J_i -> J_j iff M[i][j] = 1."""
    m = petrie_matrix(f)
    lines = ["digraph transition {"]
    for i in range(1, m.dim + 1):
        lines.append(f"  J{i};")
    for i in range(m.dim):
        for j in range(m.dim):
            if m.rows[i][j]:
                lines.append(f"  J{i + 1} -> J{j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"

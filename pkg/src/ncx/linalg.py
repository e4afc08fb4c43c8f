"""Small exact linear algebra over a division ring.

Matrices act on column vectors from the left; scalars act on columns from
the right. Factor order is kept exactly as written everywhere, so the same
code is correct over the quaternions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from gmpy2 import mpq

from .errors import DimensionError, Singular
from .scalars import inv, is_zero, one_like, zero_like


@dataclass(frozen=True)
class Vec2:
    """A column vector (x1, x2) in F^2."""

    x1: object
    x2: object

    def __iter__(self):
        yield self.x1
        yield self.x2

    def scale(self, lam) -> "Vec2":
        """Right scalar multiplication ``v * lam``."""
        return Vec2(self.x1 * lam, self.x2 * lam)

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x1 - other.x1, self.x2 - other.x2)

    def is_zero(self) -> bool:
        return is_zero(self.x1) and is_zero(self.x2)


@dataclass(frozen=True)
class Mat2:
    a11: object
    a12: object
    a21: object
    a22: object

    @classmethod
    def from_columns(cls, c1: Vec2, c2: Vec2) -> "Mat2":
        return cls(c1.x1, c2.x1, c1.x2, c2.x2)

    @classmethod
    def identity(cls, like=1) -> "Mat2":
        one, zero = one_like(like), zero_like(like)
        return cls(one, zero, zero, one)

    @classmethod
    def diag(cls, d1, d2) -> "Mat2":
        zero = zero_like(d1)
        return cls(d1, zero, zero, d2)

    def entry(self, r: int, c: int):
        return (self.a11, self.a12, self.a21, self.a22)[2 * (r - 1) + (c - 1)]

    def columns(self) -> tuple[Vec2, Vec2]:
        return Vec2(self.a11, self.a21), Vec2(self.a12, self.a22)

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a11 * other.a11 + self.a12 * other.a21,
                self.a11 * other.a12 + self.a12 * other.a22,
                self.a21 * other.a11 + self.a22 * other.a21,
                self.a21 * other.a12 + self.a22 * other.a22,
            )
        if isinstance(other, Vec2):
            return Vec2(
                self.a11 * other.x1 + self.a12 * other.x2,
                self.a21 * other.x1 + self.a22 * other.x2,
            )
        if isinstance(other, Mat2xN):
            return mat_mul(self, other)
        return NotImplemented

    def is_identity(self) -> bool:
        return (
            self.a11 == 1 and self.a22 == 1 and is_zero(self.a12) and is_zero(self.a21)
        )


class Mat2xN:
    """A 2 x n matrix stored as a tuple of labeled columns.

    Columns are addressed either by 0-based position or by label.
    """

    __slots__ = ("columns", "labels")

    def __init__(self, columns: Sequence[Vec2], labels: Optional[Sequence[str]] = None):
        columns = tuple(columns)
        if len(columns) < 2:
            raise DimensionError("a 2 x n matrix needs n >= 2 columns")
        if labels is None:
            labels = tuple(str(i + 1) for i in range(len(columns)))
        labels = tuple(labels)
        if len(labels) != len(columns):
            raise DimensionError("one label per column required")
        if len(set(labels)) != len(labels):
            raise DimensionError(f"duplicate column labels {labels}")
        self.columns = columns
        self.labels = labels

    @classmethod
    def from_rows(cls, row1, row2, labels=None) -> "Mat2xN":
        if len(row1) != len(row2):
            raise DimensionError("rows of unequal length")
        return cls([Vec2(a, b) for a, b in zip(row1, row2)], labels)

    @property
    def n(self) -> int:
        return len(self.columns)

    def index(self, key) -> int:
        if isinstance(key, int):
            if not 0 <= key < self.n:
                raise DimensionError(f"column index {key} out of range")
            return key
        try:
            return self.labels.index(key)
        except ValueError:
            raise DimensionError(f"no column labeled {key!r}") from None

    def col(self, key) -> Vec2:
        return self.columns[self.index(key)]

    def entry(self, r: int, key):
        """a_{r,i} with r in {1, 2}."""
        v = self.col(key)
        return v.x1 if r == 1 else v.x2

    def rows(self):
        return [c.x1 for c in self.columns], [c.x2 for c in self.columns]

    def __eq__(self, other):
        return isinstance(other, Mat2xN) and self.columns == other.columns

    def __hash__(self):
        return hash(self.columns)

    def __repr__(self):
        r1, r2 = self.rows()
        return f"Mat2xN({r1!r}, {r2!r}, labels={self.labels!r})"


def mat_mul(g: Mat2, A: Mat2xN) -> Mat2xN:
    """Left action ``g . A``."""
    return Mat2xN([g @ c for c in A.columns], A.labels)


def col_scale(A: Mat2xN, lams: Sequence) -> Mat2xN:
    """Right action ``A . diag(lams)``: column i becomes ``a_i * lam_i``."""
    if len(lams) != A.n:
        raise DimensionError(f"need {A.n} scale factors, got {len(lams)}")
    return Mat2xN([c.scale(lam) for c, lam in zip(A.columns, lams)], A.labels)


def mat2_inverse(g: Mat2) -> Mat2:
    """Two-sided inverse by Gauss-Jordan elimination with left row operations.

    Raises Singular when no pivot is available, i.e. when the second column
    is a right multiple of the first.
    """
    one, zero = one_like(g.a11), zero_like(g.a11)
    # augmented rows [m1 m2 | e1 e2]
    r1 = [g.a11, g.a12, one, zero]
    r2 = [g.a21, g.a22, zero, one]
    if is_zero(r1[0]):
        if is_zero(r2[0]):
            raise Singular("first column is zero")
        r1, r2 = r2, r1
    p = inv(r1[0])
    r1 = [p * e for e in r1]
    f = r2[0]
    r2 = [e2 - f * e1 for e1, e2 in zip(r1, r2)]
    if is_zero(r2[1]):
        raise Singular("columns are left-dependent")
    p = inv(r2[1])
    r2 = [p * e for e in r2]
    f = r1[1]
    r1 = [e1 - f * e2 for e1, e2 in zip(r1, r2)]
    return Mat2(r1[2], r1[3], r2[2], r2[3])


def is_invertible(g: Mat2) -> bool:
    try:
        mat2_inverse(g)
    except Singular:
        return False
    return True


def rational_kernel(M: Sequence[Sequence]) -> Optional[tuple]:
    """A nonzero rational kernel vector of a square matrix, or None.

    Only meant for commutative (rational) entries. Deterministic: after
    reduction to row echelon form the first free column is set to 1 and
    all other free columns to 0.
    """
    rows = [[mpq(e) for e in row] for row in M]
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [e / pv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    v = [mpq(0)] * n
    v[free[0]] = mpq(1)
    for i, c in enumerate(pivots):
        v[c] = -rows[i][free[0]]
    return tuple(v)

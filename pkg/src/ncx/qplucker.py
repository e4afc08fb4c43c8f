"""Quasi-Pluecker coordinates of 2 x n matrices.

``qp(A, i, j, k)`` is the coordinate written q^k_{ij}: the inverse of the
quasideterminant of columns (k, i) boxed at column i, times the one of
columns (k, j) boxed at column j. The box can sit in row 1 or in row 2; the
two choices give the same value whenever both are defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import Undefined
from .linalg import Mat2, Mat2xN
from .quasidet import quasidet
from .scalars import inv, is_zero


class QPIndex(NamedTuple):
    i: object
    j: object
    k: object

    def render(self, A: Mat2xN | None = None) -> str:
        lab = (lambda c: A.labels[A.index(c)]) if A is not None else str
        return f"q^{lab(self.k)}_{{{lab(self.i)}{lab(self.j)}}}"


def _pair(A: Mat2xN, k: int, i: int) -> Mat2:
    return Mat2.from_columns(A.columns[k], A.columns[i])


def _expr(A: Mat2xN, i: int, j: int, k: int, row: int):
    """One of the two expressions; raises Undefined with blame."""
    pos = (row, 2)
    name = QPIndex(i, j, k).render(A)
    try:
        di = quasidet(_pair(A, k, i), pos)
    except Undefined as exc:
        raise Undefined(
            f"{name}: {exc.blame} (columns {A.labels[k]},{A.labels[i]})", pos
        ) from None
    if is_zero(di):
        raise Undefined(
            f"{name}: quasidet box ({row},2) of columns "
            f"({A.labels[k]},{A.labels[i]}) is zero and cannot be inverted",
            pos,
        )
    dj = quasidet(_pair(A, k, j), pos)
    return inv(di) * dj


def qp_row(A: Mat2xN, i, j, k, row: int):
    """Evaluate q^k_{ij} using only the row-``row`` boxed expression."""
    i, j, k = A.index(i), A.index(j), A.index(k)
    if i == k:
        raise ValueError("quasi-Pluecker coordinates need i != k")
    return _expr(A, i, j, k, row)


def qp(A: Mat2xN, i, j, k):
    """q^k_{ij}(A). Row 1 is the primary path; row 2 is the fallback."""
    i, j, k = A.index(i), A.index(j), A.index(k)
    if i == k:
        raise ValueError("quasi-Pluecker coordinates need i != k")
    try:
        return _expr(A, i, j, k, 1)
    except Undefined as first:
        if first.position != (1, 2) or not is_zero(A.columns[k].x2):
            raise
    try:
        return _expr(A, i, j, k, 2)
    except Undefined as second:
        raise Undefined(f"{first.blame}; fallback failed: {second.blame}", (2, 2)) from None


@dataclass(frozen=True)
class PairReport:
    index: QPIndex
    row1: object
    row2: object

    @property
    def equal(self) -> bool:
        return self.row1 == self.row2


def qp_pair_check(A: Mat2xN, i, j, k) -> PairReport:
    """Evaluate both expressions of q^k_{ij} and report whether they agree."""
    r1 = qp_row(A, i, j, k, 1)
    r2 = qp_row(A, i, j, k, 2)
    return PairReport(QPIndex(A.index(i), A.index(j), A.index(k)), r1, r2)

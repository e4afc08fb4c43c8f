"""The four quasideterminants of a 2x2 matrix over a division ring."""

from __future__ import annotations

from typing import NamedTuple

from .errors import Undefined
from .linalg import Mat2
from .scalars import inv, is_zero


class BoxPosition(NamedTuple):
    row: int
    col: int


POSITIONS = (BoxPosition(1, 1), BoxPosition(1, 2), BoxPosition(2, 1), BoxPosition(2, 2))


def _undefined(pos) -> Undefined:
    r, c = pos
    return Undefined(
        f"quasidet box ({r},{c}): opposite entry a{3 - r}{3 - c} is zero",
        position=BoxPosition(r, c),
    )


# Each position is written out on its own; no position is derived from
# another by symmetry.


def _qd11(m: Mat2):
    if is_zero(m.a22):
        raise _undefined((1, 1))
    return m.a11 - m.a12 * inv(m.a22) * m.a21


def _qd12(m: Mat2):
    if is_zero(m.a21):
        raise _undefined((1, 2))
    return m.a12 - m.a11 * inv(m.a21) * m.a22


def _qd21(m: Mat2):
    if is_zero(m.a12):
        raise _undefined((2, 1))
    return m.a21 - m.a22 * inv(m.a12) * m.a11


def _qd22(m: Mat2):
    if is_zero(m.a11):
        raise _undefined((2, 2))
    return m.a22 - m.a21 * inv(m.a11) * m.a12


_DISPATCH = {(1, 1): _qd11, (1, 2): _qd12, (2, 1): _qd21, (2, 2): _qd22}


def quasidet(m: Mat2, pos) -> object:
    """Quasideterminant of ``m`` with the entry at ``pos = (row, col)`` boxed.

    The boxed entry minus (boxed row, other column) times the inverse of the
    opposite corner times (other row, boxed column). Raises Undefined when
    the opposite corner is zero.
    """
    try:
        fn = _DISPATCH[tuple(pos)]
    except KeyError:
        raise ValueError(f"box position must be in {{1,2}}x{{1,2}}, got {pos!r}") from None
    return fn(m)


def all_quasidets(m: Mat2) -> dict:
    """Map each position to its value, or to the Undefined error raised."""
    out = {}
    for pos in POSITIONS:
        try:
            out[pos] = quasidet(m, pos)
        except Undefined as exc:
            out[pos] = exc
    return out

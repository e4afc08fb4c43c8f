"""Deterministic seeded sampling of exact scalars, matrices and tuples.

The stream is splitmix64, so it is reproducible in any language::

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output z ^ (z >> 31)

Bounded integers in [lo, hi] use rejection sampling on the 64-bit output
(reject draws >= 2^64 - (2^64 mod n), then take ``lo + r mod n``). A
rational is numerator in [-B, B] over denominator in [1, B]; a quaternion
is four independent rationals.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Callable, Optional

from gmpy2 import mpq

from .crossratio import FourTuple, cross_ratio, cross_ratio_via_system, reduce_by_zt
from .errors import NCXError, ResampleExhausted
from .linalg import Mat2, Mat2xN, Vec2, is_invertible
from .quasidet import quasidet
from .scalars import Quaternion, is_zero

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> tuple[int, int]:
    """One step: returns ``(new_state, output)``."""
    state = (state + GOLDEN) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def derive_seed(seed: int, name: str) -> int:
    """Stable per-suite / per-shard seed (independent of PYTHONHASHSEED)."""
    digest = hashlib.sha256(f"{seed & MASK64}:{name}".encode()).digest()
    return int.from_bytes(digest[:8], "little")


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    bound: int = 5
    max_attempts: int = 1000
    ring: str = "quaternion"

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("bound must be positive")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be positive")
        if self.ring not in ("quaternion", "rational"):
            raise ValueError(f"unknown ring {self.ring!r}")


class Gen:
    """A single-threaded sample stream. Equal configs give equal streams."""

    def __init__(self, cfg: GenConfig):
        self.cfg = cfg
        self._state = cfg.seed & MASK64
        self.draws = 0
        self.rejections = 0

    def next_u64(self) -> int:
        self._state, out = splitmix64(self._state)
        return out

    def randint(self, lo: int, hi: int) -> int:
        n = hi - lo + 1
        if n <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return lo + r % n

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def rational(self):
        B = self.cfg.bound
        return mpq(self.randint(-B, B), self.randint(1, B))

    def scalar(self):
        if self.cfg.ring == "rational":
            return self.rational()
        return Quaternion._raw(self.rational(), self.rational(), self.rational(), self.rational())

    def nonzero_scalar(self):
        return self.regular(self.scalar, lambda s: not is_zero(s))

    def vec2(self) -> Vec2:
        return Vec2(self.scalar(), self.scalar())

    def mat2(self) -> Mat2:
        return Mat2(self.scalar(), self.scalar(), self.scalar(), self.scalar())

    def invertible_mat2(self) -> Mat2:
        return self.regular(self.mat2, is_invertible)

    def mat2xn(self, n: int, labels=None) -> Mat2xN:
        return Mat2xN([self.vec2() for _ in range(n)], labels)

    def four_tuple(self) -> FourTuple:
        return FourTuple(self.vec2(), self.vec2(), self.vec2(), self.vec2())

    def regular(self, draw: Callable, predicate: Callable):
        """Draw until ``predicate`` accepts; ResampleExhausted past the budget."""
        for _ in range(self.cfg.max_attempts):
            self.draws += 1
            sample = draw()
            if predicate(sample):
                return sample
            self.rejections += 1
        raise ResampleExhausted(
            f"no regular sample in {self.cfg.max_attempts} attempts "
            f"(bound {self.cfg.bound}, ring {self.cfg.ring})"
        )

    def regular_matrix(self, n: int = 4, labels=None) -> Mat2xN:
        return self.regular(lambda: self.mat2xn(n, labels), is_regular_matrix)

    def regular_tuple(self, predicate: Optional[Callable] = None) -> FourTuple:
        return self.regular(self.four_tuple, predicate or is_regular_tuple)


# -- regularity predicates (pure) ----------------------------------------------


def _defined(fn, *args) -> bool:
    try:
        fn(*args)
    except NCXError:
        return False
    return True


def is_regular_matrix(A: Mat2xN) -> bool:
    """Every entry nonzero and every pair of columns independent.

    Then every quasideterminant and quasi-Pluecker coordinate of A with
    distinct column indices is defined and nonzero.
    """
    cols = A.columns
    for c in cols:
        if is_zero(c.x1) or is_zero(c.x2):
            return False
    for a in range(len(cols)):
        for b in range(a + 1, len(cols)):
            if is_zero(quasidet(Mat2.from_columns(cols[a], cols[b]), (1, 2))):
                return False
    return True


def is_regular_tuple(T: FourTuple) -> bool:
    return is_regular_matrix(T.matrix())


def has_nonzero_coordinates(T: FourTuple) -> bool:
    return all(not is_zero(c) for v in T for c in v)


def system_predicate(T: FourTuple) -> bool:
    """All eight coordinates nonzero and the defining system solvable."""
    return has_nonzero_coordinates(T) and _defined(cross_ratio_via_system, T)


def orbit_predicate(T: FourTuple) -> bool:
    """kappa defined and not in {0, 1}, and the (z, t)-reduction has no zero entry."""
    if not is_regular_tuple(T):
        return False
    try:
        k = cross_ratio(T)
        _, R = reduce_by_zt(T)
    except NCXError:
        return False
    if is_zero(k) or k == 1:
        return False
    return not any(is_zero(c) for v in (R.x, R.y) for c in v)


PREDICATES = {
    "regular": is_regular_tuple,
    "system": system_predicate,
    "orbit": orbit_predicate,
}

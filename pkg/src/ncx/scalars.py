"""Exact scalars: rationals and rational quaternions.

Both instances satisfy the same small division-ring contract used by the
rest of the package: ``+``, ``-``, ``*``, ``==``, plus the module-level
helpers :func:`inv`, :func:`is_zero`, :func:`zero_like` and :func:`one_like`.
Nothing else is assumed, in particular not commutativity.

Rationals are ``gmpy2.mpq`` values, which are always stored reduced with a
positive denominator, so equality is structural.
"""

from __future__ import annotations

from numbers import Rational as _RationalABC
from typing import Protocol, Union

from gmpy2 import mpq

from .errors import ZeroInverse

Rational = type(mpq())


def _q(x) -> Rational:
    if type(x) is Rational:
        return x
    if isinstance(x, _RationalABC):
        # Fractions built from mpq carry mpz parts that mpq() rejects
        return mpq(int(x.numerator), int(x.denominator))
    return mpq(x)


def rat(num, den=1) -> Rational:
    """Build an exact rational; accepts ints, Fractions, strings like '3/4'."""
    if isinstance(num, str):
        return mpq(num) if den == 1 else mpq(num) / mpq(den)
    if den == 0:
        raise ZeroInverse("rational with zero denominator")
    if den == 1:
        return _q(num)
    return _q(num) / _q(den)


class DivisionRing(Protocol):
    def __add__(self, other): ...
    def __sub__(self, other): ...
    def __mul__(self, other): ...
    def __neg__(self): ...
    def __eq__(self, other) -> bool: ...




class Quaternion:
    """The rational quaternion ``a + b i + c j + d k``.

    Immutable. Multiplication is the Hamilton product and does not commute.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _q(a))
        object.__setattr__(self, "b", _q(b))
        object.__setattr__(self, "c", _q(c))
        object.__setattr__(self, "d", _q(d))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def _raw(cls, a, b, c, d) -> "Quaternion":
        # skips coercion; arguments must already be mpq
        q = object.__new__(cls)
        object.__setattr__(q, "a", a)
        object.__setattr__(q, "b", b)
        object.__setattr__(q, "c", c)
        object.__setattr__(q, "d", d)
        return q

    @classmethod
    def coerce(cls, x) -> "Quaternion":
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, (int, _RationalABC)) or type(x) is Rational:
            return cls._raw(_q(x), _Z, _Z, _Z)
        raise TypeError(f"cannot interpret {x!r} as a quaternion")

    def coeffs(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __iter__(self):
        return iter(self.coeffs())

    def __add__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return Quaternion._raw(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion._raw(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return Quaternion._raw(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return quat_mul(self, o)

    def __rmul__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return quat_mul(o, self)

    def conjugate(self) -> "Quaternion":
        return Quaternion._raw(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> Rational:
        """The reduced norm a^2 + b^2 + c^2 + d^2 (multiplicative)."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def trace(self) -> Rational:
        return 2 * self.a

    def inverse(self) -> "Quaternion":
        return quat_inv(self)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (
                self.a == other.a
                and self.b == other.b
                and self.c == other.c
                and self.d == other.d
            )
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return self == o

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"Quaternion({render_quaternion(self)!r})"

    def __str__(self):
        return render_quaternion(self)


_Z = mpq(0)
_ONE = mpq(1)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p * q``."""
    a1, b1, c1, d1 = p.a, p.b, p.c, p.d
    a2, b2, c2, d2 = q.a, q.b, q.c, q.d
    return Quaternion._raw(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quat_inv(q: Quaternion) -> Quaternion:
    """Exact inverse as conjugate over norm."""
    n = q.norm()
    if not n:
        raise ZeroInverse("quaternion 0 has no inverse")
    return Quaternion._raw(q.a / n, -q.b / n, -q.c / n, -q.d / n)


ONE_Q = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


# -- division-ring contract -------------------------------------------------


def is_zero(x) -> bool:
    if isinstance(x, Quaternion):
        return x.is_zero()
    return x == 0


def inv(x):
    """Two-sided inverse of a nonzero scalar; ZeroInverse on zero."""
    if isinstance(x, Quaternion):
        return quat_inv(x)
    if x == 0:
        raise ZeroInverse("0 has no inverse")
    return _ONE / _q(x)


def zero_like(x):
    return Quaternion._raw(_Z, _Z, _Z, _Z) if isinstance(x, Quaternion) else _Z


def one_like(x):
    return ONE_Q if isinstance(x, Quaternion) else _ONE


def conjugate_by(mu, x):
    """Return ``mu * x * mu^{-1}``."""
    return mu * x * inv(mu)


Scalar = Union[Rational, Quaternion]


# -- rendering ----------------------------------------------------------------


def render_rational(r) -> str:
    r = _q(r)
    if r.denominator == 1:
        return str(int(r.numerator))
    return f"{int(r.numerator)}/{int(r.denominator)}"


def render_quaternion(q) -> str:
    """Canonical text form, e.g. ``1/2 + 3 i - k``; ``0`` for zero.

    Unit coefficients of +-1 are written as a bare unit.
    """
    q = Quaternion.coerce(q)
    parts = []
    for coeff, unit in zip(q.coeffs(), ("", "i", "j", "k")):
        if not coeff:
            continue
        mag = abs(coeff)
        if unit and mag == 1:
            body = unit
        elif unit:
            body = f"{render_rational(mag)} {unit}"
        else:
            body = render_rational(mag)
        parts.append((coeff < 0, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def render_scalar(x) -> str:
    if isinstance(x, Quaternion):
        return render_quaternion(x)
    return render_rational(x)

"""Classical (commutative) oracles: Pluecker coordinates and cross-ratios.

Deliberately self-contained. Arithmetic here uses ``fractions.Fraction`` and
touches neither the quasideterminant code nor the quaternion type, so an
agreement between this module and the noncommutative one is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateConfiguration


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    # mpq and other numbers.Rational types
    return Fraction(int(x.numerator), int(x.denominator))


def _cols(A) -> list[tuple[Fraction, Fraction]]:
    if hasattr(A, "columns"):
        return [(_frac(c.x1), _frac(c.x2)) for c in A.columns]
    r1, r2 = A
    return [(_frac(a), _frac(b)) for a, b in zip(r1, r2)]


def plucker(A, i: int, k: int) -> Fraction:
    """p_{ik} = a_{1i} a_{2k} - a_{1k} a_{2i}, with 0-based column indices.

    ``A`` is a Mat2xN or a pair of rows.
    """
    cols = _cols(A)
    if not (0 <= i < len(cols) and 0 <= k < len(cols)):
        raise IndexError(f"column index out of range for {len(cols)} columns")
    (a1i, a2i), (a1k, a2k) = cols[i], cols[k]
    return a1i * a2k - a1k * a2i


@dataclass(frozen=True)
class PluckerPair:
    i: int
    k: int
    value: Fraction


@dataclass(frozen=True)
class PluckerIdentityReport:
    indices: tuple
    value: Fraction

    @property
    def holds(self) -> bool:
        return self.value == 0


def plucker_identity_check(A, i, j, k, l) -> PluckerIdentityReport:
    """Evaluate p_ij p_kl - p_ik p_jl + p_il p_jk (must vanish)."""
    if len({i, j, k, l}) != 4:
        raise ValueError("plucker identity needs four distinct indices")
    p = lambda a, b: plucker(A, a, b)  # noqa: E731
    value = p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k)
    return PluckerIdentityReport((i, j, k, l), value)


def plucker_ratio(A, i, j, k) -> Fraction:
    """Commutative value of q^k_{ij}: p_{jk} / p_{ik}."""
    den = plucker(A, i, k)
    if den == 0:
        raise DegenerateConfiguration(f"p_{{{i}{k}}} = 0")
    return plucker(A, j, k) / den


def classical_cross_ratio(x, y, z, t) -> Fraction:
    """(p_ty / p_zy) * (p_zx / p_tx) for vectors given as pairs or Vec2."""
    A = list(zip(*[tuple(v) for v in (x, y, z, t)]))
    X, Y, Z, T = range(4)
    pzy, ptx = plucker(A, Z, Y), plucker(A, T, X)
    if pzy == 0 or ptx == 0:
        raise DegenerateConfiguration(
            "p_zy = 0" if pzy == 0 else "p_tx = 0"
        )
    return (plucker(A, T, Y) / pzy) * (plucker(A, Z, X) / ptx)


def affine_cross_ratio(ux, uy, uz, ut) -> Fraction:
    """Cross-ratio of points (u, 1): (ut-uy)(uz-ux) / ((uz-uy)(ut-ux))."""
    ux, uy, uz, ut = map(_frac, (ux, uy, uz, ut))
    den = (uz - uy) * (ut - ux)
    if den == 0:
        raise DegenerateConfiguration("coincident affine points")
    return (ut - uy) * (uz - ux) / den


def property6_by_pluckers(A, i, j, k, l) -> Fraction:
    """(p_jk p_il + p_kl p_ij) / (p_ik p_jl); equals 1 when defined."""
    p = lambda a, b: plucker(A, a, b)  # noqa: E731
    den = p(i, k) * p(j, l)
    if den == 0:
        raise DegenerateConfiguration("p_ik p_jl = 0")
    return (p(j, k) * p(i, l) + p(k, l) * p(i, j)) / den

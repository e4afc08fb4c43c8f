"""Noncommutative cross-ratios of four vectors in F^2.

For vectors x, y, z, t the cross-ratio is ``kappa = q^y_{zt} * q^x_{tz}``
computed from the 2x4 matrix with columns labeled x, y, z, t. It is the
unique kappa for which there are alpha, beta, gamma with

    t = x alpha + y beta
    z = x alpha gamma + y beta gamma kappa.

Under ``x_i -> g x_i lam_i`` it transforms as ``kappa -> lam_3^{-1} kappa lam_3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional, Sequence

from .errors import (
    Degenerate,
    DegenerateCoordinates,
    DegenerateEntry,
    NotConjugate,
    Singular,
    Undefined,
)
from .linalg import Mat2, Mat2xN, Vec2, mat2_inverse, rational_kernel
from .qplucker import qp
from .quasidet import quasidet
from .scalars import Quaternion, conjugate_by, inv, is_zero, one_like

LABELS = ("x", "y", "z", "t")


@dataclass(frozen=True)
class FourTuple:
    x: Vec2
    y: Vec2
    z: Vec2
    t: Vec2

    def __iter__(self):
        return iter((self.x, self.y, self.z, self.t))

    def matrix(self) -> Mat2xN:
        return Mat2xN(list(self), LABELS)

    def act(self, g: Mat2, lams: Sequence) -> "FourTuple":
        """``(g x lam1, g y lam2, g z lam3, g t lam4)``."""
        return FourTuple(*[(g @ v).scale(lam) for v, lam in zip(self, lams)])

    def permuted(self, order: str) -> "FourTuple":
        """Reorder by a word in x, y, z, t, e.g. ``'yxtz'``."""
        d = dict(zip(LABELS, self))
        return FourTuple(*[d[c] for c in order])

    def scalar_like(self):
        return self.x.x1


def _blame(factor: str, exc: Undefined) -> Undefined:
    # qp blame already leads with the coordinate name; avoid repeating it
    inner = exc.blame
    if not inner.startswith(factor + ":"):
        inner = f"{factor}: {inner}"
    return Undefined(f"kappa factor {inner}", exc.position)


def cross_ratio(T: FourTuple):
    """kappa(x, y, z, t) = q^y_{zt} q^x_{tz}."""
    A = T.matrix()
    try:
        left = qp(A, "z", "t", "y")
    except Undefined as exc:
        raise _blame("q^y_{zt}", exc) from None
    try:
        right = qp(A, "t", "z", "x")
    except Undefined as exc:
        raise _blame("q^x_{tz}", exc) from None
    return left * right


def kappa(x, y, z, t):
    return cross_ratio(FourTuple(x, y, z, t))


@dataclass(frozen=True)
class CrossRatioSolution:
    alpha: object
    beta: object
    gamma: object
    kappa: object

    def satisfies(self, T: FourTuple) -> bool:
        """Substitute back into both defining equations."""
        a, b, g, k = self.alpha, self.beta, self.gamma, self.kappa
        t_ok = T.x.scale(a) + T.y.scale(b) == T.t
        z_ok = T.x.scale(a * g) + T.y.scale(b * g * k) == T.z
        return t_ok and z_ok


def _qd_top(left: Vec2, right: Vec2, what: str):
    # quasideterminant of columns (left, right) boxed at the top of `right`
    try:
        return quasidet(Mat2.from_columns(left, right), (1, 2))
    except Undefined as exc:
        raise _blame(what, exc) from None


def cross_ratio_via_system(T: FourTuple) -> CrossRatioSolution:
    """Solve the defining system for (alpha, beta, gamma, kappa).

    alpha and beta come from eliminating y (resp. x) in ``t = x alpha + y beta``;
    alpha*gamma and beta*gamma*kappa likewise from the z equation. Requires all
    eight coordinates nonzero.
    """
    for name, v in zip(LABELS, T):
        for r, c in ((1, v.x1), (2, v.x2)):
            if is_zero(c):
                raise DegenerateCoordinates(f"coordinate {name}{r} is zero")

    def solve(pivot: Vec2, unknown: Vec2, rhs: Vec2, what: str):
        den = _qd_top(pivot, unknown, what)
        if is_zero(den):
            raise Undefined(f"{what}: quasidet of columns is zero and cannot be inverted")
        return inv(den) * _qd_top(pivot, rhs, what)

    alpha = solve(T.y, T.x, T.t, "alpha")
    beta = solve(T.x, T.y, T.t, "beta")
    alpha_gamma = solve(T.y, T.x, T.z, "alpha*gamma")
    beta_gamma_kappa = solve(T.x, T.y, T.z, "beta*gamma*kappa")
    if is_zero(alpha):
        raise Undefined("alpha is zero: t is a right multiple of y")
    gamma = inv(alpha) * alpha_gamma
    bg = beta * gamma
    if is_zero(bg):
        raise Undefined("beta*gamma is zero: kappa is not determined")
    return CrossRatioSolution(alpha, beta, gamma, inv(bg) * beta_gamma_kappa)


def reduce_by_zt(T: FourTuple) -> tuple[Mat2, FourTuple]:
    """Return ``(g, g^{-1} T)`` with g the matrix whose columns are z, t.

    The reduced tuple has z = (1, 0) and t = (0, 1).
    """
    g = Mat2.from_columns(T.z, T.t)
    try:
        ginv = mat2_inverse(g)
    except Singular:
        raise Singular("z and t are dependent: the cross-ratio is 0 or 1") from None
    return g, FourTuple(*[ginv @ v for v in T])


def _reduced_entries(R: FourTuple, which: str):
    a11, a21, a12, a22 = R.x.x1, R.x.x2, R.y.x1, R.y.x2
    for name, v in (("11", a11), ("21", a21), ("12", a12), ("22", a22)):
        if is_zero(v):
            raise DegenerateEntry(f"reduced {which} has zero entry {which.lower()}{name}")
    return a11, a12, a21, a22


def normalized_kappa(T: FourTuple):
    """kappa from the reduced matrix: a12 a22^{-1} a21 a11^{-1}."""
    _, R = reduce_by_zt(T)
    a11, a12, a21, a22 = _reduced_entries(R, "A")
    return a12 * inv(a22) * a21 * inv(a11)


@dataclass(frozen=True)
class OrbitWitness:
    """Group element carrying the second tuple onto the first.

    The scalars act through their inverses, matching the right action
    ``v -> v lam^{-1}``: ``first_c = g second_c lam_c^{-1}`` for each column c.
    """

    g: Mat2
    lambda1: object
    lambda2: object
    lambda3: object
    lambda4: object
    mu: object

    @property
    def lambdas(self) -> tuple:
        return (self.lambda1, self.lambda2, self.lambda3, self.lambda4)

    def apply(self, second: FourTuple) -> FourTuple:
        return second.act(self.g, [inv(lam) for lam in self.lambdas])

    def verify(self, first: FourTuple, second: FourTuple) -> bool:
        if any(is_zero(lam) for lam in self.lambdas) or is_zero(self.mu):
            return False
        try:
            mat2_inverse(self.g)
        except Singular:
            return False
        if self.apply(second) != first:
            return False
        return cross_ratio(first) == conjugate_by(self.mu, cross_ratio(second))


def _check_orbit_kappa(k, which: str):
    if is_zero(k) or k == 1:
        raise Degenerate(f"kappa({which}) is {'0' if is_zero(k) else '1'}")


def orbit_witness(T: FourTuple, T2: FourTuple, mu) -> OrbitWitness:
    """Build (g, lambda_1..4) with ``T = g T2 diag(lambda)^{-1}`` given a conjugator.

    ``mu`` must satisfy ``kappa(T) = mu kappa(T2) mu^{-1}``. After reducing
    both tuples by their (z, t) matrices to A and B, lambda_3 = mu,
    lambda_1 = a11^{-1} mu b11, lambda_2 = a12^{-1} mu b12 and lambda_4 solves
    a21 lambda_1 = lambda_4 b21. The result is checked by substitution.
    """
    k1, k2 = cross_ratio(T), cross_ratio(T2)
    _check_orbit_kappa(k1, "first")
    _check_orbit_kappa(k2, "second")
    if is_zero(mu):
        raise Degenerate("mu is zero")
    if k1 != conjugate_by(mu, k2):
        raise NotConjugate("kappa(first) != mu kappa(second) mu^-1")
    g1, A = reduce_by_zt(T)
    g2, B = reduce_by_zt(T2)
    a11, a12, a21, _ = _reduced_entries(A, "A")
    b11, b12, b21, _ = _reduced_entries(B, "B")
    lam3 = mu
    lam1 = inv(a11) * mu * b11
    lam2 = inv(a12) * mu * b12
    lam4 = a21 * lam1 * inv(b21)
    g = g1 @ Mat2.diag(lam3, lam4) @ mat2_inverse(g2)
    w = OrbitWitness(g, lam1, lam2, lam3, lam4, mu)
    if not w.verify(T, T2):
        raise NotConjugate("constructed witness failed substitution")
    return w


def find_conjugator(p, q) -> Optional[Quaternion]:
    """A nonzero quaternion mu with ``mu q = p mu``, or None.

    Solves the 4-dimensional rational linear system ``mu q - p mu = 0``.
    Quaternion-specific: the kernel solve needs commuting coordinates.
    """
    p, q = Quaternion.coerce(p), Quaternion.coerce(q)
    basis = [Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)]
    images = [(e * q - p * e).coeffs() for e in basis]
    M = [[images[c][r] for c in range(4)] for r in range(4)]
    v = rational_kernel(M)
    if v is None:
        return None
    return Quaternion(*v)


@dataclass(frozen=True)
class CocycleReport:
    kappa: object
    product: object
    flipped: object

    @property
    def multiplicative(self) -> bool:
        return self.kappa == self.product

    @property
    def flip(self) -> bool:
        return self.kappa == 1 - self.flipped

    @property
    def holds(self) -> bool:
        return self.multiplicative and self.flip


def cocycle_checks(x, y, z, t, w) -> CocycleReport:
    """kappa(x,y,z,t) = kappa(w,y,z,t) kappa(x,w,z,t) and = 1 - kappa(t,y,z,x)."""
    k = kappa(x, y, z, t)
    prod = kappa(w, y, z, t) * kappa(x, w, z, t)
    flipped = kappa(t, y, z, x)
    return CocycleReport(k, prod, flipped)


@dataclass(frozen=True)
class ChainReport:
    factors: tuple
    product: object
    target: object

    @property
    def holds(self) -> bool:
        return self.product == self.target


def chain_product(points: Sequence[Vec2], z: Vec2, t: Vec2) -> ChainReport:
    """Telescoping product kappa(x_{n-1},x_n) ... kappa(x_1,x_2) vs kappa(x_1,x_n)."""
    if len(points) < 2:
        raise ValueError("chain needs at least two points")
    factors = tuple(
        kappa(points[m], points[m + 1], z, t) for m in range(len(points) - 2, -1, -1)
    )
    prod = factors[0]
    for f in factors[1:]:
        prod = prod * f
    return ChainReport(factors, prod, kappa(points[0], points[-1], z, t))


# name -> (conjugating coordinate (i, j, k) meaning q^k_{ij}, target ordering)
RELATIONS = {
    "swap_xy_zt_via_x": (("t", "z", "x"), "yxtz"),
    "swap_xy_zt_via_y": (("t", "z", "y"), "yxtz"),
    "swap_xz_yt_via_y": (("x", "z", "y"), "ztxy"),
    "swap_xz_yt_via_t": (("x", "z", "t"), "ztxy"),
    "swap_xt_yz_via_x": (("y", "z", "x"), "tzyx"),
    "swap_xt_yz_via_t": (("y", "z", "t"), "tzyx"),
}


@dataclass
class PermutationReport:
    kappa: object
    checks: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(ok for ok, _, _ in self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, (ok, _, _) in self.checks.items() if not ok]


def permutation_relations(T: FourTuple) -> PermutationReport:
    """Check the conjugation relations between kappa and its permuted values.

    For each listed relation, ``q^k_{ij} kappa q^k_{ji}`` must equal kappa
    of the reordered tuple; in addition ``kappa^{-1} = kappa(y,x,z,t)``.
    Each entry of ``checks`` is ``(ok, lhs, rhs)``.
    """
    k = cross_ratio(T)
    if is_zero(k) or k == 1:
        raise Degenerate(f"kappa is {'0' if is_zero(k) else '1'}: relations are degenerate")
    A = T.matrix()
    report = PermutationReport(k)
    for name, ((i, j, c), order) in RELATIONS.items():
        try:
            lhs = qp(A, i, j, c) * k * qp(A, j, i, c)
            rhs = cross_ratio(T.permuted(order))
        except Undefined as exc:
            raise _blame(name, exc) from None
        report.checks[name] = (lhs == rhs, lhs, rhs)
    try:
        rhs = cross_ratio(T.permuted("yxzt"))
    except Undefined as exc:
        raise _blame("inverse_swap_xy", exc) from None
    lhs = inv(k)
    report.checks["inverse_swap_xy"] = (lhs == rhs, lhs, rhs)
    return report


def all_24(T: FourTuple) -> dict:
    """kappa of every reordering, keyed by words like ``'xyzt'``.

    Undefined entries map to the Undefined error rather than aborting.
    """
    out = {}
    for perm in permutations(LABELS):
        word = "".join(perm)
        try:
            out[word] = cross_ratio(T.permuted(word))
        except Undefined as exc:
            out[word] = exc
    return out


def is_zt_dependent(T: FourTuple) -> bool:
    try:
        mat2_inverse(Mat2.from_columns(T.z, T.t))
    except Singular:
        return True
    return False

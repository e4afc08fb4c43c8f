"""Seeded identity-verification suites behind ``ncx verify``.

Every suite draws regular instances from its own derived seed, checks its
identities with exact equality and collects counterexamples rendered as
re-parsable literals. Results depend only on (suite, ring, trials, seed,
bound).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

from gmpy2 import mpq

from . import commoracle
from .crossratio import (
    FourTuple,
    chain_product,
    cocycle_checks,
    cross_ratio,
    cross_ratio_via_system,
    find_conjugator,
    normalized_kappa,
    orbit_witness,
    permutation_relations,
)
from .linalg import Mat2, Mat2xN, Vec2, col_scale, mat_mul
from .parse import render_matrix, render_vector
from .qplucker import qp, qp_pair_check
from .randgen import (
    Gen,
    GenConfig,
    derive_seed,
    is_regular_matrix,
    orbit_predicate,
    system_predicate,
)
from .scalars import inv, render_scalar

LABELS4 = ("x", "y", "z", "t")


@dataclass
class SuiteResult:
    name: str
    ring: str
    trials: int
    checks: int = 0
    failures: list = field(default_factory=list)
    draws: int = 0
    rejections: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str, example: Callable[[], str]):
        self.checks += 1
        if not ok:
            self.failures.append(f"{what}: {example()}")


def _tuple_literal(T: FourTuple) -> str:
    return render_matrix(T.matrix())


def _mat2_literal(g: Mat2) -> str:
    return render_matrix(Mat2xN.from_rows([g.a11, g.a12], [g.a21, g.a22]))


def _scalars_literal(lams) -> str:
    return "(" + ", ".join(render_scalar(s) for s in lams) + ")"


# -- quasi-Pluecker properties ---------------------------------------------------


def suite_qplucker(res: SuiteResult, gen: Gen):
    """Properties 1-6. P3-P6 over every index tuple, P1/P2 on a random one."""
    for _ in range(res.trials):
        A = gen.regular_matrix(4, LABELS4)
        g = gen.invertible_mat2()
        lams = [gen.nonzero_scalar() for _ in range(4)]
        gA, AL = mat_mul(g, A), col_scale(A, lams)
        ex = lambda: f"A={render_matrix(A)} g={_mat2_literal(g)} lambda={_scalars_literal(lams)}"  # noqa: E731

        table = {
            (i, j, k): qp(A, i, j, k)
            for k in range(4) for i in range(4) if i != k for j in range(4)
        }
        i, j, k, l = gen.choice(list(permutations(range(4))))
        q = table[i, j, k]
        res.check(qp(gA, i, j, k) == q, "P1 left invariance", ex)
        res.check(qp(AL, i, j, k) == inv(lams[i]) * q * lams[j], "P2 scaling", ex)
        for (i, j, k), val in table.items():
            if j == k:
                res.check(val == 0, "P3 q^k_ik = 0", ex)
            if j == i:
                res.check(val == 1, "P3 q^k_ii = 1", ex)
        for k in range(4):
            others = [c for c in range(4) if c != k]
            for i in others:
                for j in others:
                    for l in others:
                        res.check(table[i, j, k] * table[j, l, k] == table[i, l, k], "P4 cocycle", ex)
        for i, j, k in permutations(range(4), 3):
            res.check(table[i, j, k] * table[j, k, i] * table[k, i, j] == -1, "P5 skew-symmetry", ex)
            res.check(table[i, j, k] * table[j, k, i] == -table[i, k, j], "P5 restated", ex)
        for i, j, k, l in permutations(range(4)):
            res.check(
                table[i, j, k] * table[j, i, l] + table[i, l, k] * table[l, i, j] == 1,
                "P6 Pluecker identity", ex,
            )


def suite_lemma(res: SuiteResult, gen: Gen):
    """Row-1 and row-2 expressions agree wherever both are defined."""
    for _ in range(res.trials):
        A = gen.regular_matrix(4, LABELS4)
        for i, j, k in permutations(range(4), 3):
            rep = qp_pair_check(A, i, j, k)
            res.check(rep.equal, "row-1 vs row-2 expression",
                      lambda: f"A={render_matrix(A)} i={i} j={j} k={k}")


# -- cross-ratio ---------------------------------------------------------------


def suite_system(res: SuiteResult, gen: Gen):
    """Product formula equals the kappa solved from the defining system."""
    for _ in range(res.trials):
        T = gen.regular_tuple(system_predicate)
        sol = cross_ratio_via_system(T)
        ex = lambda: f"T={_tuple_literal(T)}"  # noqa: E731
        res.check(sol.kappa == cross_ratio(T), "product formula vs system", ex)
        res.check(sol.satisfies(T), "system substitution", ex)


def suite_normalized(res: SuiteResult, gen: Gen):
    for _ in range(res.trials):
        T = gen.regular_tuple(orbit_predicate)
        res.check(normalized_kappa(T) == cross_ratio(T), "normalized kappa",
                  lambda: f"T={_tuple_literal(T)}")


def suite_invariance(res: SuiteResult, gen: Gen):
    """kappa(g x l1, g y l2, g z l3, g t l4) = l3^-1 kappa l3."""
    commutative = gen.cfg.ring == "rational"
    for _ in range(res.trials):
        T = gen.regular_tuple()
        g = gen.invertible_mat2()
        lams = [gen.nonzero_scalar() for _ in range(4)]
        k = cross_ratio(T)
        k2 = cross_ratio(T.act(g, lams))
        ex = lambda: f"T={_tuple_literal(T)} g={_mat2_literal(g)} lambda={_scalars_literal(lams)}"  # noqa: E731
        res.check(k2 == inv(lams[2]) * k * lams[2], "relative invariance", ex)
        if commutative:
            res.check(k2 == k, "commutative invariance", ex)


def suite_orbit(res: SuiteResult, gen: Gen):
    """Round trip through orbit_witness; plus non-conjugate negatives."""
    quaternion = gen.cfg.ring == "quaternion"
    for _ in range(res.trials):
        T = gen.regular_tuple(orbit_predicate)
        g, lams = gen.regular(
            lambda: (gen.invertible_mat2(), [gen.nonzero_scalar() for _ in range(4)]),
            lambda d: orbit_predicate(T.act(*d)),
        )
        T2 = T.act(g, lams)
        ex = lambda: f"T={_tuple_literal(T)} g={_mat2_literal(g)} lambda={_scalars_literal(lams)}"  # noqa: E731
        w = orbit_witness(T, T2, lams[2])
        res.check(w.verify(T, T2), "witness substitution", ex)
        if quaternion:
            mu = find_conjugator(cross_ratio(T), cross_ratio(T2))
            res.check(mu is not None and not mu.is_zero(), "conjugator found", ex)
            if mu is not None:
                res.check(orbit_witness(T, T2, mu).verify(T, T2), "witness from found mu", ex)
    if quaternion:
        for _ in range(res.trials):
            S, S2 = _nonconjugate_pair(gen)
            k1, k2 = cross_ratio(S), cross_ratio(S2)
            res.check(find_conjugator(k1, k2) is None, "non-conjugate rejected",
                      lambda: f"T={_tuple_literal(S)} T'={_tuple_literal(S2)}")


def _nonconjugate_pair(gen: Gen):
    while True:
        S = gen.regular_tuple(orbit_predicate)
        S2 = gen.regular_tuple(orbit_predicate)
        k1, k2 = cross_ratio(S), cross_ratio(S2)
        if k1.a != k2.a or k1.norm() != k2.norm():
            return S, S2


def suite_cocycle(res: SuiteResult, gen: Gen):
    for _ in range(res.trials):
        T = gen.regular_tuple()
        w = gen.regular(gen.vec2, lambda v: is_regular_matrix(Mat2xN([*T, v])))
        rep = cocycle_checks(*T, w)
        ex = lambda: f"T={_tuple_literal(T)} w={render_vector(w)}"  # noqa: E731
        res.check(rep.multiplicative, "cocycle product", ex)
        res.check(rep.flip, "1 - kappa flip", ex)
        res.check(cross_ratio(FourTuple(T.x, T.x, T.z, T.t)) == 1, "kappa(x,x,z,t) = 1", ex)


def suite_chain(res: SuiteResult, gen: Gen):
    for trial in range(res.trials):
        n = 2 + trial % 5
        M = gen.regular_matrix(n + 2)
        pts, z, t = list(M.columns[:n]), M.columns[n], M.columns[n + 1]
        rep = chain_product(pts, z, t)
        res.check(rep.holds, f"chain n={n}",
                  lambda: f"points={[render_vector(p) for p in pts]} z={render_vector(z)} t={render_vector(t)}")


def suite_perms(res: SuiteResult, gen: Gen):
    for _ in range(res.trials):
        T = gen.regular_tuple(orbit_predicate)
        rep = permutation_relations(T)
        for name, (ok, _, _) in rep.checks.items():
            res.check(ok, name, lambda: f"T={_tuple_literal(T)}")


def suite_commutative(res: SuiteResult, gen: Gen):
    """Rational shadow: Pluecker ratios, the three-term identity, classical kappa."""
    for trial in range(res.trials):
        A = gen.regular_matrix(4, LABELS4)
        T = FourTuple(*A.columns)
        ex = lambda: f"A={render_matrix(A)}"  # noqa: E731
        for i, j, k in permutations(range(4), 3):
            res.check(qp(A, i, j, k) == commoracle.plucker_ratio(A, i, j, k), "qp = p_jk/p_ik", ex)
        for i, j, k, l in permutations(range(4)):
            res.check(commoracle.plucker_identity_check(A, i, j, k, l).holds, "Pluecker identity", ex)
            res.check(commoracle.property6_by_pluckers(A, i, j, k, l) == 1, "P6 via Pluecker", ex)
        for i in range(4):
            for k in range(4):
                res.check(commoracle.plucker(A, i, k) == -commoracle.plucker(A, k, i), "antisymmetry", ex)
        res.check(cross_ratio(T) == commoracle.classical_cross_ratio(*T), "kappa = classical", ex)
    one, zero = mpq(1), mpq(0)
    for _ in range(50):
        k = gen.rational()
        T = FourTuple(Vec2(one, zero), Vec2(zero, one), Vec2(one, one), Vec2(k, one))
        res.check(cross_ratio(T) == k, "normalization kappa = k", lambda: f"k={render_scalar(k)}")


SUITES = {
    "qplucker": (suite_qplucker, ("quaternion", "rational")),
    "lemma": (suite_lemma, ("quaternion", "rational")),
    "system": (suite_system, ("quaternion", "rational")),
    "normalized": (suite_normalized, ("quaternion", "rational")),
    "invariance": (suite_invariance, ("quaternion", "rational")),
    "orbit": (suite_orbit, ("quaternion", "rational")),
    "cocycle": (suite_cocycle, ("quaternion", "rational")),
    "chain": (suite_chain, ("quaternion", "rational")),
    "perms": (suite_perms, ("quaternion", "rational")),
    "commutative": (suite_commutative, ("rational",)),
}


def run_suite(name: str, trials: int, seed: int, bound: int = 5, rings=None) -> list[SuiteResult]:
    fn, default_rings = SUITES[name]
    out = []
    for ring in rings or default_rings:
        if ring not in default_rings:
            continue
        cfg = GenConfig(seed=derive_seed(seed, f"{name}/{ring}"), bound=bound, ring=ring)
        gen = Gen(cfg)
        res = SuiteResult(name, ring, trials)
        fn(res, gen)
        res.draws, res.rejections = gen.draws, gen.rejections
        out.append(res)
    return out


def run_all(trials: int, seed: int, bound: int = 5, names=None) -> list[SuiteResult]:
    results = []
    for name in names or SUITES:
        results.extend(run_suite(name, trials, seed, bound))
    return results

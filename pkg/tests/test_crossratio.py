from fractions import Fraction

import pytest

from oracles import kappa_by_elimination
from ncx import commoracle
from ncx.crossratio import (
    FourTuple, all_24, chain_product, cocycle_checks, cross_ratio, cross_ratio_via_system,
    find_conjugator, is_zt_dependent, kappa, normalized_kappa, orbit_witness,
    permutation_relations,
)
from ncx.errors import (
    Degenerate, DegenerateCoordinates, DegenerateEntry, NotConjugate, Singular, Undefined,
)
from ncx.linalg import Mat2, Vec2
from ncx.randgen import Gen, GenConfig, orbit_predicate, system_predicate
from ncx.scalars import I, J, K, ONE_Q, Quaternion, conjugate_by, inv, rat

R = rat


def affine(*us):
    return FourTuple(*[Vec2(R(u), R(1)) for u in us])


def normalization(k):
    return FourTuple(Vec2(R(1), R(0)), Vec2(R(0), R(1)), Vec2(R(1), R(1)), Vec2(R(k), R(1)))


def _qvec(*qs):
    return tuple(Quaternion.coerce(q).coeffs() for q in qs)


WORKED_Q = FourTuple(Vec2(ONE_Q, I), Vec2(ONE_Q, J), Vec2(ONE_Q, K), Vec2(ONE_Q, ONE_Q))
WORKED_KAPPA = Quaternion(R(1, 2), R(-1, 2), R(1, 2), R(1, 2))


# -- kappa -------------------------------------------------------------------------


@pytest.mark.parametrize("k", [R(2), R(-3, 7), R(5, 2), R(0), R(1)])
def test_normalization_gives_k(k):
    assert cross_ratio(normalization(k)) == k


def test_affine_points():
    assert cross_ratio(affine(0, 1, 2, 3)) == R(4, 3)
    assert commoracle.affine_cross_ratio(0, 1, 2, 3) == Fraction(4, 3)


def test_worked_quaternion_value():
    assert cross_ratio(WORKED_Q) == WORKED_KAPPA
    sol = cross_ratio_via_system(WORKED_Q)
    assert sol.kappa == WORKED_KAPPA and sol.satisfies(WORKED_Q)
    oracle = kappa_by_elimination(*[_qvec(v.x1, v.x2) for v in WORKED_Q])
    assert Quaternion(*oracle) == WORKED_KAPPA


def test_undefined_blame():
    T = FourTuple(Vec2(R(1), R(0)), Vec2(R(0), R(1)), Vec2(R(0), R(1)), Vec2(R(1), R(1)))
    with pytest.raises(Undefined) as exc:
        cross_ratio(T)
    assert exc.value.blame.startswith("kappa factor q^y_{zt}")


# -- defining system ---------------------------------------------------------------


def test_system_zero_coordinate():
    with pytest.raises(DegenerateCoordinates):
        cross_ratio_via_system(normalization(R(3)))


def test_system_affine():
    T = affine(1, 2, 3, 4)  # shifted so no coordinate is zero
    sol = cross_ratio_via_system(T)
    assert sol.kappa == commoracle.affine_cross_ratio(1, 2, 3, 4)
    assert sol.satisfies(T)
    T0 = FourTuple(Vec2(R(-1), R(1)), Vec2(R(1), R(1)), Vec2(R(2), R(1)), Vec2(R(3), R(1)))
    assert cross_ratio_via_system(T0).kappa == commoracle.affine_cross_ratio(-1, 1, 2, 3)


@pytest.mark.parametrize("ring", ["quaternion", "rational"])
def test_system_matches_product_and_elimination(ring):
    gen = Gen(GenConfig(seed=30, ring=ring))
    for _ in range(40):
        T = gen.regular_tuple(system_predicate)
        sol = cross_ratio_via_system(T)
        assert sol.satisfies(T)
        assert sol.kappa == cross_ratio(T)
        oracle = kappa_by_elimination(*[_qvec(v.x1, v.x2) for v in T])
        assert Quaternion(*oracle) == sol.kappa


# -- normalized kappa ----------------------------------------------------------------


def test_normalized_example():
    T = FourTuple(Vec2(R(1), R(3)), Vec2(R(2), R(4)), Vec2(R(1), R(0)), Vec2(R(0), R(1)))
    assert normalized_kappa(T) == R(3, 2)
    assert commoracle.classical_cross_ratio(*T) == Fraction(-1, 2) * Fraction(-3)
    assert cross_ratio(T) == R(3, 2)


def test_normalized_singular():
    z = Vec2(I, J)
    T = FourTuple(Vec2(ONE_Q, I), Vec2(ONE_Q, J), z, z)
    assert is_zt_dependent(T)
    with pytest.raises(Singular):
        normalized_kappa(T)


def test_normalized_zero_entry():
    T = FourTuple(Vec2(R(1), R(0)), Vec2(R(2), R(4)), Vec2(R(1), R(0)), Vec2(R(0), R(1)))
    with pytest.raises(DegenerateEntry):
        normalized_kappa(T)


@pytest.mark.parametrize("ring", ["quaternion", "rational"])
def test_normalized_agrees(ring):
    gen = Gen(GenConfig(seed=31, ring=ring))
    for _ in range(200):
        T = gen.regular_tuple(orbit_predicate)
        assert normalized_kappa(T) == cross_ratio(T)


# -- relative invariance and orbits -----------------------------------------------


@pytest.mark.parametrize("ring", ["quaternion", "rational"])
def test_relative_invariance(ring):
    gen = Gen(GenConfig(seed=32, ring=ring))
    for _ in range(200):
        T = gen.regular_tuple()
        g = gen.invertible_mat2()
        lams = [gen.nonzero_scalar() for _ in range(4)]
        k2 = cross_ratio(T.act(g, lams))
        assert k2 == inv(lams[2]) * cross_ratio(T) * lams[2]
        if ring == "rational":
            assert k2 == cross_ratio(T)


def test_witness_identity():
    T = FourTuple(Vec2(ONE_Q, I), Vec2(Quaternion(2), J), Vec2(ONE_Q, K), Vec2(Quaternion(3), ONE_Q))
    assert orbit_predicate(T)
    w = orbit_witness(T, T, ONE_Q)
    assert w.g.is_identity()
    assert all(lam == 1 for lam in w.lambdas)


def test_witness_recovers_group_element():
    gen = Gen(GenConfig(seed=33))
    for _ in range(100):
        T = gen.regular_tuple(orbit_predicate)
        g = gen.invertible_mat2()
        lams = [gen.nonzero_scalar() for _ in range(4)]
        T2 = T.act(g, lams)
        if not orbit_predicate(T2):
            continue
        w = orbit_witness(T, T2, lams[2])
        assert w.verify(T, T2)
        assert w.apply(T2) == T
        assert cross_ratio(T) == conjugate_by(w.mu, cross_ratio(T2))
        assert list(w.lambdas) == lams
        assert w.g == Mat2(*_inverse_entries(g))


def _inverse_entries(g):
    from ncx.linalg import mat2_inverse
    h = mat2_inverse(g)
    return h.a11, h.a12, h.a21, h.a22


def test_witness_not_conjugate_rational():
    with pytest.raises(NotConjugate):
        orbit_witness(normalization(R(2)), normalization(R(3)), R(1))


def test_witness_degenerate_kappa():
    with pytest.raises(Degenerate):
        orbit_witness(normalization(R(1)), normalization(R(3)), R(1))


def test_witness_bad_mu_quaternion():
    gen = Gen(GenConfig(seed=34))
    T = gen.regular_tuple(orbit_predicate)
    g = gen.invertible_mat2()
    lams = [gen.nonzero_scalar() for _ in range(4)]
    T2 = T.act(g, lams)
    k1, k2 = cross_ratio(T), cross_ratio(T2)
    bad = lams[2] * Quaternion(1, 1, 1, 1)
    if k1 != conjugate_by(bad, k2):
        with pytest.raises(NotConjugate):
            orbit_witness(T, T2, bad)


def test_find_conjugator_examples():
    x = Quaternion(2, 1, -1, R(1, 3))
    mu = find_conjugator(x, x)
    assert mu is not None and mu * x == x * mu
    assert find_conjugator(I, -I) == J
    assert J * (-I) == I * J
    assert find_conjugator(I, Quaternion(1, 1)) is None


def test_find_conjugator_negatives():
    gen = Gen(GenConfig(seed=35))
    n = 0
    while n < 200:
        p, q = gen.scalar(), gen.scalar()
        if p.a == q.a and p.norm() == q.norm():
            continue
        assert find_conjugator(p, q) is None
        n += 1


def test_find_conjugator_positives():
    gen = Gen(GenConfig(seed=36))
    for _ in range(200):
        q, m = gen.scalar(), gen.nonzero_scalar()
        p = conjugate_by(m, q)
        mu = find_conjugator(p, q)
        assert mu is not None and mu * q == p * mu


# -- cocycle / chain ----------------------------------------------------------------


def test_cocycle_w_equals_x():
    T = affine(0, 1, 2, 3)
    rep = cocycle_checks(*T, T.x)
    assert rep.holds
    assert kappa(T.x, T.x, T.z, T.t) == 1


def test_cocycle_affine():
    rep = cocycle_checks(*affine(0, 1, 2, 3), Vec2(R(5), R(1)))
    assert rep.holds and rep.kappa == R(4, 3)


@pytest.mark.parametrize("ring", ["quaternion", "rational"])
def test_cocycle_random(ring):
    gen = Gen(GenConfig(seed=37, ring=ring))
    for _ in range(200):
        M = gen.regular_matrix(5)
        rep = cocycle_checks(*M.columns)
        assert rep.multiplicative and rep.flip


def test_chain_base_case():
    T = affine(0, 1, 2, 3)
    rep = chain_product([T.x, T.y], T.z, T.t)
    assert rep.holds and len(rep.factors) == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_chain_random(n):
    gen = Gen(GenConfig(seed=38 + n))
    for _ in range(50):
        M = gen.regular_matrix(n + 2)
        assert chain_product(list(M.columns[:n]), M.columns[n], M.columns[n + 1]).holds


def test_chain_all_equal():
    x = Vec2(ONE_Q, I)
    rep = chain_product([x] * 4, Vec2(ONE_Q, K), Vec2(Quaternion(2), ONE_Q))
    assert all(f == 1 for f in rep.factors) and rep.product == 1 and rep.holds


def test_chain_factor_order_matters():
    gen = Gen(GenConfig(seed=44))
    M = gen.regular_matrix(6)
    pts, z, t = list(M.columns[:4]), M.columns[4], M.columns[5]
    rep = chain_product(pts, z, t)
    reversed_product = rep.factors[-1] * rep.factors[-2] * rep.factors[-3]
    assert rep.holds and reversed_product != rep.target


# -- permutations -------------------------------------------------------------------


def test_perms_commutative_klein_four():
    T = affine(0, 1, 2, 3)
    k = cross_ratio(T)
    for word in ("yxtz", "ztxy", "tzyx"):
        assert cross_ratio(T.permuted(word)) == k
    assert cross_ratio(T.permuted("yxzt")) == 1 / k
    # the printed ordering (t, z, x, y) gives the inverse instead
    assert cross_ratio(T.permuted("tzxy")) == 1 / k
    assert permutation_relations(T).holds


@pytest.mark.parametrize("ring", ["quaternion", "rational"])
def test_perms_random(ring):
    gen = Gen(GenConfig(seed=45, ring=ring))
    for _ in range(200):
        rep = permutation_relations(gen.regular_tuple(orbit_predicate))
        assert rep.holds, rep.failures()
        assert len(rep.checks) == 7


def test_perms_degenerate_kappa_one():
    z = Vec2(ONE_Q, I)
    T = FourTuple(Vec2(ONE_Q, J), Vec2(Quaternion(2), K), z, z.scale(Quaternion(0, 1, 1)))
    assert cross_ratio(T) == 1
    with pytest.raises(Degenerate):
        permutation_relations(T)


def test_all_24_basic():
    gen = Gen(GenConfig(seed=46))
    T = gen.regular_tuple()
    vals = all_24(T)
    assert len(vals) == 24
    assert vals["xyzt"] == cross_ratio(T)
    assert vals["yxzt"] == inv(vals["xyzt"])


def test_all_24_commutative_six_values():
    gen = Gen(GenConfig(seed=47, ring="rational"))
    for _ in range(100):
        T = gen.regular_tuple()
        vals = all_24(T)
        lam = Fraction(int(vals["xyzt"].numerator), int(vals["xyzt"].denominator))
        classical = {lam, 1 / lam, 1 - lam, 1 / (1 - lam), lam / (lam - 1), (lam - 1) / lam}
        got = {Fraction(int(v.numerator), int(v.denominator)) for v in vals.values()}
        assert got == classical
        assert len(got) <= 6


def test_all_24_partial():
    # x = z: orderings putting x and z in the second and third slots are undefined
    T = affine(0, 1, 0, 3)
    vals = all_24(T)
    assert vals["xyzt"] == 0
    assert isinstance(vals["yxzt"], Undefined)
    assert isinstance(vals["yzxt"], Undefined)
    assert sum(isinstance(v, Undefined) for v in vals.values()) == 8

from fractions import Fraction

import pytest

from ncx import commoracle as co
from ncx.crossratio import FourTuple, cross_ratio
from ncx.errors import DegenerateConfiguration
from ncx.linalg import Vec2
from ncx.randgen import Gen, GenConfig
from ncx.scalars import rat


def test_plucker_examples():
    A = ([1, 2, 5], [3, 4, 6])
    assert co.plucker(A, 0, 0) == 0
    assert co.plucker(([1, 0], [0, 1]), 0, 1) == 1
    assert (co.plucker(A, 0, 1), co.plucker(A, 0, 2), co.plucker(A, 1, 2)) == (-2, -9, -8)


def test_plucker_index_error():
    with pytest.raises(IndexError):
        co.plucker(([1, 2], [3, 4]), 0, 2)


def test_identity_examples():
    assert co.plucker_identity_check(([1, 2, 5, 7], [3, 4, 6, -1]), 0, 1, 2, 3).holds
    assert co.plucker_identity_check(([1, 1, 5, 7], [3, 3, 6, -1]), 0, 1, 2, 3).holds
    with pytest.raises(ValueError):
        co.plucker_identity_check(([1, 1, 5, 7], [3, 3, 6, -1]), 0, 0, 2, 3)


def test_random_identity_and_antisymmetry():
    gen = Gen(GenConfig(seed=9, ring="rational"))
    for _ in range(1000):
        A = gen.mat2xn(4)
        rep = co.plucker_identity_check(A, 0, 1, 2, 3)
        assert rep.value == 0, rep.indices
        for i in range(4):
            for k in range(4):
                assert co.plucker(A, i, k) == -co.plucker(A, k, i)


def test_affine_values():
    assert co.affine_cross_ratio(0, 1, 2, 3) == Fraction(4, 3)
    assert co.classical_cross_ratio((0, 1), (1, 1), (2, 1), (3, 1)) == Fraction(4, 3)


def test_coincident_z_t_gives_one():
    assert co.classical_cross_ratio((0, 1), (1, 1), (2, 1), (2, 1)) == 1


def test_normalization():
    for k in (Fraction(7, 3), Fraction(-2), Fraction(1, 5)):
        assert co.classical_cross_ratio((1, 0), (0, 1), (1, 1), (k, 1)) == k


def test_degenerate():
    with pytest.raises(DegenerateConfiguration):
        co.classical_cross_ratio((0, 1), (2, 1), (2, 1), (3, 1))


def test_oracle_agrees_with_noncommutative_code():
    gen = Gen(GenConfig(seed=10, ring="rational"))
    for _ in range(300):
        T = gen.regular_tuple()
        assert cross_ratio(T) == co.classical_cross_ratio(*T)


def test_property6_by_pluckers():
    gen = Gen(GenConfig(seed=12, ring="rational"))
    for _ in range(300):
        A = gen.regular_matrix()
        assert co.property6_by_pluckers(A, 0, 1, 2, 3) == 1


def test_accepts_mpq():
    v = Vec2(rat(1, 2), rat(3))
    assert co.classical_cross_ratio(v, (0, 1), (1, 1), (2, 1)) == co.affine_cross_ratio(
        Fraction(1, 6), 0, 1, 2
    )

import pytest

from ncx.errors import Undefined
from ncx.linalg import Mat2, Vec2
from ncx.quasidet import POSITIONS, all_quasidets, quasidet
from ncx.randgen import Gen, GenConfig
from ncx.scalars import I, J, K, ONE_Q, Quaternion, rat


def test_identity_box_11():
    assert quasidet(Mat2.identity(rat(1)), (1, 1)) == 1


def test_rational_example():
    # 2 - 1 * 3^-1 * 4
    assert quasidet(Mat2(rat(1), rat(2), rat(3), rat(4)), (1, 2)) == rat(2, 3)


def test_quaternion_dependent_columns():
    # i - j * 1^-1 * k = i - i
    m = Mat2(I, J, K, ONE_Q)
    assert quasidet(m, (1, 1)) == 0


def test_undefined_reports_position():
    m = Mat2(rat(1), rat(2), rat(3), rat(0))
    with pytest.raises(Undefined) as exc:
        quasidet(m, (1, 1))
    assert exc.value.position == (1, 1)
    assert "a22" in exc.value.blame


def test_bad_position():
    with pytest.raises(ValueError):
        quasidet(Mat2.identity(rat(1)), (3, 1))


def _det(m):
    return m.a11 * m.a22 - m.a12 * m.a21


def test_commutative_reduction():
    gen = Gen(GenConfig(seed=17, ring="rational"))
    checked = 0
    while checked < 1000:
        m = gen.mat2()
        for (r, c) in POSITIONS:
            opp = m.entry(3 - r, 3 - c)
            if opp == 0:
                continue
            assert quasidet(m, (r, c)) == (-1) ** (r + c) * _det(m) / opp
            checked += 1


def test_dependent_columns_zero_everywhere():
    gen = Gen(GenConfig(seed=2))
    for _ in range(200):
        c1 = gen.vec2()
        c2 = c1.scale(gen.nonzero_scalar())
        values = all_quasidets(Mat2.from_columns(c1, c2))
        for v in values.values():
            assert isinstance(v, Undefined) or v == 0


def test_noncommutative_quasidet_differs_from_reversed_products():
    # a12 a22^-1 a21 = i j = k, whereas j i = -k
    m = Mat2(ONE_Q, I, J, ONE_Q)
    assert quasidet(m, (1, 1)) == ONE_Q - K
    swapped = m.a11 - m.a21 * m.a22.inverse() * m.a12
    assert quasidet(m, (1, 1)) != swapped

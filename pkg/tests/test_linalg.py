from fractions import Fraction

import pytest

from scorza import linalg
from scorza.errors import InputError
from scorza.sampling import make_rng, random_qi_matrix, random_qi_vector
from scorza.scalars import QI


def test_rank_known_cases():
    assert linalg.rank([[QI(1), QI(2)], [QI(2), QI(4)]]) == 1
    assert linalg.rank(linalg.identity(4)) == 4
    assert linalg.rank(linalg.zeros(3, 5)) == 0
    m = [[QI(0, 1), QI(1)], [QI(-1), QI(0, 1)]]  # second row = i * first
    assert linalg.rank(m) == 1


def test_rank_matches_plain_gauss_on_random_matrices():
    rng = make_rng("linalg", "rank-cross")
    for _ in range(60):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = random_qi_matrix(rng, rows, cols, height=6)
        assert linalg.rank(m) == linalg.rank_gauss(m)


def test_rank_of_outer_product_sums():
    rng = make_rng("linalg", "outer")
    for k in range(4):
        m = linalg.zeros(5, 7)
        for _ in range(k):
            u = random_qi_vector(rng, 5, 5)
            v = random_qi_vector(rng, 7, 5)
            m = linalg.mat_add(m, [[a * b for b in v] for a in u])
        assert linalg.rank(m) == k


def test_det_multiplicative_and_alternating():
    rng = make_rng("linalg", "det")
    for _ in range(25):
        a = random_qi_matrix(rng, 4, 4, height=5)
        b = random_qi_matrix(rng, 4, 4, height=5)
        assert linalg.det(linalg.mat_mul(a, b)) == linalg.det(a) * linalg.det(b)
    swapped = [a[1], a[0], a[2], a[3]]
    assert linalg.det(swapped) == -linalg.det(a)
    with pytest.raises(InputError):
        linalg.det([[QI(1), QI(2)]])


def test_inverse():
    rng = make_rng("linalg", "inv")
    for _ in range(20):
        m = random_qi_matrix(rng, 4, 4, height=5)
        if not linalg.det(m):
            continue
        assert linalg.mat_eq(linalg.mat_mul(m, linalg.inverse(m)), linalg.identity(4))
    with pytest.raises(InputError):
        linalg.inverse(linalg.zeros(2, 2))


def test_pfaffian_small_cases():
    a = QI(Fraction(7, 3))
    assert linalg.pfaffian([[QI(0), a], [-a, QI(0)]]) == a
    assert linalg.pfaffian([]) == QI(1)
    # 4x4: pf = a12 a34 - a13 a24 + a14 a23
    rng = make_rng("linalg", "pf4")
    vals = random_qi_vector(rng, 6, 5)
    a12, a13, a14, a23, a24, a34 = vals
    z = QI(0)
    m = [
        [z, a12, a13, a14],
        [-a12, z, a23, a24],
        [-a13, -a23, z, a34],
        [-a14, -a24, -a34, z],
    ]
    assert linalg.pfaffian(m) == a12 * a34 - a13 * a24 + a14 * a23


def test_pfaffian_square_is_determinant():
    rng = make_rng("linalg", "pfsq")
    for n in (4, 6, 8):
        for _ in range(10):
            m = linalg.zeros(n, n)
            for i in range(n):
                for j in range(i + 1, n):
                    x = random_qi_vector(rng, 1, 5)[0]
                    m[i][j] = x
                    m[j][i] = -x
            pf = linalg.pfaffian(m)
            assert pf * pf == linalg.det(m)


def test_pfaffian_rejects_bad_input():
    with pytest.raises(InputError):
        linalg.pfaffian([[QI(1)]])
    with pytest.raises(InputError):
        linalg.pfaffian([[QI(0), QI(1)], [QI(1), QI(0)]])


def test_conj_transpose_and_shapes():
    m = [[QI(1, 2), QI(3)], [QI(0, -1), QI(5, 5)]]
    ct = linalg.conj_transpose(m)
    assert ct[0][1] == QI(0, 1)
    assert ct[1][0] == QI(3)
    with pytest.raises(InputError):
        linalg.mat_mul(m, linalg.zeros(3, 2))
    with pytest.raises(InputError):
        linalg.mat_add(m, linalg.zeros(3, 2))

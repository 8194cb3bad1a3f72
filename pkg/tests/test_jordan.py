from fractions import Fraction

import pytest

from scorza import linalg
from scorza.cayley_dickson import cd_basis, cd_scalar, random_cd
from scorza.errors import InputError, UnsupportedError
from scorza.jordan import (
    JordanElement,
    freudenthal_det3,
    from_upper,
    generic_det,
    jordan_diag,
    jordan_identity,
    jordan_product,
    jordan_rank3,
    jordan_zero,
    jtrace,
    random_hermitian,
    rank_one_from_vector,
    sharp,
    to_complex_matrix,
    trace_form,
)
from scorza.sampling import make_rng, random_fraction, random_qi_vector
from scorza.scalars import QI


def test_product_with_identity_and_diagonals():
    rng = make_rng("jd", "ident")
    ident = jordan_identity("O_C", 3)
    x = random_hermitian(rng, "O_C", 3, 5)
    assert jordan_product(x, ident) == x
    a = jordan_diag("O_C", [QI(1), QI(2), QI(3)])
    b = jordan_diag("O_C", [QI(-1), QI(5), QI(Fraction(1, 2))])
    assert jordan_product(a, b) == jordan_diag("O_C", [QI(-1), QI(10), QI(Fraction(3, 2))])


def test_product_commutative_and_bilinear():
    rng = make_rng("jd", "comm")
    for _ in range(20):
        x = random_hermitian(rng, "O_C", 3, 5)
        y = random_hermitian(rng, "O_C", 3, 5)
        assert jordan_product(x, y) == jordan_product(y, x)
        lam = QI(random_fraction(rng, 5))
        lhs = jordan_product(x.scale(lam), y)
        assert lhs == jordan_product(x, y).scale(lam)


def test_jordan_identity_octonionic():
    rng = make_rng("jd", "jid")
    for _ in range(40):
        x = random_hermitian(rng, "O", 3, 5)
        y = random_hermitian(rng, "O", 3, 5)
        x2 = jordan_product(x, x)
        assert jordan_product(x2, jordan_product(x, y)) == jordan_product(
            x, jordan_product(x2, y)
        )


def test_trace_and_trace_form():
    rng = make_rng("jd", "trace")
    assert jtrace(jordan_identity("O_C", 3)) == QI(3)
    for _ in range(40):
        x = random_hermitian(rng, "O_C", 3, 5)
        y = random_hermitian(rng, "O_C", 3, 5)
        assert trace_form(x, y) == trace_form(y, x)
        assert trace_form(x, y) == jtrace(jordan_product(x, y))
    for _ in range(40):
        x = random_hermitian(rng, "O", 3, 5)
        if x.is_zero():
            continue
        val = trace_form(x, x)
        assert val.is_real() and val.as_fraction() > 0


def test_sharp_on_diagonals_and_identity():
    a, b, c = QI(2), QI(-3), QI(Fraction(5, 7))
    d = jordan_diag("O_C", [a, b, c])
    assert sharp(d) == jordan_diag("O_C", [b * c, a * c, a * b])
    ident = jordan_identity("O_C", 3)
    assert sharp(ident) == ident
    assert sharp(jordan_zero("O_C", 3)).is_zero()


def test_sharp_adjoint_identities():
    rng = make_rng("jd", "sharp")
    ident = jordan_identity("O_C", 3)
    for _ in range(40):
        x = random_hermitian(rng, "O_C", 3, 5)
        d = generic_det(x)
        assert jordan_product(sharp(x), x) == ident.scale(d)
        assert generic_det(sharp(x)) == d * d


def test_generic_det_values_and_oracles():
    assert generic_det(jordan_diag("O_C", [QI(2), QI(3), QI(5)])) == QI(30)
    rng = make_rng("jd", "det")
    # associative restriction: ordinary complex determinant on H_3(C)
    for _ in range(40):
        x = random_hermitian(rng, "C", 3, 8)
        assert generic_det(x) == linalg.det(to_complex_matrix(x))
    # cubic homogeneity
    for _ in range(20):
        x = random_hermitian(rng, "O_C", 3, 5)
        lam = QI(random_fraction(rng, 7, nonzero=True))
        assert generic_det(x.scale(lam)) == lam ** 3 * generic_det(x)


def test_closed_cubic_formula_agrees():
    rng = make_rng("jd", "freud")
    for _ in range(40):
        x = random_hermitian(rng, "O_C", 3, 5)
        assert freudenthal_det3(x) == generic_det(x)


def test_generic_det_higher_rank_associative():
    # 2x2 quaternionic: det [[p, a],[conj(a), q]] = pq - N(a)
    rng = make_rng("jd", "h2")
    for _ in range(20):
        x = random_hermitian(rng, "H", 2, 6)
        p = x.entry(0, 0).scalar_part()
        q = x.entry(1, 1).scalar_part()
        a = x.entry(0, 1)
        assert generic_det(x) == p * q - a.norm()
    # 4x4 complex hermitian agrees with the ordinary determinant
    for _ in range(10):
        x = random_hermitian(rng, "C", 4, 5)
        assert generic_det(x) == linalg.det(to_complex_matrix(x))


def test_rank_characterization():
    assert jordan_rank3(jordan_zero("O_C", 3)) == 0
    assert jordan_rank3(jordan_identity("O_C", 3)) == 3
    assert jordan_rank3(jordan_diag("O_C", [QI(1), QI(1), QI(0)])) == 2
    rng = make_rng("jd", "rank")
    for _ in range(30):
        v = [random_cd(rng, 2, "Qi", 5) for _ in range(3)]
        a = rank_one_from_vector("O_C", v)
        if a.is_zero():
            continue
        assert sharp(a).is_zero()
        assert jordan_rank3(a) == 1


def test_rank_matches_matrix_rank_on_scalar_entries():
    rng = make_rng("jd", "rankmat")
    for k in range(4):
        for _ in range(30):
            x = jordan_zero("O_C", 3)
            for _ in range(k):
                v = [cd_scalar(q, 3, "Qi") for q in random_qi_vector(rng, 3, 5)]
                x = x + rank_one_from_vector("O_C", v)
            assert jordan_rank3(x) == linalg.rank(to_complex_matrix(x))


def test_rank_matches_matrix_rank_on_complex_field_entries():
    # entries in the level-1 algebra over Q form a genuine subfield
    rng = make_rng("jd", "rankfield")
    for k in range(4):
        for _ in range(30):
            x = jordan_zero("C", 3)
            for _ in range(k):
                v = [random_cd(rng, 1, "Q", 5) for _ in range(3)]
                x = x + rank_one_from_vector("C", v)
            assert jordan_rank3(x) == linalg.rank(to_complex_matrix(x))


def test_shape_and_algebra_errors():
    rng = make_rng("jd", "err")
    x = random_hermitian(rng, "O_C", 3, 3)
    y = random_hermitian(rng, "H_C", 3, 3)
    with pytest.raises(InputError):
        jordan_product(x, y)
    with pytest.raises(UnsupportedError):
        sharp(random_hermitian(rng, "C", 4, 3))
    with pytest.raises(UnsupportedError):
        jordan_rank3(random_hermitian(rng, "C", 4, 3))
    with pytest.raises(UnsupportedError):
        random_hermitian(rng, "O", 4, 3)
    with pytest.raises(InputError):
        # non-hermitian entries
        e = cd_basis(3, 1, "Qi")
        JordanElement("O_C", ((e, e), (e, e)))


def test_hermitian_validation_and_upper_triangle():
    rng = make_rng("jd", "upper")
    x = random_hermitian(rng, "O_C", 3, 5)
    upper = [[x.entry(i, j) for j in range(i, 3)] for i in range(3)]
    assert from_upper("O_C", upper) == x


def test_json_round_trip():
    rng = make_rng("jd", "json")
    for algebra in ("C", "H_C", "O_C"):
        x = random_hermitian(rng, algebra, 3, 6)
        data = x.to_json()
        assert data["n"] == 3 and data["algebra"] == algebra
        assert JordanElement.from_json(data) == x

import pytest

from scorza import linalg
from scorza.dual_pairs import (
    WElement,
    cartan_project,
    cartan_split,
    dagger,
    equivariance_check,
    in_group_g,
    in_group_h,
    in_lie_g,
    in_lie_h,
    isotropic_basis,
    mu_G,
    mu_K,
    parse_case,
    random_g_element,
    random_h_element,
    random_lie_g,
    random_w_element,
    reduced_point,
    sample_zero_level,
    veronese_map,
)
from scorza.errors import InputError
from scorza.sampling import derive_seed, make_rng, random_fraction, random_qi_vector
from scorza.scalars import QI
from scorza.strata import rank_of

CASES = ["sp:3", "u:3,3", "ostar:6"]


def test_case_parsing_and_shapes():
    c = parse_case("sp:3", 2)
    assert (c.kind, c.params, c.s, c.r) == ("sp", (3,), 2, 3)
    assert (c.v_size, c.s_size) == (6, 2)
    c = parse_case("u:4,3", 2)
    assert (c.r, c.v_size) == (3, 7)
    c = parse_case("ostar:6", 2)
    assert (c.r, c.v_size, c.s_size) == (3, 12, 4)
    for bad in ("sp", "u:3", "ostar:1", "xx:3", "u:2,3"):
        with pytest.raises(InputError):
            parse_case(bad, 1)
    with pytest.raises(InputError):
        parse_case("sp:3", 0)


@pytest.mark.parametrize("sel", CASES)
def test_case_structural_invariants(sel):
    case = parse_case(sel, 2)
    j = case.j_v_matrix()
    gv = case.form_v_matrix()
    n = case.v_size
    # J^2 = -1, positivity of B(u, J v) on the basis Gram matrix, J in g
    assert linalg.mat_eq(linalg.mat_mul(j, j), linalg.mat_neg(linalg.identity(n)))
    assert linalg.mat_eq(linalg.mat_mul(gv, j), linalg.identity(n))
    assert in_lie_g(case, j)
    # B is skew-hermitian: B(v,u) = -conj(B(u,v))
    assert linalg.is_zero_matrix(linalg.mat_add(linalg.conj_transpose(gv), gv))


def test_dagger_hand_example_sp1():
    # l = 1, s = 1, alpha = e1: dagger(e1) = 0, dagger(f1) = -1,
    # mu_G sends e1 to 0 and f1 to -e1
    case = parse_case("sp:1", 1)
    w = WElement(case, [[QI(1)], [QI(0)]])
    assert dagger(w) == [[QI(0), QI(-1)]]
    assert mu_G(w) == [[QI(0), QI(-1)], [QI(0), QI(0)]]
    assert linalg.is_zero_matrix(mu_K(w))
    assert rank_of(reduced_point(w)) == 1


@pytest.mark.parametrize("sel", CASES)
def test_dagger_defining_identity(sel):
    for s in (1, 2, 3):
        case = parse_case(sel, s)
        gv = case.form_v_matrix()
        for t in range(10):
            w = random_w_element(case, seed=derive_seed("t-dag", sel, s, t))
            # (dagger(a) u, v) = B(u, a v) over all basis pairs
            assert linalg.mat_eq(
                linalg.conj_transpose(dagger(w)), linalg.mat_mul(gv, w.alpha)
            )


@pytest.mark.parametrize("sel", CASES)
def test_momentum_lie_membership(sel):
    for s in (1, 2, 3, 4):
        case = parse_case(sel, s)
        for t in range(10):
            w = random_w_element(case, seed=derive_seed("t-lie", sel, s, t))
            assert in_lie_h(case, mu_K(w))
            assert in_lie_g(case, mu_G(w))
            assert linalg.is_zero_matrix(mu_K(WElement(case, linalg.mat_scale(w.alpha, QI(0)))))


@pytest.mark.parametrize("sel", CASES)
def test_group_generators_and_equivariance(sel):
    case = parse_case(sel, 2)
    rng = make_rng("t-equiv", sel)
    for t in range(12):
        x = random_h_element(case, rng)
        y = random_g_element(case, rng)
        assert in_group_h(case, x)
        assert in_group_g(case, y)
        w = random_w_element(case, seed=derive_seed("t-equiv-w", sel, t))
        assert equivariance_check(w, x, y)
    ident_h = linalg.identity(case.s_size)
    ident_g = linalg.identity(case.v_size)
    assert equivariance_check(w, ident_h, ident_g)


def test_equivariance_rejects_non_group_input():
    case = parse_case("sp:3", 2)
    w = random_w_element(case, seed=1)
    bad_h = linalg.mat_scale(linalg.identity(case.s_size), QI(2))
    bad_g = linalg.mat_scale(linalg.identity(case.v_size), QI(3))
    with pytest.raises(InputError):
        equivariance_check(w, bad_h, linalg.identity(case.v_size))
    with pytest.raises(InputError):
        equivariance_check(w, linalg.identity(case.s_size), bad_g)


@pytest.mark.parametrize("sel", CASES)
def test_isotropic_basis_is_isotropic(sel):
    case = parse_case(sel, 1)
    gv = case.form_v_matrix()
    basis = isotropic_basis(case)
    for u in basis:
        for v in basis:
            val = QI(0)
            for i, ui in enumerate(u):
                if ui:
                    for j, vj in enumerate(v):
                        if vj and gv[i][j]:
                            val = val + ui.conjugate() * gv[i][j] * vj
            assert not val


@pytest.mark.parametrize("sel", CASES)
def test_zero_level_and_reduction_bounds(sel):
    r = parse_case(sel, 1).r
    for s in range(1, r + 2):
        case = parse_case(sel, s)
        ranks = []
        for t in range(12):
            w = sample_zero_level(case, seed=derive_seed("t-zl", sel, s, t))
            assert linalg.is_zero_matrix(mu_K(w))
            p = reduced_point(w)
            rk = rank_of(p)
            assert rk <= min(s, r)
            ranks.append(rk)
        # saturation/genericity: the cap is attained
        assert max(ranks) == min(s, r)


def test_reduced_point_requires_zero_level():
    case = parse_case("u:3,3", 2)
    w = random_w_element(case, seed=5)
    if not linalg.is_zero_matrix(mu_K(w)):
        with pytest.raises(InputError):
            reduced_point(w)


@pytest.mark.parametrize("sel", CASES)
def test_cartan_split_and_projection(sel):
    case = parse_case(sel, 2)
    rng = make_rng("t-cartan", sel)
    j = case.j_v_matrix()
    for t in range(10):
        x = random_lie_g(case, rng)
        assert in_lie_g(case, x)
        x_k, x_p = cartan_split(case, x)
        assert linalg.mat_eq(linalg.mat_add(x_k, x_p), x)
        assert linalg.mat_eq(linalg.mat_mul(x_k, j), linalg.mat_mul(j, x_k))
        assert linalg.mat_eq(
            linalg.mat_mul(x_p, j), linalg.mat_neg(linalg.mat_mul(j, x_p))
        )
        # projection lands in the validated matrix model
        point = cartan_project(x, case)
        assert point.model == case.model()
    # an element of k projects to zero
    assert cartan_project(j, case).is_zero()


def test_cartan_project_rejects_non_lie_input():
    case = parse_case("sp:3", 1)
    with pytest.raises(InputError):
        cartan_project(linalg.identity(case.v_size), case)


@pytest.mark.parametrize("sel", CASES)
def test_veronese_map(sel):
    case = parse_case(sel, 1)
    rng = make_rng("t-ver", sel)
    hits = 0
    for t in range(12):
        v = random_qi_vector(rng, case.v_size, 5, real=case.real_entries)
        p = veronese_map(case, v)
        assert rank_of(p) <= 1
        hits += rank_of(p) == 1
        lam = QI(random_fraction(rng, 5, nonzero=True))
        p2 = veronese_map(case, [x * lam for x in v])
        assert linalg.mat_eq(p2.coords, linalg.mat_scale(p.coords, lam * lam))
    assert hits >= 11
    assert veronese_map(case, [QI(0)] * case.v_size).is_zero()
    with pytest.raises(InputError):
        veronese_map(parse_case(sel, 2), [QI(0)] * case.v_size)


def test_w_complex_dimensions():
    assert [parse_case("sp:3", s).w_complex_dim() for s in (1, 2, 3)] == [3, 6, 9]
    assert [parse_case("u:3,3", s).w_complex_dim() for s in (1, 2, 3)] == [6, 12, 18]
    assert [parse_case("ostar:6", s).w_complex_dim() for s in (1, 2, 3)] == [12, 24, 36]


def test_w_element_structure_validation():
    case = parse_case("ostar:6", 1)
    with pytest.raises(InputError):
        # right shape but not quaternion-linear
        WElement(case, [[QI(1), QI(0)]] * 12)
    sp_case = parse_case("sp:2", 1)
    with pytest.raises(InputError):
        WElement(sp_case, [[QI(0, 1)]] * 4)  # complex entries in the real case
    with pytest.raises(InputError):
        WElement(sp_case, [[QI(1)]] * 3)  # wrong shape

import pytest

from scorza import linalg
from scorza.errors import InputError, UnsupportedError
from scorza.jordan import generic_det, sharp
from scorza.sampling import derive_seed
from scorza.scalars import QI
from scorza.strata import (
    EXC27,
    StratumPoint,
    chart_param_count,
    chart_point,
    closure_membership,
    coords_vector,
    defects,
    mat_model,
    parse_model,
    peel_rank_one,
    random_point,
    rank_of,
    relative_invariant,
    sample_rank_one,
    sample_secant,
    skew_model,
    stratum_dimension,
    sym_model,
    zero_point,
)

ALL_MODELS = [sym_model(3), mat_model(3, 3), mat_model(3, 5), skew_model(6),
              skew_model(7), EXC27]


def test_model_parsing_and_properties():
    assert parse_model("sym:3") == sym_model(3)
    assert parse_model("mat:3,5") == mat_model(3, 5)
    assert parse_model("skew:6") == skew_model(6)
    assert parse_model("exc27") == EXC27
    assert sym_model(3).max_rank == 3
    assert mat_model(3, 5).max_rank == 3
    assert skew_model(7).max_rank == 3
    assert EXC27.max_rank == 3
    assert sym_model(3).ambient_dim == 6
    assert skew_model(6).ambient_dim == 15
    assert EXC27.ambient_dim == 27
    assert mat_model(3, 3).regular and not mat_model(3, 5).regular
    assert skew_model(6).regular and not skew_model(7).regular
    for bad in ("sym", "mat:3", "frob:2", "sym:0", "skew:1", "mat:3,4,5"):
        with pytest.raises(InputError):
            parse_model(bad)


def test_rank_of_basic_points():
    for model in ALL_MODELS:
        assert rank_of(zero_point(model)) == 0
    # e1 wedge e2 + e3 wedge e4 inside skew(6): matrix rank 4, Jordan rank 2
    m = linalg.zeros(6, 6)
    for i, j in ((0, 1), (2, 3)):
        m[i][j] = QI(1)
        m[j][i] = QI(-1)
    assert rank_of(StratumPoint(skew_model(6), m)) == 2
    e11 = linalg.zeros(3, 3)
    e11[0][0] = QI(1)
    assert rank_of(StratumPoint(sym_model(3), e11)) == 1


@pytest.mark.parametrize("model", ALL_MODELS, ids=lambda m: m.selector())
def test_rank_one_samples(model):
    for t in range(25):
        p = sample_rank_one(model, seed=derive_seed("t-r1", t))
        assert rank_of(p) == 1
        if model.kind == "exc27":
            assert sharp(p.coords).is_zero()
            assert not generic_det(p.coords)
            assert not p.coords.is_zero()


@pytest.mark.parametrize("model", ALL_MODELS, ids=lambda m: m.selector())
def test_secant_samples_rank_bound_and_genericity(model):
    for s in range(1, model.max_rank + 1):
        hits = 0
        for t in range(20):
            p = sample_secant(model, s - 1, seed=derive_seed("t-sec", s, t))
            r = rank_of(p)
            assert r <= s
            hits += r == s
        assert hits >= 19
    # oversampling caps at max rank
    p = sample_secant(model, model.max_rank + 1, seed=3)
    assert rank_of(p) <= model.max_rank


def test_secant_validation():
    with pytest.raises(InputError):
        sample_secant(sym_model(3), -1, seed=0)


def test_relative_invariant_vanishing_and_degree():
    for model in [sym_model(3), mat_model(3, 3), skew_model(6), EXC27]:
        for t in range(10):
            low = sample_secant(model, model.max_rank - 2, seed=derive_seed("t-inv", t))
            assert not relative_invariant(low)
            full = random_point(model, seed=derive_seed("t-invf", t))
            assert relative_invariant(full)
            lam = QI(3)
            if model.kind == "exc27":
                scaled = StratumPoint(model, full.coords.scale(lam))
            else:
                scaled = StratumPoint(model, linalg.mat_scale(full.coords, lam))
            assert relative_invariant(scaled) == lam ** model.max_rank * relative_invariant(full)


def test_relative_invariant_unsupported_models():
    with pytest.raises(UnsupportedError):
        relative_invariant(random_point(mat_model(3, 5), seed=1))
    with pytest.raises(UnsupportedError):
        relative_invariant(random_point(skew_model(7), seed=1))


def test_pfaffian_squares_to_det_on_skew6():
    for t in range(10):
        p = random_point(skew_model(6), seed=derive_seed("t-pf", t))
        pf = relative_invariant(p)
        assert pf * pf == linalg.det(p.coords)


def test_closure_membership():
    for model in ALL_MODELS:
        assert closure_membership(zero_point(model), 0)
        p1 = sample_rank_one(model, seed=11)
        assert not closure_membership(p1, 0)
        assert closure_membership(p1, 1)
        for k in range(model.max_rank):
            p = sample_secant(model, k, seed=derive_seed("t-cm", k))
            r = rank_of(p)
            for s in range(model.max_rank + 1):
                assert closure_membership(p, s) == (s >= r)


SEVERI_TABLE = {
    "sym:3": [2, 4, 5],
    "mat:3,3": [4, 7, 8],
    "skew:6": [8, 13, 14],
    "exc27": [16, 25, 26],
}


@pytest.mark.parametrize("sel,proj_dims", SEVERI_TABLE.items())
def test_stratum_dimension_severi_rows(sel, proj_dims):
    model = parse_model(sel)
    for s, expected in enumerate(proj_dims, start=1):
        cone, proj = stratum_dimension(model, s)
        assert proj == expected
        assert cone == expected + 1


def test_stratum_dimension_nonregular_and_quadric():
    assert [stratum_dimension(mat_model(3, 5), s)[1] for s in (1, 2, 3)] == [6, 11, 14]
    assert [stratum_dimension(skew_model(7), s)[1] for s in (1, 2, 3)] == [10, 17, 20]
    # the regular rank-2 quadric case: Pluecker of skew(5) in P^9
    assert stratum_dimension(skew_model(5), 1)[1] == 6
    assert skew_model(5).ambient_proj_dim == 9
    with pytest.raises(InputError):
        stratum_dimension(sym_model(3), 0)
    with pytest.raises(InputError):
        stratum_dimension(sym_model(3), 4)


def test_chart_quadratic_consistency():
    # chart evaluations must satisfy the model symmetries and rank bound
    for model in ALL_MODELS:
        n = chart_param_count(model)
        from scorza.sampling import make_rng, random_qi_vector

        rng = make_rng("t-chart", model.selector())
        params = random_qi_vector(rng, n, 5)
        p = chart_point(model, params)
        assert rank_of(p) <= 1
        assert len(coords_vector(p)) == model.ambient_dim
    with pytest.raises(InputError):
        chart_point(sym_model(3), [QI(1)])


def test_defects_scorza_conditions():
    d = defects(sym_model(3))
    assert (d.deltas, d.k0, d.scorza_ok) == ((1, 2), 2, True)
    d = defects(mat_model(3, 5))
    assert (d.deltas, d.k0, d.scorza_ok) == ((2, 4), 2, False)
    assert d.k0 + (5 - 3) // 2 == d.dim_x // d.deltas[0] == 3
    d = defects(mat_model(3, 4))
    assert d.scorza_ok
    d = defects(mat_model(3, 6))
    assert not d.scorza_ok
    assert d.k0 + (6 - 3) // 2 == d.dim_x // d.deltas[0]
    d = defects(EXC27)
    assert (d.deltas, d.k0, d.scorza_ok) == ((8, 16), 2, True)
    with pytest.raises(InputError):
        defects(sym_model(1))


@pytest.mark.parametrize("sel", ["sym:4", "mat:3,5", "skew:6"])
def test_peeling_reconstructs_exactly(sel):
    model = parse_model(sel)
    for k in range(model.max_rank):
        for t in range(8):
            p = sample_secant(model, k, seed=derive_seed("t-peel", sel, k, t))
            pieces = peel_rank_one(p)
            assert len(pieces) == rank_of(p)
            total = zero_point(model)
            for piece in pieces:
                assert rank_of(piece) == 1
                total = total + piece
            assert total == p


def test_peeling_unsupported_for_exc27():
    with pytest.raises(UnsupportedError):
        peel_rank_one(sample_rank_one(EXC27, seed=5))


def test_point_validation():
    with pytest.raises(InputError):
        StratumPoint(sym_model(2), [[QI(0), QI(1)], [QI(2), QI(0)]])
    with pytest.raises(InputError):
        StratumPoint(skew_model(2), [[QI(0), QI(1)], [QI(1), QI(0)]])
    with pytest.raises(InputError):
        StratumPoint(mat_model(2, 3), linalg.zeros(3, 2))


def test_json_round_trip():
    for model in ALL_MODELS:
        p = sample_secant(model, 1, seed=42)
        rank_of(p)
        data = p.to_json()
        q = StratumPoint.from_json(data)
        assert q == p
        assert q.cached_rank == p.cached_rank
        assert data["model"]["kind"] == model.kind

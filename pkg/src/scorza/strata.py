"""The four p-space models and their Jordan-rank stratification.

Models: complex symmetric r x r matrices, rectangular q x p matrices,
skew n x n matrices, and the 27-dimensional hermitian 3 x 3 model over the
complexified octonions. Rank is exact matrix rank (halved for skew), the
relative invariant is the determinant / Pfaffian / cubic norm, and stratum
dimensions are exact Jacobian ranks of rank-one-sum parameterizations at
random rational points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from . import linalg
from .cayley_dickson import CDElement, cd_scalar, random_cd
from .errors import InputError, UnsupportedError
from .jordan import (
    JordanElement,
    generic_det,
    jordan_rank3,
    random_hermitian,
    rank_one_from_vector,
    sharp,
)
from .sampling import derive_seed, make_rng, random_qi, random_qi_vector
from .scalars import HALF, QI

KINDS = ("sym", "mat", "skew", "exc27")

_RANK1_RETRIES = 32


@dataclass(frozen=True)
class PSpaceModel:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown model kind {self.kind!r}")
        expected = {"sym": 1, "mat": 2, "skew": 1, "exc27": 0}[self.kind]
        if len(self.params) != expected:
            raise InputError(f"model {self.kind} takes {expected} parameter(s)")
        if any(p < 1 for p in self.params):
            raise InputError("model parameters must be positive")
        if self.kind == "skew" and self.params[0] < 2:
            raise InputError("skew model needs n >= 2")

    @property
    def max_rank(self) -> int:
        if self.kind == "sym":
            return self.params[0]
        if self.kind == "mat":
            return min(self.params)
        if self.kind == "skew":
            return self.params[0] // 2
        return 3

    @property
    def ambient_dim(self) -> int:
        """Complex dimension of the model as a vector space."""
        if self.kind == "sym":
            r = self.params[0]
            return r * (r + 1) // 2
        if self.kind == "mat":
            q, p = self.params
            return q * p
        if self.kind == "skew":
            n = self.params[0]
            return n * (n - 1) // 2
        return 27

    @property
    def ambient_proj_dim(self) -> int:
        return self.ambient_dim - 1

    @property
    def regular(self) -> bool:
        """Whether the model carries a relative invariant of degree max_rank."""
        if self.kind == "mat":
            return self.params[0] == self.params[1]
        if self.kind == "skew":
            return self.params[0] % 2 == 0
        return True

    def selector(self) -> str:
        if self.kind == "exc27":
            return "exc27"
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"

    def __str__(self):
        return self.selector()


def sym_model(r: int) -> PSpaceModel:
    return PSpaceModel("sym", (r,))


def mat_model(q: int, p: int) -> PSpaceModel:
    return PSpaceModel("mat", (q, p))


def skew_model(n: int) -> PSpaceModel:
    return PSpaceModel("skew", (n,))


EXC27 = PSpaceModel("exc27", ())


def parse_model(selector: str) -> PSpaceModel:
    """Parse sym:R | mat:Q,P | skew:N | exc27."""
    text = selector.strip().lower()
    if text == "exc27":
        return EXC27
    kind, _, args = text.partition(":")
    try:
        nums = tuple(int(a) for a in args.split(",")) if args else ()
        return PSpaceModel(kind, nums)
    except (ValueError, InputError) as exc:
        raise InputError(
            f"bad model selector {selector!r}; expected sym:R | mat:Q,P | skew:N | exc27"
        ) from exc


@dataclass
class StratumPoint:
    model: PSpaceModel
    coords: object  # QI matrix, or JordanElement for exc27
    cached_rank: int | None = field(default=None)

    def __post_init__(self):
        _validate_coords(self.model, self.coords)

    def is_zero(self) -> bool:
        if self.model.kind == "exc27":
            return self.coords.is_zero()
        return linalg.is_zero_matrix(self.coords)

    def __add__(self, other: "StratumPoint") -> "StratumPoint":
        if self.model != other.model:
            raise InputError("cannot add points of different models")
        if self.model.kind == "exc27":
            return StratumPoint(self.model, self.coords + other.coords)
        return StratumPoint(self.model, linalg.mat_add(self.coords, other.coords))

    def __eq__(self, other):
        if not isinstance(other, StratumPoint) or self.model != other.model:
            return False
        if self.model.kind == "exc27":
            return self.coords == other.coords
        return linalg.mat_eq(self.coords, other.coords)

    def to_json(self) -> dict:
        model_obj: dict = {"kind": self.model.kind}
        if self.model.kind == "sym":
            model_obj["r"] = self.model.params[0]
        elif self.model.kind == "mat":
            model_obj["q"], model_obj["p"] = self.model.params
        elif self.model.kind == "skew":
            model_obj["n"] = self.model.params[0]
        if self.model.kind == "exc27":
            coords = self.coords.to_json()
        else:
            coords = linalg.matrix_to_json(self.coords)
        out = {"model": model_obj, "coords": coords}
        if self.cached_rank is not None:
            out["rank"] = self.cached_rank
        return out

    @staticmethod
    def from_json(data: dict) -> "StratumPoint":
        mobj = data["model"]
        kind = mobj["kind"]
        if kind == "sym":
            model = sym_model(int(mobj["r"]))
        elif kind == "mat":
            model = mat_model(int(mobj["q"]), int(mobj["p"]))
        elif kind == "skew":
            model = skew_model(int(mobj["n"]))
        elif kind == "exc27":
            model = EXC27
        else:
            raise InputError(f"unknown model kind {kind!r}")
        if kind == "exc27":
            coords = JordanElement.from_json(data["coords"])
        else:
            coords = linalg.matrix_from_json(data["coords"])
        point = StratumPoint(model, coords)
        if "rank" in data:
            point.cached_rank = int(data["rank"])
        return point


def _validate_coords(model: PSpaceModel, coords):
    if model.kind == "exc27":
        if not isinstance(coords, JordanElement) or coords.algebra != "O_C" or coords.n != 3:
            raise InputError("exc27 coordinates must be a 3x3 hermitian O_C element")
        return
    rows, cols = linalg.shape(coords)
    if model.kind == "sym":
        r = model.params[0]
        if (rows, cols) != (r, r):
            raise InputError(f"expected {r}x{r} coordinates")
        for i in range(rows):
            for j in range(i + 1, cols):
                if coords[i][j] != coords[j][i]:
                    raise InputError("coordinates are not symmetric")
    elif model.kind == "mat":
        if (rows, cols) != model.params:
            raise InputError(f"expected {model.params[0]}x{model.params[1]} coordinates")
    elif model.kind == "skew":
        n = model.params[0]
        if (rows, cols) != (n, n):
            raise InputError(f"expected {n}x{n} coordinates")
        if not linalg.is_skew(coords):
            raise InputError("coordinates are not skew-symmetric")


def zero_point(model: PSpaceModel) -> StratumPoint:
    if model.kind == "exc27":
        from .jordan import jordan_zero

        return StratumPoint(model, jordan_zero("O_C", 3))
    rows = {"sym": model.params[0], "mat": model.params[0], "skew": model.params[0]}[
        model.kind
    ]
    cols = model.params[1] if model.kind == "mat" else rows
    return StratumPoint(model, linalg.zeros(rows, cols))


# --- rank and membership ------------------------------------------------------

def rank_of(point: StratumPoint) -> int:
    """Jordan rank: matrix rank for sym/mat, half of it for skew, degree-3
    rank for the exceptional model."""
    if point.cached_rank is not None:
        return point.cached_rank
    if point.model.kind == "exc27":
        r = jordan_rank3(point.coords)
    else:
        mr = linalg.rank(point.coords)
        if point.model.kind == "skew":
            if mr % 2:
                raise RuntimeError("skew matrix with odd rank; input not exact")
            r = mr // 2
        else:
            r = mr
    point.cached_rank = r
    return r


def closure_membership(point: StratumPoint, s: int) -> bool:
    """Whether the point lies in the closure of the rank-s stratum."""
    return rank_of(point) <= s


# --- sampling -------------------------------------------------------------------

def _outer(u: list, v: list) -> list:
    return [[x * y for y in v] for x in u]


def sample_rank_one(model: PSpaceModel, seed: int, height: int = 10) -> StratumPoint:
    """A random rank-1 point of the model.

    For exc27 the vector has complexified-quaternion entries, which makes
    v v* genuinely rank 1; sharp = 0 is verified, with bounded resampling
    against the measure-zero degenerate draws.
    """
    rng = make_rng(seed, "rank1", model.selector(), height)
    for _ in range(_RANK1_RETRIES):
        point = _rank_one_from_rng(model, rng, height)
        if point is not None:
            return point
    raise RuntimeError(f"could not sample a rank-1 point of {model} (construction bug?)")


def _rank_one_from_rng(model: PSpaceModel, rng: Random, height: int) -> StratumPoint | None:
    if model.kind == "sym":
        r = model.params[0]
        v = random_qi_vector(rng, r, height)
        m = _outer(v, v)
        if linalg.is_zero_matrix(m):
            return None
        return StratumPoint(model, m, cached_rank=1)
    if model.kind == "mat":
        q, p = model.params
        v = random_qi_vector(rng, q, height)
        w = random_qi_vector(rng, p, height)
        m = _outer(v, w)
        if linalg.is_zero_matrix(m):
            return None
        return StratumPoint(model, m, cached_rank=1)
    if model.kind == "skew":
        n = model.params[0]
        v = random_qi_vector(rng, n, height)
        w = random_qi_vector(rng, n, height)
        m = linalg.mat_sub(_outer(v, w), _outer(w, v))
        if linalg.is_zero_matrix(m):
            return None
        return StratumPoint(model, m, cached_rank=1)
    # exc27: quaternionic entries embedded in the complexified octonions
    v = [random_cd(rng, 2, "Qi", height) for _ in range(3)]
    a = rank_one_from_vector("O_C", v)
    if a.is_zero() or not sharp(a).is_zero():
        return None
    return StratumPoint(model, a, cached_rank=1)


def sample_secant(model: PSpaceModel, k: int, seed: int, height: int = 10) -> StratumPoint:
    """Sum of k+1 independent rank-1 samples; Jordan rank <= min(k+1, max)."""
    if k < 0:
        raise InputError("secant index k must be >= 0")
    total = None
    for i in range(k + 1):
        point = sample_rank_one(model, derive_seed(seed, "secant", i), height)
        total = point if total is None else total + point
    total.cached_rank = None  # summands may degenerate; recompute on demand
    return total


def random_point(model: PSpaceModel, seed: int, height: int = 10) -> StratumPoint:
    """A random point of the full model (no rank structure imposed)."""
    rng = make_rng(seed, "full", model.selector(), height)
    if model.kind == "sym":
        r = model.params[0]
        m = linalg.zeros(r, r)
        for i in range(r):
            m[i][i] = random_qi(rng, height)
            for j in range(i + 1, r):
                m[i][j] = m[j][i] = random_qi(rng, height)
        return StratumPoint(model, m)
    if model.kind == "mat":
        q, p = model.params
        return StratumPoint(model, [random_qi_vector(rng, p, height) for _ in range(q)])
    if model.kind == "skew":
        n = model.params[0]
        m = linalg.zeros(n, n)
        for i in range(n):
            for j in range(i + 1, n):
                x = random_qi(rng, height)
                m[i][j] = x
                m[j][i] = -x
        return StratumPoint(model, m)
    return StratumPoint(model, random_hermitian(rng, "O_C", 3, height))


# --- relative invariant --------------------------------------------------------

def relative_invariant(point: StratumPoint) -> QI:
    """Determinant, Pfaffian, or cubic norm; degree = max rank and vanishing
    exactly below it. Defined on the regular models only."""
    model = point.model
    if not model.regular:
        raise UnsupportedError(
            f"model {model} is not regular; no relative invariant of degree max rank"
        )
    if model.kind in ("sym", "mat"):
        return linalg.det(point.coords)
    if model.kind == "skew":
        return linalg.pfaffian(point.coords)
    return generic_det(point.coords)


# --- dimension oracle ------------------------------------------------------------

def chart_param_count(model: PSpaceModel) -> int:
    if model.kind == "sym":
        return model.params[0]
    if model.kind == "mat":
        return model.params[0] + model.params[1]
    if model.kind == "skew":
        return 2 * model.params[0]
    return 17


def chart_point(model: PSpaceModel, params: list) -> StratumPoint:
    """Quadratic rank-one chart used by the dimension oracle.

    sym: v -> v v^t; mat: (v, w) -> v w^t; skew: (v, w) -> v w^t - w v^t.
    exc27: (x, y, w) -> v v* with v = (x, y, w 1), x and y full octonion
    coefficient blocks and w a scalar. Any two octonions generate an
    associative subalgebra, so the image is rank <= 1, and it is dense in
    the 17-dimensional rank-1 cone (the all-quaternion sampler is not).
    """
    if len(params) != chart_param_count(model):
        raise InputError("wrong chart parameter count")
    if model.kind == "sym":
        v = params
        return StratumPoint(model, _outer(v, v))
    if model.kind == "mat":
        q = model.params[0]
        return StratumPoint(model, _outer(params[:q], params[q:]))
    if model.kind == "skew":
        n = model.params[0]
        v, w = params[:n], params[n:]
        return StratumPoint(model, linalg.mat_sub(_outer(v, w), _outer(w, v)))
    x = CDElement(3, "Qi", tuple(params[0:8]))
    y = CDElement(3, "Qi", tuple(params[8:16]))
    w = cd_scalar(params[16], 3, "Qi")
    return StratumPoint(model, rank_one_from_vector("O_C", [x, y, w]))


def coords_vector(point: StratumPoint) -> list:
    """Flatten model coordinates into ambient_dim independent QI entries."""
    model = point.model
    if model.kind == "sym":
        r = model.params[0]
        return [point.coords[i][j] for i in range(r) for j in range(i, r)]
    if model.kind == "mat":
        return [x for row in point.coords for x in row]
    if model.kind == "skew":
        n = model.params[0]
        return [point.coords[i][j] for i in range(n) for j in range(i + 1, n)]
    x = point.coords
    out = [x.entry(i, i).scalar_part() for i in range(3)]
    for i, j in ((0, 1), (0, 2), (1, 2)):
        out.extend(x.entry(i, j).coeffs)
    return out


def _chart_jacobian_columns(model: PSpaceModel, block: list) -> list:
    # symmetric difference with unit step; exact because every chart is
    # quadratic in its parameters
    cols = []
    for t in range(len(block)):
        plus = list(block)
        minus = list(block)
        plus[t] = block[t] + 1
        minus[t] = block[t] - 1
        fp = coords_vector(chart_point(model, plus))
        fm = coords_vector(chart_point(model, minus))
        cols.append([(a - b) * HALF for a, b in zip(fp, fm)])
    return cols


def stratum_dimension(
    model: PSpaceModel,
    s: int,
    seed: int = 0,
    height: int = 5,
    attempts: int = 3,
) -> tuple[int, int]:
    """(cone_dim, proj_dim) of the rank-s stratum closure.

    Parameterizes the cone by s-fold sums of rank-one charts and takes the
    exact Jacobian rank at random rational points, maximized over several
    points; a degenerate draw can only underestimate, never overestimate.
    """
    if not 1 <= s <= model.max_rank:
        raise InputError(f"stratum index {s} outside 1..{model.max_rank}")
    ppc = chart_param_count(model)
    cap = min(model.ambient_dim, s * ppc)
    best = 0
    for attempt in range(attempts):
        rng = make_rng(seed, "stratum-dim", model.selector(), s, attempt, height)
        cols = []
        for _ in range(s):
            block = random_qi_vector(rng, ppc, height)
            cols.extend(_chart_jacobian_columns(model, block))
        best = max(best, linalg.rank(cols))
        if best == cap:
            break
    return best, best - 1


@dataclass(frozen=True)
class DefectData:
    model: PSpaceModel
    dim_x: int
    secant_proj_dims: tuple  # proj dim of S^i(X) for i = 0..max_rank-1
    ambient_proj_dim: int
    deltas: tuple
    k0: int
    scorza_ok: bool


def defects(model: PSpaceModel, seed: int = 0, height: int = 5) -> DefectData:
    """Secant defects, k0, and the two Scorza conditions, all from computed
    stratum dimensions."""
    if model.max_rank < 2:
        raise InputError("defect analysis needs max rank >= 2")
    dims = [stratum_dimension(model, s, seed=seed, height=height)[1]
            for s in range(1, model.max_rank + 1)]
    ambient = model.ambient_proj_dim
    dim_x = dims[0]
    k0 = next(i for i in range(1, model.max_rank) if dims[i] == ambient)
    deltas = tuple(
        dim_x + dims[i - 1] + 1 - dims[i] for i in range(1, k0 + 1)
    )
    delta = deltas[0]
    cond_k0 = k0 == dim_x // delta
    cond_linear = all(deltas[i - 1] == i * delta for i in range(1, k0 + 1))
    return DefectData(
        model=model,
        dim_x=dim_x,
        secant_proj_dims=tuple(dims),
        ambient_proj_dim=ambient,
        deltas=deltas,
        k0=k0,
        scorza_ok=cond_k0 and cond_linear,
    )


# --- rank-one peeling -------------------------------------------------------------

def peel_rank_one(point: StratumPoint) -> list:
    """Decompose an exact sym/mat/skew point into rank_of-many rank-1
    summands that re-sum to it exactly (Wedderburn elimination)."""
    model = point.model
    if model.kind == "exc27":
        raise UnsupportedError("peeling is implemented for the matrix models only")
    a = [row[:] for row in point.coords]
    out = []
    guard = 0
    while not linalg.is_zero_matrix(a):
        guard += 1
        if guard > model.ambient_dim + 2:
            raise RuntimeError("peeling failed to terminate")
        if model.kind == "mat":
            i, j = _first_nonzero(a)
            col = [row[j] for row in a]
            piece = linalg.mat_scale(_outer(col, a[i]), 1 / a[i][j])
        elif model.kind == "sym":
            n = len(a)
            i = next((t for t in range(n) if a[t][t]), None)
            if i is not None:
                col = [row[i] for row in a]
                piece = linalg.mat_scale(_outer(col, col), 1 / a[i][i])
            else:
                # zero diagonal: use v = e_i + e_j with a_ij != 0, so that
                # v^t A v = 2 a_ij is a usable pivot
                i, j = _first_nonzero(a)
                u = [row[i] + row[j] for row in a]
                pivot = u[i] + u[j]
                piece = linalg.mat_scale(_outer(u, u), 1 / pivot)
        else:
            i, j = _first_nonzero(a)
            ci = [row[i] for row in a]
            cj = [row[j] for row in a]
            piece = linalg.mat_scale(
                linalg.mat_sub(_outer(ci, cj), _outer(cj, ci)), 1 / a[i][j]
            )
        out.append(StratumPoint(model, piece))
        a = linalg.mat_sub(a, piece)
    return out


def _first_nonzero(a: list) -> tuple[int, int]:
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x:
                return i, j
    raise RuntimeError("no nonzero entry")

"""Exact linear algebra over Gaussian rationals.

Matrices are plain lists of lists of QI. Rank uses fraction-free Bareiss
elimination over the Gaussian integers after clearing denominators row by
row, which keeps entry growth polynomial and every division exact.
"""

from __future__ import annotations

from math import lcm

from .errors import InputError
from .scalars import QI, QI_ONE, QI_ZERO

Matrix = list  # list[list[QI]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[QI_ZERO for _ in range(cols)] for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[QI_ONE if i == j else QI_ZERO for j in range(n)] for i in range(n)]


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0]) if m else 0


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    _require_same_shape(a, b)
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    _require_same_shape(a, b)
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a: Matrix) -> Matrix:
    return [[-x for x in row] for row in a]


def mat_scale(a: Matrix, s) -> Matrix:
    return [[x * s for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise InputError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([_dot(row, col) for col in bt])
    return out


def _dot(u, v) -> QI:
    acc = QI_ZERO
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc


def mat_vec(a: Matrix, v: list) -> list:
    return [_dot(row, v) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(row) for row in zip(*a)]


def conj_transpose(a: Matrix) -> Matrix:
    return [[x.conjugate() for x in row] for row in zip(*a)]


def mat_conj(a: Matrix) -> Matrix:
    return [[x.conjugate() for x in row] for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def is_real_matrix(a: Matrix) -> bool:
    return all(x.is_real() for row in a for x in row)


# --- rank ------------------------------------------------------------------

def rank(m: Matrix) -> int:
    """Exact rank over Q(i) by fraction-free elimination on Gaussian integers."""
    if not m or not m[0]:
        return 0
    work = []
    for row in m:
        scale = 1
        for x in row:
            scale = lcm(scale, x.re.denominator, x.im.denominator)
        work.append([(int(x.re * scale), int(x.im * scale)) for x in row])
    rows, cols = len(work), len(work[0])
    prev = (1, 0)
    r = 0
    for c in range(cols):
        pivot_row = None
        best = None
        for i in range(r, rows):
            a, b = work[i][c]
            if a or b:
                size = a * a + b * b
                if best is None or size < best:
                    best, pivot_row = size, i
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        for i in range(r + 1, rows):
            fi = work[i][c]
            rowi = work[i]
            rowr = work[r]
            if fi == (0, 0):
                for j in range(c + 1, cols):
                    rowi[j] = _zdiv(_zmul(pv, rowi[j]), prev)
            else:
                for j in range(c + 1, cols):
                    rowi[j] = _zdiv(
                        _zsub(_zmul(pv, rowi[j]), _zmul(fi, rowr[j])), prev
                    )
            rowi[c] = (0, 0)
        prev = pv
        r += 1
        if r == rows:
            break
    return r


def rank_gauss(m: Matrix) -> int:
    """Plain division-based Gaussian rank; independent cross-check for rank()."""
    if not m or not m[0]:
        return 0
    work = [row[:] for row in m]
    rows, cols = shape(work)
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        for i in range(r + 1, rows):
            if work[i][c]:
                f = work[i][c] / pv
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == rows:
            break
    return r


def _zmul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _zsub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _zdiv(x, y):
    # exact division in Z[i]; Bareiss guarantees divisibility
    a, b = x
    c, d = y
    n = c * c + d * d
    re, r1 = divmod(a * c + b * d, n)
    im, r2 = divmod(b * c - a * d, n)
    if r1 or r2:
        raise RuntimeError("inexact Gaussian-integer division in Bareiss step")
    return (re, im)


# --- determinant, inverse, Pfaffian ---------------------------------------

def det(m: Matrix) -> QI:
    n, c = shape(m)
    if n != c:
        raise InputError("determinant needs a square matrix")
    if n == 0:
        return QI_ONE
    work = [row[:] for row in m]
    acc = QI_ONE
    sign = 1
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if work[i][col]), None)
        if pivot_row is None:
            return QI_ZERO
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            sign = -sign
        pv = work[col][col]
        acc = acc * pv
        for i in range(col + 1, n):
            if work[i][col]:
                f = work[i][col] / pv
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return acc if sign > 0 else -acc


def inverse(m: Matrix) -> Matrix:
    n, c = shape(m)
    if n != c:
        raise InputError("inverse needs a square matrix")
    work = [row[:] + ident_row for row, ident_row in zip(m, identity(n))]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if work[i][col]), None)
        if pivot_row is None:
            raise InputError("matrix is singular")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]


def is_skew(m: Matrix) -> bool:
    n, c = shape(m)
    if n != c:
        return False
    return all(m[i][j] == -m[j][i] for i in range(n) for j in range(i, n))


def pfaffian(m: Matrix) -> QI:
    """Pfaffian of an even skew-symmetric matrix by memoized expansion."""
    n, c = shape(m)
    if n != c or not is_skew(m):
        raise InputError("pfaffian needs a square skew-symmetric matrix")
    if n % 2:
        raise InputError("pfaffian is defined for even-sized matrices")
    memo: dict = {}

    def pf(idx: tuple) -> QI:
        if not idx:
            return QI_ONE
        hit = memo.get(idx)
        if hit is not None:
            return hit
        i0 = idx[0]
        total = QI_ZERO
        sign = 1
        for pos in range(1, len(idx)):
            j = idx[pos]
            a = m[i0][j]
            if a:
                rest = idx[1:pos] + idx[pos + 1 :]
                term = a * pf(rest)
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[idx] = total
        return total

    return pf(tuple(range(n)))


def _require_same_shape(a: Matrix, b: Matrix):
    if shape(a) != shape(b):
        raise InputError(f"shape mismatch: {shape(a)} vs {shape(b)}")


def matrix_to_json(m: Matrix) -> list:
    return [[x.to_json() for x in row] for row in m]


def matrix_from_json(rows: list) -> Matrix:
    return [[QI.from_json(x) for x in row] for row in rows]

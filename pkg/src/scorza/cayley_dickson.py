"""Cayley-Dickson composition algebras with exact scalars.

Levels 0..3 over field tag "Q" give the real, complex, quaternion, and
octonion algebras with rational coordinates; the same structure constants
over tag "Qi" (Gaussian-rational scalars) give their complexifications.
The doubling convention is fixed once as

    (a, b) * (c, d) = (a*c - conj(d)*b,  d*a + b*conj(c))

and a basis product table per level is generated from it at import time;
the recursion is kept as the reference path for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from random import Random

from .errors import InputError
from .scalars import QI, QI_ONE, QI_ZERO
from .sampling import random_qi

FIELD_Q = "Q"
FIELD_QI = "Qi"
FIELDS = (FIELD_Q, FIELD_QI)

MAX_LEVEL = 3  # octonions; sedenions are out of scope

LEVEL_NAMES = {0: "R", 1: "C", 2: "H", 3: "O"}


@dataclass(frozen=True)
class CDElement:
    level: int
    field: str
    coeffs: tuple

    def __post_init__(self):
        if not 0 <= self.level <= MAX_LEVEL:
            raise InputError(f"level {self.level} outside 0..{MAX_LEVEL}")
        if self.field not in FIELDS:
            raise InputError(f"unknown field tag {self.field!r}")
        if len(self.coeffs) != 1 << self.level:
            raise InputError(
                f"level {self.level} needs {1 << self.level} coefficients, "
                f"got {len(self.coeffs)}"
            )
        if self.field == FIELD_Q and any(not c.is_real() for c in self.coeffs):
            raise InputError("field tag Q requires real rational coefficients")

    def _require_match(self, other: "CDElement"):
        if self.level != other.level or self.field != other.field:
            raise InputError(
                f"algebra mismatch: level {self.level}/{self.field} vs "
                f"level {other.level}/{other.field}"
            )

    def __add__(self, other: "CDElement") -> "CDElement":
        self._require_match(other)
        return CDElement(
            self.level, self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "CDElement") -> "CDElement":
        self._require_match(other)
        return CDElement(
            self.level, self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CDElement":
        return CDElement(self.level, self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CDElement") -> "CDElement":
        self._require_match(other)
        da, a = self.int_form()
        db, b = other.int_form()
        out = _mul_int(_TABLES[self.level], a, b, 1 << self.level)
        return _from_int(self.level, self.field, out, da * db)

    def int_form(self) -> tuple:
        """Cached (den, flat) with flat = interleaved integer re/im pairs."""
        cached = getattr(self, "_intform", None)
        if cached is not None:
            return cached
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.re.denominator, c.im.denominator)
        flat = []
        for c in self.coeffs:
            flat.append(int(c.re * den))
            flat.append(int(c.im * den))
        value = (den, flat)
        object.__setattr__(self, "_intform", value)
        return value

    def scale(self, s) -> "CDElement":
        s = s if isinstance(s, QI) else QI(s)
        if self.field == FIELD_Q and not s.is_real():
            raise InputError("cannot scale a Q-tagged element by a complex scalar")
        return CDElement(self.level, self.field, tuple(c * s for c in self.coeffs))

    def conjugate(self) -> "CDElement":
        # scalar part fixed, imaginary basis part negated; the complex
        # scalars of a Qi-tagged element are untouched (C-linear involution)
        return CDElement(
            self.level,
            self.field,
            (self.coeffs[0],) + tuple(-c for c in self.coeffs[1:]),
        )

    def norm(self) -> QI:
        acc = QI_ZERO
        for c in self.coeffs:
            if c:
                acc = acc + c * c
        return acc

    def trace(self) -> QI:
        return self.coeffs[0] + self.coeffs[0]

    def scalar_part(self) -> QI:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def is_scalar(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def embed(self, level: int) -> "CDElement":
        """Embed into a higher level by zero-padding (subalgebra inclusion)."""
        if level < self.level or level > MAX_LEVEL:
            raise InputError(f"cannot embed level {self.level} into level {level}")
        pad = (1 << level) - len(self.coeffs)
        return CDElement(level, self.field, self.coeffs + (QI_ZERO,) * pad)

    def to_json(self) -> dict:
        return {"level": self.level, "coeffs": [c.to_json() for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict, field: str | None = None) -> "CDElement":
        coeffs = tuple(QI.from_json(c) for c in data["coeffs"])
        if field is None:
            field = FIELD_Q if all(c.is_real() for c in coeffs) else FIELD_QI
        return CDElement(int(data["level"]), field, coeffs)


# --- named operation aliases -------------------------------------------------

def cd_multiply(x: CDElement, y: CDElement) -> CDElement:
    return x * y


def conjugate(x: CDElement) -> CDElement:
    return x.conjugate()


def norm_form(x: CDElement) -> QI:
    return x.norm()


def real_trace(x: CDElement) -> QI:
    return x.trace()


# --- constructors -----------------------------------------------------------

def cd_zero(level: int, field: str = FIELD_Q) -> CDElement:
    return CDElement(level, field, (QI_ZERO,) * (1 << level))


def cd_one(level: int, field: str = FIELD_Q) -> CDElement:
    return cd_basis(level, 0, field)


def cd_basis(level: int, k: int, field: str = FIELD_Q) -> CDElement:
    n = 1 << level
    if not 0 <= k < n:
        raise InputError(f"basis index {k} outside 0..{n - 1}")
    return CDElement(level, field, tuple(QI_ONE if i == k else QI_ZERO for i in range(n)))


def cd_scalar(s, level: int, field: str = FIELD_Q) -> CDElement:
    s = s if isinstance(s, QI) else QI(s)
    if field == FIELD_Q and not s.is_real():
        raise InputError("Q-tagged scalar must be real")
    pad = (1 << level) - 1
    return CDElement(level, field, (s,) + (QI_ZERO,) * pad)


def random_cd(rng: Random, level: int, field: str = FIELD_Q, height: int = 10) -> CDElement:
    real = field == FIELD_Q
    return CDElement(
        level, field, tuple(random_qi(rng, height, real=real) for _ in range(1 << level))
    )


# --- integer product kernel --------------------------------------------------

def _mul_int(table, a: list, b: list, m: int) -> list:
    """Table-driven product on interleaved integer coefficient planes."""
    out = [0] * (2 * m)
    for i in range(m):
        ar = a[2 * i]
        ai = a[2 * i + 1]
        if not ar and not ai:
            continue
        row = table[i]
        for j in range(m):
            br = b[2 * j]
            bi = b[2 * j + 1]
            if not br and not bi:
                continue
            k, sign = row[j]
            pr = ar * br - ai * bi
            pi = ar * bi + ai * br
            if sign > 0:
                out[2 * k] += pr
                out[2 * k + 1] += pi
            else:
                out[2 * k] -= pr
                out[2 * k + 1] -= pi
    return out


def _from_int(level: int, field: str, flat: list, den: int) -> CDElement:
    g = den
    for v in flat:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        den //= g
        flat = [v // g for v in flat]
    coeffs = tuple(
        QI._mk(Fraction(flat[2 * k], den), Fraction(flat[2 * k + 1], den))
        for k in range(len(flat) // 2)
    )
    return CDElement(level, field, coeffs)


# --- reference recursion and generated product tables -----------------------

def _tuple_conj(t: tuple) -> tuple:
    if len(t) == 1:
        return t
    h = len(t) // 2
    return _tuple_conj(t[:h]) + tuple(-c for c in t[h:])


def _tuple_mul(x: tuple, y: tuple) -> tuple:
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    left = tuple(
        p - q for p, q in zip(_tuple_mul(a, c), _tuple_mul(_tuple_conj(d), b))
    )
    right = tuple(
        p + q for p, q in zip(_tuple_mul(d, a), _tuple_mul(b, _tuple_conj(c)))
    )
    return left + right


def reference_multiply(x: CDElement, y: CDElement) -> CDElement:
    """Product via the doubling recursion itself; table cross-check path."""
    x._require_match(y)
    return CDElement(x.level, x.field, _tuple_mul(x.coeffs, y.coeffs))


def _build_tables():
    tables = []
    for level in range(MAX_LEVEL + 1):
        n = 1 << level
        basis = [
            tuple(QI_ONE if i == k else QI_ZERO for i in range(n)) for k in range(n)
        ]
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                prod = _tuple_mul(basis[i], basis[j])
                entries = [(k, c) for k, c in enumerate(prod) if c]
                if len(entries) != 1 or entries[0][1] not in (QI_ONE, -QI_ONE):
                    raise RuntimeError("basis product is not a signed basis element")
                k, c = entries[0]
                row.append((k, 1 if c == QI_ONE else -1))
            table.append(row)
        tables.append(table)
    return tables


_TABLES = _build_tables()


def associativity_counterexample(field: str = FIELD_Q):
    """A basis triple of the octonions with (ab)c != a(bc), found by search."""
    for i in range(1, 8):
        for j in range(1, 8):
            for k in range(1, 8):
                a, b, c = (cd_basis(3, t, field) for t in (i, j, k))
                lhs = (a * b) * c
                rhs = a * (b * c)
                if lhs != rhs:
                    return (i, j, k), lhs, rhs
    raise RuntimeError("octonions unexpectedly associative")

"""Deterministic seed derivation and exact random generators.

Every sampling routine in the package derives its RNG through derive_seed,
a counter-based sha256 scheme, so trial k of any run is reproducible in
isolation and results never depend on Python hash randomization.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .scalars import QI


def derive_seed(*parts) -> int:
    data = ":".join(str(p) for p in parts).encode()
    return int.from_bytes(hashlib.sha256(data).digest()[:8], "big")


def make_rng(*parts) -> random.Random:
    return random.Random(derive_seed(*parts))


def random_fraction(rng: random.Random, height: int = 10, nonzero: bool = False) -> Fraction:
    while True:
        f = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if f or not nonzero:
            return f


def random_qi(
    rng: random.Random, height: int = 10, real: bool = False, nonzero: bool = False
) -> QI:
    while True:
        re = random_fraction(rng, height)
        im = Fraction(0) if real else random_fraction(rng, height)
        q = QI(re, im)
        if q or not nonzero:
            return q


def random_qi_vector(
    rng: random.Random, n: int, height: int = 10, real: bool = False
) -> list:
    return [random_qi(rng, height, real=real) for _ in range(n)]


def random_qi_matrix(
    rng: random.Random, rows: int, cols: int, height: int = 10, real: bool = False
) -> list:
    return [random_qi_vector(rng, cols, height, real=real) for _ in range(rows)]

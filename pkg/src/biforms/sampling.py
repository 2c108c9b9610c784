"""Seeded random generators for forms, matrices and subspaces.

Sampling policy: coefficients are integers in [-9, 9] drawn from an explicit
random.Random instance, so every sampled object is reproducible from the seed
recorded in a report.  Generators that must return nonzero/full-rank objects
resample (the degenerate draws have vanishing probability but the loop keeps
the contracts unconditional).
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .actions import GroupPair, LiePair
from .forms import BiForm, BinaryForm, binary_basis, biform_basis
from .linalg import QMat, Subspace, rref
from .poly import MPoly, RING_BI, RING_XY

COEFF_RANGE = (-9, 9)


def rand_coeff(rng: Random) -> Fraction:
    return Fraction(rng.randint(*COEFF_RANGE))


def random_binary_form(rng: Random, d: int, nonzero=True) -> BinaryForm:
    while True:
        terms = {}
        for e in binary_basis(d):
            c = rand_coeff(rng)
            if c:
                terms[e] = c
        f = BinaryForm(d, MPoly(RING_XY, terms))
        if not (nonzero and f.is_zero()):
            return f


def random_biform(rng: Random, a: int, b: int, nonzero=True) -> BiForm:
    while True:
        terms = {}
        for e in biform_basis(a, b):
            c = rand_coeff(rng)
            if c:
                terms[e] = c
        f = BiForm((a, b), MPoly(RING_BI, terms))
        if not (nonzero and f.is_zero()):
            return f


def random_subspace(rng: Random, ambient_dim: int, dim: int) -> Subspace:
    """Random dim-dimensional subspace of Q^ambient_dim."""
    while True:
        rows = [[rand_coeff(rng) for _ in range(ambient_dim)] for _ in range(dim)]
        reduced, rk, _ = rref(QMat(rows))
        if rk == dim:
            return Subspace(ambient_dim, QMat(reduced.entries[:rk]))


def random_sl2(rng: Random, spread: int = 3):
    """Random determinant-1 2x2 integer matrix (product of shears)."""
    def shear_u(k):
        return ((Fraction(1), Fraction(k)), (Fraction(0), Fraction(1)))
    def shear_l(k):
        return ((Fraction(1), Fraction(0)), (Fraction(k), Fraction(1)))
    def mul2(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
            for i in range(2)
        )
    m = shear_u(rng.randint(-spread, spread))
    m = mul2(m, shear_l(rng.randint(-spread, spread)))
    m = mul2(m, shear_u(rng.randint(-spread, spread)))
    return m


def random_sl_pair(rng: Random) -> GroupPair:
    return GroupPair(random_sl2(rng), random_sl2(rng))


def random_invertible2(rng: Random):
    while True:
        m = ((rand_coeff(rng), rand_coeff(rng)), (rand_coeff(rng), rand_coeff(rng)))
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
            return m


def random_group_pair(rng: Random) -> GroupPair:
    return GroupPair(random_invertible2(rng), random_invertible2(rng))


def random_traceless(rng: Random):
    a = rand_coeff(rng)
    return ((a, rand_coeff(rng)), (rand_coeff(rng), -a))


def random_lie_pair(rng: Random) -> LiePair:
    return LiePair(random_traceless(rng), random_traceless(rng))

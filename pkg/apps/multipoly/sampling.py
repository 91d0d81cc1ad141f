"""
Seeded random forms. Every generator takes an explicit seed; there is no
module-level random state.
"""
import hashlib

from django.conf import settings
from django.db import models
import numpy as np

from apps.exactla.matrix import ExactMatrix, matrix_rank

from .monomials import monomials_of_degree
from .polynomial import Polynomial


class CoefficientPolicy(models.TextChoices):
    # small integers in [-B, B] over Q, uniform residues over F_p
    GENERIC = 'generic', 'Generic'
    # as GENERIC, but each coefficient is zeroed with probability 1/2
    SPARSE = 'sparse', 'Sparse'


def derive_seed(master_seed, index):
    """64-bit mix of (master seed, index); independent of evaluation order."""
    digest = hashlib.blake2b(f'{master_seed}:{index}'.encode(), digest_size=8).digest()
    return int.from_bytes(digest, 'big')


def _draw(rng, field, count):
    if field.is_rational:
        bound = getattr(settings, 'RANDOM_COEFFICIENT_BOUND', 9)
        return [int(x) for x in rng.integers(-bound, bound + 1, size=count)]
    return [int(x) for x in rng.integers(0, field.characteristic, size=count)]


def random_homogeneous(num_vars, d, field, seed, coeff_policy=CoefficientPolicy.GENERIC):
    """
    Random nonzero form of degree d. Deterministic in ``seed``.
    """
    rng = np.random.default_rng(seed)
    basis = monomials_of_degree(num_vars, d)
    while True:
        coefficients = _draw(rng, field, len(basis))
        if coeff_policy == CoefficientPolicy.SPARSE:
            keep = rng.random(len(basis)) < 0.5
            coefficients = [c if k else 0 for c, k in zip(coefficients, keep)]
        poly = Polynomial(field, num_vars, dict(zip(basis, coefficients)))
        if not poly.is_zero():
            return poly


def random_linear_form(num_vars, field, seed):
    return random_homogeneous(num_vars, 1, field, seed)


def random_invertible_matrix(field, n, seed):
    rng = np.random.default_rng(seed)
    while True:
        rows = [_draw(rng, field, n) for _ in range(n)]
        A = ExactMatrix.from_rows(field, rows, n)
        if matrix_rank(A) == n:
            return A

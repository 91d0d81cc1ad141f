"""
Linear substitutions: changes of coordinates and restriction to hyperplanes.
"""
from apps.exactla.exceptions import SingularMatrixError
from apps.exactla.matrix import ExactMatrix, inverse, matrix_rank

from .exceptions import ZeroFormError
from .polynomial import Polynomial


def substitute(F, images):
    """
    F(images[0], ..., images[n]) where all images share a ring.
    """
    if len(images) != F.num_vars:
        raise ValueError(f'{len(images)} images for {F.num_vars} variables')
    target = images[0]
    result = Polynomial.zero(F.field, target.num_vars)
    powers = {}
    for mono, coeff in F.terms.items():
        term = Polynomial.constant(F.field, target.num_vars, coeff)
        for i, e in enumerate(mono):
            if e == 0:
                continue
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            term = term * powers[key]
        result = result + term
    return result


def linear_images(A):
    """The forms sum_j A[i][j] x_j, one per row of A."""
    return [Polynomial.linear(A.field, A.row(i)) for i in range(A.rows)]


def change_of_coordinates(F, A):
    """
    F composed with x -> A·x, i.e. x_i replaced by sum_j A[i][j] x_j.
    """
    if A.rows != A.cols or A.rows != F.num_vars:
        raise SingularMatrixError(f'need an invertible {F.num_vars}x{F.num_vars} matrix')
    if matrix_rank(A) < A.rows:
        raise SingularMatrixError('change of coordinates must be invertible')
    return substitute(F, linear_images(A))


def hyperplane_pivot(L):
    """Smallest index with a nonzero coefficient in L."""
    coefficients = L.linear_coefficients()
    return next(i for i, c in enumerate(coefficients) if c != 0)


def coordinates_sending_L_to_X0(L):
    """
    Invertible A with change_of_coordinates(L, A) == x0.

    The new coordinates are y0 = L and y_k = x_j for the other indices j in
    increasing order; A is the inverse of that coordinate matrix.
    """
    coefficients = L.linear_coefficients()
    field = L.field
    p = hyperplane_pivot(L)
    n = L.num_vars
    rows = [list(coefficients)]
    for j in range(n):
        if j != p:
            rows.append([field.one if k == j else field.zero for k in range(n)])
    B = ExactMatrix.from_rows(field, rows, n)
    return inverse(B)


def restrict_to_hyperplane(F, L):
    """
    F restricted to {L = 0}: the pivot variable of L is eliminated and the
    remaining variables are renumbered x0..x(n-1) in order.
    """
    coefficients = L.linear_coefficients()
    if all(c == 0 for c in coefficients):
        raise ZeroFormError('hyperplane needs a nonzero linear form')
    field = F.field
    p = hyperplane_pivot(L)
    m = F.num_vars - 1
    scale = field.neg(field.inv(coefficients[p]))
    images = []
    k = 0
    for i in range(F.num_vars):
        if i == p:
            solved = [field.mul(scale, coefficients[j]) for j in range(F.num_vars) if j != p]
            images.append(Polynomial.linear(field, solved))
        else:
            images.append(Polynomial.variable(field, m, k))
            k += 1
    return substitute(F, images)

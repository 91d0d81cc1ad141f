"""
Graded pieces of homogeneous ideals and of the Jacobian ring R/J, handled as
finite-dimensional linear algebra one degree at a time.
"""
from dataclasses import dataclass
import logging

from apps.exactla.matrix import ExactMatrix, rank_of_rows, reduce_vector, row_basis
from apps.multipoly.exceptions import NotHomogeneousError
from apps.multipoly.monomials import monomial_index, monomials_of_degree, ring_dimension
from apps.multipoly.polynomial import Polynomial

from .exceptions import ConstantFormError, DegreeMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealPiece:
    """
    I_k as RREF rows in the monomial coordinates of R_k. The standard
    (non-pivot) monomials give a basis of (R/I)_k.
    """
    degree: int
    basis: ExactMatrix
    pivots: tuple
    pivot_monomials: tuple
    standard_monomials: tuple
    standard_columns: tuple

    @property
    def dimension(self):
        return len(self.pivots)

    @property
    def quotient_dimension(self):
        return len(self.standard_monomials)


class GradedIdeal:
    """
    Ideal generated by homogeneous polynomials. Pieces are computed on demand
    and published once per degree.
    """

    def __init__(self, field, num_vars, generators):
        self.field = field
        self.num_vars = num_vars
        self.generators = tuple(g for g in generators if not g.is_zero())
        for g in self.generators:
            if not g.is_homogeneous():
                raise NotHomogeneousError(f'generator {g} is not homogeneous')
        self._pieces = {}
        self._ranks = {}

    def generator_rows(self, k):
        """Coordinates of m·g for every generator g and monomial m of degree k - deg g."""
        index = monomial_index(self.num_vars, k)
        width = len(index)
        rows = []
        for g in self.generators:
            e = g.degree
            if e > k:
                continue
            terms = list(g.terms.items())
            for m in monomials_of_degree(self.num_vars, k - e):
                row = [self.field.zero] * width
                for mono, coeff in terms:
                    row[index[tuple(a + b for a, b in zip(mono, m))]] = coeff
                rows.append(row)
        return rows

    def piece(self, k):
        if k < 0:
            raise DegreeMismatchError(f'degree must be non-negative, got {k}')
        cached = self._pieces.get(k)
        if cached is not None:
            return cached
        monomials = monomials_of_degree(self.num_vars, k)
        basis, pivots = row_basis(self.field, self.generator_rows(k), len(monomials))
        pivot_set = set(pivots)
        standard_columns = tuple(j for j in range(len(monomials)) if j not in pivot_set)
        piece = IdealPiece(
            degree=k,
            basis=basis,
            pivots=pivots,
            pivot_monomials=tuple(monomials[j] for j in pivots),
            standard_monomials=tuple(monomials[j] for j in standard_columns),
            standard_columns=standard_columns,
        )
        logger.debug(f'I_{k}: dim {piece.dimension}, quotient dim {piece.quotient_dimension}')
        return self._pieces.setdefault(k, piece)

    def rank(self, k):
        """dim I_k, without building a basis unless one is cached."""
        if k in self._pieces:
            return self._pieces[k].dimension
        if k not in self._ranks:
            width = ring_dimension(self.num_vars, k)
            self._ranks.setdefault(k, rank_of_rows(self.field, self.generator_rows(k), width))
        return self._ranks[k]

    def quotient_dimension(self, k):
        return ring_dimension(self.num_vars, k) - self.rank(k)


class JacobianRingModel:
    """
    F with its partial derivatives and the graded data of J = (F'_0..F'_n)
    and R/J.
    """

    def __init__(self, F):
        if F.is_zero():
            raise ConstantFormError('the zero polynomial has no Jacobian ring')
        if not F.is_homogeneous():
            raise NotHomogeneousError(f'{F} is not homogeneous')
        if F.degree < 2:
            raise ConstantFormError(f'need degree >= 2, got {F.degree}')
        self.form = F
        self.field = F.field
        self.num_vars = F.num_vars
        self.degree = F.degree
        self.partials = tuple(F.derivative(i) for i in range(F.num_vars))
        self.ideal = GradedIdeal(F.field, F.num_vars, self.partials)

    @property
    def n(self):
        """Projective dimension of the ambient space."""
        return self.num_vars - 1

    def ideal_piece(self, k):
        return self.ideal.piece(k)

    def hilbert_value(self, k):
        return self.ideal.quotient_dimension(k)

    def hilbert_function(self, max_degree):
        return [self.hilbert_value(k) for k in range(max_degree + 1)]

    def coset_basis(self, k):
        return list(self.ideal_piece(k).standard_monomials)

    def reduce_mod_ideal(self, G, degree=None):
        """
        Normal form of [G] in coordinates on coset_basis(degree).
        """
        if degree is None:
            if G.is_zero():
                raise DegreeMismatchError('give the degree explicitly for the zero polynomial')
            degree = G.degree
        if G.num_vars != self.num_vars:
            raise DegreeMismatchError(f'{G} lives in {G.num_vars} variables, not {self.num_vars}')
        try:
            vector = G.to_vector(degree)
        except NotHomogeneousError:
            raise DegreeMismatchError(f'{G} is not homogeneous of degree {degree}') from None
        piece = self.ideal_piece(degree)
        reduced = reduce_vector(self.field, vector, piece.basis.entries, piece.pivots)
        return tuple(reduced[j] for j in piece.standard_columns)

    def is_zero_class(self, G, degree=None):
        return all(x == 0 for x in self.reduce_mod_ideal(G, degree))

    def class_representative(self, degree, coordinates):
        """The polynomial sum c_m·m over the standard monomials of ``degree``."""
        standard = self.ideal_piece(degree).standard_monomials
        terms = {m: c for m, c in zip(standard, coordinates)}
        return Polynomial(self.field, self.num_vars, terms)


def build_jacobian_ring(F):
    return JacobianRingModel(F)


def ideal_piece(jr, k):
    return jr.ideal_piece(k)


def hilbert_value(jr, k):
    return jr.hilbert_value(k)


def coset_basis(jr, k):
    return jr.coset_basis(k)


def reduce_mod_ideal(jr, G, degree=None):
    return jr.reduce_mod_ideal(G, degree)

"""
Multiplication by a linear form between consecutive graded pieces of the
Jacobian ring, and the searches for forms that make it injective.
"""
from dataclasses import dataclass
from itertools import product
import logging

from django.conf import settings
from django.db import models

from apps.exactla.matrix import ExactMatrix, kernel_basis
from apps.jacobian.ring import JacobianRingModel
from apps.multipoly.exceptions import VariableIndexError
from apps.multipoly.polynomial import Polynomial
from apps.multipoly.sampling import derive_seed, random_linear_form

from .exceptions import EnumerationRefusedError, LefschetzError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiplicationMap:
    """
    Matrix of [G] -> [L·G] from (R/J)_a to (R/J)_{a+1}, in the coset bases
    of standard monomials. Kernel vectors are coordinates on the source basis.
    """
    source_degree: int
    target_degree: int
    form: Polynomial
    matrix: ExactMatrix
    rank: int
    kernel: tuple
    source_basis: tuple
    target_basis: tuple

    @property
    def kernel_dimension(self):
        return len(self.kernel)

    @property
    def is_injective(self):
        return not self.kernel

    def kernel_polynomials(self):
        field = self.form.field
        return [
            Polynomial(field, self.form.num_vars, dict(zip(self.source_basis, vector)))
            for vector in self.kernel
        ]


class WlpOutcome(models.TextChoices):
    WITNESS_FOUND = 'witness_found', 'Witness found'
    ALL_TRIALS_FAILED = 'all_trials_failed', 'All trials failed'
    EXHAUSTED_ALL_FORMS = 'exhausted_all_forms', 'Exhausted all forms'


@dataclass(frozen=True)
class WlpWitness:
    form: Polynomial
    degree: int
    trials: int
    outcome: str
    # (form, kernel dimension) for every form tried without success
    failures: tuple = ()

    @property
    def found(self):
        return self.outcome == WlpOutcome.WITNESS_FOUND


def multiplication_map(jr, L, a):
    """
    ×L: (R/J)_a -> (R/J)_{a+1}. Column j is the normal form of L·m_j for the
    j-th standard monomial m_j of degree a.
    """
    L.linear_coefficients()
    if L.num_vars != jr.num_vars or L.field != jr.field:
        raise VariableIndexError(f'{L} does not live in the ring of {jr.form}')
    source = tuple(jr.coset_basis(a))
    target = tuple(jr.coset_basis(a + 1))
    field = jr.field
    columns = []
    for mono in source:
        product_form = L * Polynomial(field, jr.num_vars, {mono: field.one})
        columns.append(jr.reduce_mod_ideal(product_form, a + 1))
    rows = [[column[i] for column in columns] for i in range(len(target))]
    matrix = ExactMatrix.from_rows(field, rows, len(source))
    kernel = tuple(kernel_basis(matrix))
    return MultiplicationMap(
        source_degree=a,
        target_degree=a + 1,
        form=L,
        matrix=matrix,
        rank=len(source) - len(kernel),
        kernel=kernel,
        source_basis=source,
        target_basis=target,
    )


def wlp_injective(jr, L, a):
    """(injective?, kernel basis as degree-a polynomials)."""
    mm = multiplication_map(jr, L, a)
    return mm.is_injective, [jr.class_representative(a, v) for v in mm.kernel]


def wlp_search(jr, a, trials=None, seed=0):
    """
    Try random linear forms until ×L is injective on degree a. Trial t uses
    derive_seed(seed, t), so any execution order gives the same answer.
    """
    if trials is None:
        trials = getattr(settings, 'WLP_DEFAULT_TRIALS', 20)
    if trials < 1:
        raise LefschetzError(f'need at least one trial, got {trials}')
    for t in range(trials):
        L = random_linear_form(jr.num_vars, jr.field, derive_seed(seed, t))
        mm = multiplication_map(jr, L, a)
        logger.debug(f'trial {t}: {L} has kernel dimension {mm.kernel_dimension}')
        if not mm.is_injective:
            continue
        # rebuild from scratch so a stale cached piece cannot vouch for itself
        fresh = multiplication_map(JacobianRingModel(jr.form), L, a)
        if not fresh.is_injective:
            logger.error(f'witness {L} failed re-verification on {jr.form}')
            raise LefschetzError(f'witness {L} failed re-verification')
        logger.info(f'WLP witness in degree {a} for {jr.form}: {L} (trial {t + 1})')
        return WlpWitness(form=L, degree=a, trials=t + 1, outcome=WlpOutcome.WITNESS_FOUND)
    logger.info(f'no WLP witness in degree {a} for {jr.form} after {trials} trials')
    return WlpWitness(form=None, degree=a, trials=trials, outcome=WlpOutcome.ALL_TRIALS_FAILED)


def projective_linear_forms(field, num_vars):
    """
    One representative per projective class of nonzero linear forms over
    F_p: the first nonzero coefficient is 1.
    """
    p = field.characteristic
    for lead in range(num_vars):
        for tail in product(range(p), repeat=num_vars - lead - 1):
            yield Polynomial.linear(field, [0] * lead + [1] + list(tail))


def wlp_exhaustive(jr, a):
    """
    Visit every projective class of linear forms; return the first witness
    or certify that none exists.
    """
    field = jr.field
    if field.is_rational:
        raise EnumerationRefusedError('cannot enumerate the linear forms over Q')
    size = field.characteristic ** jr.num_vars
    bound = getattr(settings, 'WLP_ENUMERATION_BOUND', 100000)
    if size > bound:
        raise EnumerationRefusedError(f'{size} linear forms exceed the enumeration bound {bound}')
    failures = []
    for L in projective_linear_forms(field, jr.num_vars):
        mm = multiplication_map(jr, L, a)
        if mm.is_injective:
            return WlpWitness(form=L, degree=a, trials=len(failures) + 1,
                              outcome=WlpOutcome.WITNESS_FOUND, failures=tuple(failures))
        failures.append((L, mm.kernel_dimension))
    logger.info(f'no injective ×L in degree {a} among {len(failures)} classes of forms over {field.label}')
    return WlpWitness(form=None, degree=a, trials=len(failures),
                      outcome=WlpOutcome.EXHAUSTED_ALL_FORMS, failures=tuple(failures))

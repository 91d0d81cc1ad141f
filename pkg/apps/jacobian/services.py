"""
Smoothness decisions for projective hypersurfaces and "general" smooth
samples.
"""
from dataclasses import dataclass, field as dataclass_field
import logging
from math import comb

from django.conf import settings
from django.db import models
from sympy import Poly, symbols

from apps.exactla.exceptions import ZeroDivisionInFieldError
from apps.exactla.fields import FieldSpec
from apps.multipoly.polynomial import Polynomial
from apps.multipoly.sampling import derive_seed, random_homogeneous

from .exceptions import ConstantFormError, GenericSampleError
from .ring import GradedIdeal, JacobianRingModel

logger = logging.getLogger(__name__)


class SmoothnessStatus(models.TextChoices):
    SMOOTH = 'smooth', 'Smooth'
    SINGULAR = 'singular', 'Singular'
    UNKNOWN = 'unknown', 'Unknown'


class SmoothnessMethod(models.TextChoices):
    ARTINIAN_SOCLE = 'artinian_socle', 'Artinian socle test'
    EXTENDED_IDEAL_SWEEP = 'extended_ideal_sweep', 'Extended ideal sweep'


@dataclass(frozen=True)
class SmoothnessVerdict:
    status: str
    method: str
    # degree at which the decision fired, or the highest degree swept
    detail: int
    certified_modulo: int = None
    quotient_dimensions: dict = dataclass_field(default_factory=dict)

    @property
    def is_smooth(self):
        return self.status == SmoothnessStatus.SMOOTH


def socle_degree(n, d):
    """Top nonzero degree of R/J for a smooth degree-d form in n+1 variables."""
    if n < 1 or d < 2:
        raise ConstantFormError(f'need n >= 1 and d >= 2, got ({n}, {d})')
    return (n + 1) * (d - 2)


def expected_hilbert_function(n, d, max_degree):
    """
    Coefficients of ((1 - t^(d-1)) / (1 - t))^(n+1) up to ``max_degree``:
    the Hilbert function of R/J when the partials form a regular sequence.
    """
    t = symbols('t')
    series = Poly(sum(t ** i for i in range(d - 1)) ** (n + 1), t)
    coefficients = [int(c) for c in reversed(series.all_coeffs())]
    coefficients += [0] * (max_degree + 1 - len(coefficients))
    return coefficients[:max_degree + 1]


def macaulay_bound(h, k):
    """
    Macaulay's bound h^<k>: the largest possible dimension in degree k+1 of
    a standard graded algebra with dimension h in degree k.
    """
    if h <= 0 or k <= 0:
        return 0
    total = 0
    remaining = h
    i = k
    while remaining > 0 and i > 0:
        # largest a with C(a, i) <= remaining
        a = i
        while comb(a + 1, i) <= remaining:
            a += 1
        total += comb(a + 1, i + 1)
        remaining -= comb(a, i)
        i -= 1
    return total


def _certify_modulo_prime(F, k):
    """
    True when (R/J)_k vanishes for F reduced mod the certificate prime. Rank
    cannot grow under reduction, so this proves the same over Q.
    """
    p = getattr(settings, 'SMOOTHNESS_CERTIFICATE_PRIME', 2147483647)
    try:
        reduced = Polynomial(FieldSpec.prime(p), F.num_vars, dict(F.terms))
    except ZeroDivisionInFieldError:
        logger.warning(f'certificate prime {p} divides a denominator of {F}; using exact arithmetic')
        return False
    if reduced.degree != F.degree:
        return False
    return JacobianRingModel(reduced).hilbert_value(k) == 0


def smoothness_check(F, max_degree=None):
    """
    Decide whether the hypersurface F = 0 is smooth.

    When the characteristic does not divide d, X is smooth iff the partials
    have no common zero iff R/J is Artinian iff (R/J)_{sigma+1} = 0. Otherwise
    F joins the generators and degrees are swept up to ``max_degree``.
    """
    jr = JacobianRingModel(F)
    d = jr.degree
    sigma = socle_degree(jr.n, d)
    p = F.field.characteristic

    if p == 0 or d % p != 0:
        k = sigma + 1
        if F.field.is_rational and _certify_modulo_prime(F, k):
            prime = getattr(settings, 'SMOOTHNESS_CERTIFICATE_PRIME', 2147483647)
            logger.debug(f'{F}: smooth, certified modulo {prime}')
            return SmoothnessVerdict(SmoothnessStatus.SMOOTH, SmoothnessMethod.ARTINIAN_SOCLE, k,
                                     certified_modulo=prime)
        h = jr.hilbert_value(k)
        status = SmoothnessStatus.SMOOTH if h == 0 else SmoothnessStatus.SINGULAR
        logger.debug(f'{F}: dim (R/J)_{k} = {h}, {status}')
        return SmoothnessVerdict(status, SmoothnessMethod.ARTINIAN_SOCLE, k,
                                 quotient_dimensions={k: h})

    if max_degree is None:
        max_degree = sigma + getattr(settings, 'SMOOTHNESS_EXTRA_DEGREES', 4)
    ideal = GradedIdeal(F.field, F.num_vars, list(jr.partials) + [F])
    seen = {}
    previous = None
    for k in range(max_degree + 1):
        h = ideal.quotient_dimension(k)
        seen[k] = h
        if h == 0:
            return SmoothnessVerdict(SmoothnessStatus.SMOOTH, SmoothnessMethod.EXTENDED_IDEAL_SWEEP, k,
                                     quotient_dimensions=seen)
        # Gotzmann persistence: maximal growth past the generator degree
        # continues forever, so the quotient never vanishes.
        if previous is not None and k - 1 >= d and h == macaulay_bound(previous, k - 1):
            return SmoothnessVerdict(SmoothnessStatus.SINGULAR, SmoothnessMethod.EXTENDED_IDEAL_SWEEP, k,
                                     quotient_dimensions=seen)
        previous = h
    logger.warning(f'{F}: smoothness undecided up to degree {max_degree}')
    return SmoothnessVerdict(SmoothnessStatus.UNKNOWN, SmoothnessMethod.EXTENDED_IDEAL_SWEEP, max_degree,
                             quotient_dimensions=seen)


def random_smooth_form(num_vars, d, field, seed, trials=None):
    """
    Sample forms until one is smooth. Sample t uses derive_seed(seed, t).
    """
    if trials is None:
        trials = getattr(settings, 'GENERIC_TRIAL_BUDGET', 20)
    for t in range(trials):
        F = random_homogeneous(num_vars, d, field, derive_seed(seed, t))
        if smoothness_check(F).is_smooth:
            return F
    raise GenericSampleError(f'no smooth form of degree {d} in {num_vars} variables after {trials} samples')

"""
Characteristic-two Fermat cubic threefold: every ×ℓ from degree 2 to degree 3
of the Jacobian ring has a kernel.
"""
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
import logging

from apps.exactla.fields import FieldSpec
from apps.exactla.matrix import row_basis
from apps.jacobian.ring import JacobianRingModel
from apps.multipoly.parser import parse_polynomial
from apps.multipoly.polynomial import Polynomial

from .services import WlpOutcome, projective_linear_forms, wlp_exhaustive

logger = logging.getLogger(__name__)

FERMAT_CUBIC = 'x0^3 + x1^3 + x2^3 + x3^3 + x4^3'


@dataclass
class DemoReport:
    """Named boolean checks plus the numbers behind them."""
    name: str
    checks: dict = dataclass_field(default_factory=dict)
    details: dict = dataclass_field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values())

    def record(self, check, outcome):
        self.checks[check] = bool(outcome)
        if not outcome:
            logger.warning(f'{self.name}: check {check} failed')


def char2_fermat_demo():
    field = FieldSpec.prime(2)
    F = parse_polynomial(FERMAT_CUBIC, field, 5)
    jr = JacobianRingModel(F)
    x0 = Polynomial.variable(field, 5, 0)
    x1 = Polynomial.variable(field, 5, 1)
    report = DemoReport('char2-fermat')

    report.record('lm_nonzero_in_degree_2', not jr.is_zero_class(x0 * x1))
    report.record('l2m_zero_in_degree_3', jr.is_zero_class(x0 * x0 * x1))
    report.record('l_squared_zero_in_degree_2', jr.is_zero_class(x0 * x0))

    # squaring is additive in characteristic 2, so the squares span only {x_i^2}
    forms = list(projective_linear_forms(field, 5))
    squares, _ = row_basis(field, [(L * L).to_vector(2) for L in forms], 15)
    ideal = jr.ideal_piece(2)
    report.details['linear_forms'] = len(forms)
    report.details['squares_span_dimension'] = squares.rows
    report.details['ideal_dimension_2'] = ideal.dimension
    report.record('squares_span_ideal_in_degree_2', squares.entries == ideal.basis.entries)

    # over F_2 distinct nonzero forms are independent
    pairs = 0
    all_pairs_hold = True
    for l, m in combinations(forms, 2):
        pairs += 1
        for a, b in ((l, m), (m, l)):
            if jr.is_zero_class(a * b) or not jr.is_zero_class(a * a * b):
                all_pairs_hold = False
    report.details['independent_pairs'] = pairs
    report.record('every_independent_pair', all_pairs_hold)

    witness = wlp_exhaustive(jr, 2)
    report.details['forms_without_witness'] = len(witness.failures)
    report.details['kernel_dimensions'] = sorted({k for _, k in witness.failures})
    report.record('no_injective_form', witness.outcome == WlpOutcome.EXHAUSTED_ALL_FORMS and len(forms) == 31)
    return report

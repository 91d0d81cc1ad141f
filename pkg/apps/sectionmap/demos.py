"""
Scripted verifications on the Fermat cubic threefold and random cubics.
Each demo returns a DemoReport whose checks must all hold.
"""
import logging

from django.conf import settings

from apps.exactla.fields import FieldSpec
from apps.exactla.matrix import rank_of_rows
from apps.jacobian.ring import JacobianRingModel
from apps.jacobian.services import random_smooth_form
from apps.lefschetz.demos import FERMAT_CUBIC, DemoReport
from apps.lefschetz.services import multiplication_map
from apps.multipoly.parser import parse_polynomial
from apps.multipoly.polynomial import Polynomial
from apps.multipoly.sampling import derive_seed

from .services import (
    EtaleStatus,
    VectorField,
    crosscheck_report,
    etale_check,
    is_euler_only,
    koszul_linear_relations,
    sylvester_section,
)

logger = logging.getLogger(__name__)

CONE_CUBIC = 'x0^3 + x1^3 + x2^3 + x3^3'


def fermat_kernel_demo():
    Q = FieldSpec.rationals()
    F = parse_polynomial(FERMAT_CUBIC, Q, 5)
    x = [Polynomial.variable(Q, 5, i) for i in range(5)]
    report = DemoReport('fermat-kernel')

    verdict = etale_check(F, x[0])
    report.details['x0'] = {
        'status': verdict.status,
        'wlp_kernel_dimension': verdict.wlp_kernel_dimension,
        'tangent_kernel_dimension': verdict.tangent_kernel_dimension,
    }
    report.record('x0_not_etale', verdict.status == EtaleStatus.NOT_ETALE)
    report.record('x0_wlp_kernel', set(verdict.wlp_kernel) == {x[0] * x[j] for j in range(1, 5)})
    report.record('x0_tangent_kernel_dimension', verdict.tangent_kernel_dimension == 4)
    tangent = crosscheck_report(F, x[0]).tangent
    zero = Polynomial.zero(Q, 5)
    report.record('xi_d_dx0_in_tangent_kernel', all(
        tangent.contains(VectorField((x[i],) + (zero,) * 4)) for i in range(1, 5)
    ))
    report.record('x0_crosscheck', verdict.crosscheck_passed)

    diagonal = sum(x[1:], x[0])
    verdict = etale_check(F, diagonal)
    report.details['diagonal'] = {'status': verdict.status, 'jacobian_dimensions': verdict.jacobian_dimensions}
    report.record('diagonal_etale', verdict.status == EtaleStatus.ETALE and verdict.tangent_kernel_dimension == 0)

    verdict = etale_check(F, x[0] + x[1])
    report.record('tangent_hyperplane_singular', verdict.status == EtaleStatus.SECTION_SINGULAR)

    # sections of the Fermat cubic are sums of five cubes
    for name, L in (('x0', x[0]), ('diagonal', diagonal), ('x0-2x1', x[0] - x[1] * 2)):
        sylvester = sylvester_section(L)
        report.details[f'sylvester_{name}'] = [str(M) for M in sylvester.cubes]
        report.record(f'sylvester_{name}', sylvester.matches)
    return report


def contracted_lines_demo(t_values=None, index=1):
    """
    Hyperplanes x0 = t·x_i, i >= 1: ×(x0 - t·x_i) kills the classes of
    (x0 + t·x_i)·x_j for j not in {0, i}, since their product is
    (x0^2 - t^2·x_i^2)·x_j.
    """
    if t_values is None:
        t_values = getattr(settings, 'CONTRACTED_LINE_PARAMETERS', (0, 1, 2, 3))
    Q = FieldSpec.rationals()
    jr = JacobianRingModel(parse_polynomial(FERMAT_CUBIC, Q, 5))
    x = [Polynomial.variable(Q, 5, i) for i in range(5)]
    others = [j for j in range(1, 5) if j != index]
    report = DemoReport('contracted-lines')
    for t in t_values:
        L = x[0] - x[index] * t
        mm = multiplication_map(jr, L, 2)
        exhibited = [(x[0] + x[index] * t) * x[j] for j in others]
        coordinates = [jr.reduce_mod_ideal(G, 2) for G in exhibited]
        independent = rank_of_rows(Q, coordinates, len(coordinates[0])) == len(exhibited)
        killed = all(jr.is_zero_class(L * G, 3) for G in exhibited)
        report.details[f't={t}'] = {
            'hyperplane': str(L),
            'kernel_dimension': mm.kernel_dimension,
            'exhibited': [str(G) for G in exhibited],
        }
        report.record(f'kernel_at_least_3_t={t}', mm.kernel_dimension >= 3)
        report.record(f'exhibited_classes_t={t}', independent and killed)
    logger.info(f'contracted lines through x{index}: {report.checks}')
    return report


def koszul_demo(samples=10, seed=0):
    """Only the Euler tuple relates the partials of a smooth cubic; the cone has more."""
    Q = FieldSpec.rationals()
    report = DemoReport('koszul')
    euler_only = 0
    for i in range(samples):
        F = random_smooth_form(5, 3, Q, derive_seed(seed, i))
        relations = koszul_linear_relations(F)
        if is_euler_only(relations) and all(r.holds(F) for r in relations):
            euler_only += 1
    report.details['euler_only'] = f'{euler_only}/{samples}'
    report.record('smooth_cubics_euler_only', euler_only == samples)

    cone_relations = koszul_linear_relations(parse_polynomial(CONE_CUBIC, Q, 5))
    report.details['cone_relations'] = len(cone_relations)
    report.record('cone_has_extra_relations', len(cone_relations) > 1)
    return report

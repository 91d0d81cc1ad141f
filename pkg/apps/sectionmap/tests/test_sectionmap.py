from django.test import SimpleTestCase

from apps.exactla.fields import FieldSpec
from apps.jacobian.ring import JacobianRingModel
from apps.jacobian.services import random_smooth_form
from apps.lefschetz.services import multiplication_map
from apps.multipoly.parser import parse_polynomial
from apps.multipoly.polynomial import Polynomial
from apps.multipoly.sampling import derive_seed, random_invertible_matrix, random_linear_form
from apps.multipoly.transforms import change_of_coordinates
from apps.sectionmap.demos import contracted_lines_demo, fermat_kernel_demo, koszul_demo
from apps.sectionmap.exceptions import (
    SingularHypersurfaceError,
    SingularSectionError,
    SmoothnessUndecidedError,
    UnsupportedShapeError,
)
from apps.sectionmap.services import (
    EtaleStatus,
    VectorField,
    crosscheck_report,
    dual_membership,
    etale_check,
    is_euler_only,
    koszul_linear_relations,
    proposition_battery,
    proposition_crosscheck,
    random_section_pair,
    sylvester_section,
    tangent_kernel,
    unramified_check,
    vector_field_slots,
)

Q = FieldSpec.rationals()
F3 = FieldSpec.prime(3)
F10007 = FieldSpec.prime(10007)

FERMAT = 'x0^3 + x1^3 + x2^3 + x3^3 + x4^3'
CONE = 'x0^3 + x1^3 + x2^3 + x3^3'
DIAGONAL = 'x0 + x1 + x2 + x3 + x4'


def poly(text, field=Q, num_vars=5):
    return parse_polynomial(text, field, num_vars)


class DualMembershipTests(SimpleTestCase):
    def test_coordinate_hyperplane_is_not_tangent(self):
        self.assertFalse(dual_membership(poly(FERMAT), poly('x0')))

    def test_tangent_hyperplane(self):
        # x0 + x1 = 0 touches X at (1:-1:0:0:0); the section is a cone
        self.assertTrue(dual_membership(poly(FERMAT), poly('x0 + x1')))

    def test_singular_hypersurface_rejected(self):
        with self.assertRaises(SingularHypersurfaceError):
            dual_membership(poly(CONE), poly('x0'))


class KoszulTests(SimpleTestCase):
    def test_fermat_has_only_euler(self):
        relations = koszul_linear_relations(poly(FERMAT))
        self.assertEqual(len(relations), 1)
        self.assertTrue(is_euler_only(relations))
        self.assertTrue(relations[0].holds(poly(FERMAT)))

    def test_random_smooth_cubics(self):
        for seed in range(3):
            F = random_smooth_form(5, 3, Q, derive_seed(5, seed))
            self.assertTrue(is_euler_only(koszul_linear_relations(F)))

    def test_cone_has_free_last_slot(self):
        relations = koszul_linear_relations(poly(CONE))
        self.assertGreaterEqual(len(relations), 5)
        self.assertFalse(is_euler_only(relations))

    def test_characteristic_three_is_degenerate(self):
        self.assertEqual(len(koszul_linear_relations(poly(FERMAT, F3))), 25)

    def test_without_the_form(self):
        # the Euler tuple only relates the partials modulo F
        self.assertEqual(koszul_linear_relations(poly(FERMAT), modulo_form=False), [])


class VectorFieldTests(SimpleTestCase):
    def test_slots(self):
        slots = vector_field_slots(5)
        self.assertEqual(len(slots), 19)
        self.assertNotIn((1, 1), slots)

    def test_relation_is_zero(self):
        zero = Polynomial.zero(Q, 5)
        relation = VectorField((zero,) + tuple(Polynomial.variable(Q, 5, i) for i in range(1, 5)))
        self.assertTrue(relation.is_zero())


class TangentKernelTests(SimpleTestCase):
    def test_fermat_along_x0(self):
        report = tangent_kernel(poly(FERMAT), poly('x0'))
        self.assertEqual(report.dimension, 4)
        zero = Polynomial.zero(Q, 5)
        for i in range(1, 5):
            V = VectorField((Polynomial.variable(Q, 5, i),) + (zero,) * 4)
            self.assertTrue(report.contains(V))
        for k in range(report.dimension):
            self.assertTrue(report.certificate_holds(k))

    def test_fermat_along_diagonal(self):
        self.assertEqual(tangent_kernel(poly(FERMAT), poly(DIAGONAL)).dimension, 0)

    def test_random_pair(self):
        F, L = random_section_pair(Q, 17)
        self.assertEqual(tangent_kernel(F, L).dimension, 0)

    def test_tangent_hyperplane_rejected(self):
        with self.assertRaises(SingularSectionError):
            tangent_kernel(poly(FERMAT), poly('x0 + x1'))

    def test_shape_rejected(self):
        with self.assertRaises(UnsupportedShapeError):
            tangent_kernel(poly('x0^3 + x1^3 + x2^3 + x3^3', Q, 4), poly('x0', Q, 4))


class EtaleTests(SimpleTestCase):
    def test_fermat_along_x0(self):
        verdict = etale_check(poly(FERMAT), poly('x0'))
        self.assertEqual(verdict.status, EtaleStatus.NOT_ETALE)
        self.assertEqual(verdict.wlp_kernel_dimension, 4)
        self.assertEqual(verdict.tangent_kernel_dimension, 4)
        self.assertTrue(verdict.crosscheck_passed)
        self.assertEqual(verdict.jacobian_dimensions, {2: 10, 3: 10})

    def test_fermat_along_diagonal(self):
        verdict = etale_check(poly(FERMAT), poly(DIAGONAL))
        self.assertEqual(verdict.status, EtaleStatus.ETALE)
        self.assertEqual(verdict.wlp_kernel_dimension, 0)
        self.assertEqual(verdict.tangent_kernel_dimension, 0)

    def test_tangent_hyperplane(self):
        verdict = etale_check(poly(FERMAT), poly('x0 + x1'))
        self.assertEqual(verdict.status, EtaleStatus.SECTION_SINGULAR)

    def test_coordinate_invariance(self):
        for seed in range(2):
            F, L = random_section_pair(F10007, derive_seed(90, seed))
            A = random_invertible_matrix(F10007, 5, derive_seed(91, seed))
            before = etale_check(F, L)
            after = etale_check(change_of_coordinates(F, A), change_of_coordinates(L, A))
            self.assertEqual(before.status, after.status)
            self.assertEqual(before.wlp_kernel_dimension, after.wlp_kernel_dimension)

    def test_contracted_hyperplane_is_not_etale(self):
        verdict = etale_check(poly(FERMAT), poly('x0 - 2*x1'))
        self.assertEqual(verdict.status, EtaleStatus.NOT_ETALE)
        self.assertTrue(verdict.crosscheck_passed)


class CrosscheckTests(SimpleTestCase):
    def test_fermat_certificates(self):
        report = crosscheck_report(poly(FERMAT), poly('x0'))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.tangent_to_class), 4)
        self.assertEqual(len(report.class_to_tangent), 4)
        x0 = poly('x0')
        jr = JacobianRingModel(poly(FERMAT))
        for certificate in report.tangent_to_class:
            self.assertTrue(jr.is_zero_class(x0 * certificate.quadric, 3))
            self.assertFalse(jr.is_zero_class(certificate.quadric, 2))
            self.assertEqual(3 * certificate.scalar, certificate.multiple)
        for certificate in report.class_to_tangent:
            self.assertFalse(certificate.vector_field.is_zero())

    def test_both_trivial(self):
        self.assertTrue(proposition_crosscheck(poly(FERMAT), poly(DIAGONAL)))

    def test_battery(self):
        battery = proposition_battery(F10007, 50, 2024)
        self.assertEqual(len(battery.records), 50)
        self.assertEqual(battery.agreements, 50)
        self.assertTrue(battery.passed)


class CharacteristicThreeTests(SimpleTestCase):
    """Cubics over F3: d = 0 in the field, so G itself carries the certificate."""

    def smooth_pairs(self):
        for s in range(18):
            F = random_smooth_form(5, 3, F3, derive_seed(7, s))
            for L in (poly('2*x3 + x4', F3), random_linear_form(5, F3, derive_seed(8, s))):
                try:
                    tangent = dual_membership(F, L)
                except SmoothnessUndecidedError:
                    continue
                if not tangent:
                    yield F, L

    def test_tangent_kernel_certificates(self):
        pairs = list(self.smooth_pairs())
        self.assertTrue(pairs)
        for F, L in pairs:
            report = crosscheck_report(F, L)
            for k in range(report.tangent.dimension):
                self.assertTrue(report.tangent.certificate_holds(k), f'{F} along {L}')
            for certificate in report.tangent_to_class:
                self.assertTrue(certificate.identity_holds)
                self.assertIsNone(certificate.scalar)

    def test_etale_verdicts(self):
        F, L = next(self.smooth_pairs())
        verdict = etale_check(F, L)
        self.assertIn(verdict.status, (EtaleStatus.ETALE, EtaleStatus.NOT_ETALE))
        self.assertEqual(verdict.tangent_kernel_dimension, tangent_kernel(F, L).dimension)
        self.assertEqual(verdict.jacobian_dimensions[2] - verdict.wlp_kernel_dimension,
                         multiplication_map(JacobianRingModel(F), L, 2).rank)


class UnramifiedTests(SimpleTestCase):
    def test_agrees_with_etale_check_on_cubic_threefolds(self):
        F, L = poly(FERMAT), poly('x0')
        verdict = unramified_check(F, L)
        self.assertFalse(verdict.unramified)
        self.assertEqual(verdict.kernel_dimension, etale_check(F, L).wlp_kernel_dimension)
        self.assertEqual((verdict.source_dimension, verdict.target_dimension), (10, 10))

    def test_quintic_surfaces(self):
        for seed in range(3):
            F, L = random_section_pair(F10007, derive_seed(35, seed), num_vars=4, d=5)
            self.assertTrue(unramified_check(F, L).unramified)

    def test_low_degree_rejected(self):
        with self.assertRaises(UnsupportedShapeError):
            unramified_check(poly('x0^2 + x1^2 + x2^2 + x3^2', Q, 4), poly('x0', Q, 4))


class SylvesterTests(SimpleTestCase):
    def test_sections_are_sums_of_cubes(self):
        for text in ('x0', DIAGONAL, 'x2 - 3*x4'):
            form = sylvester_section(poly(text))
            self.assertEqual(len(form.cubes), 5)
            self.assertTrue(form.matches)

    def test_random_hyperplanes(self):
        fermat = poly(FERMAT, F10007)
        for seed in range(3):
            L = random_linear_form(5, F10007, seed)
            if dual_membership(fermat, L):
                continue
            self.assertTrue(sylvester_section(L).matches)


class DemoTests(SimpleTestCase):
    def test_fermat_kernel(self):
        report = fermat_kernel_demo()
        self.assertTrue(report.passed, report.checks)

    def test_contracted_lines(self):
        report = contracted_lines_demo()
        self.assertTrue(report.passed, report.checks)
        self.assertEqual(report.details['t=0']['kernel_dimension'], 4)
        for t in (1, 2, 3):
            self.assertGreaterEqual(report.details[f't={t}']['kernel_dimension'], 3)

    def test_contracted_lines_through_other_variables(self):
        self.assertTrue(contracted_lines_demo((1, 2), index=3).passed)

    def test_koszul(self):
        report = koszul_demo(samples=10, seed=0)
        self.assertTrue(report.passed, report.checks)

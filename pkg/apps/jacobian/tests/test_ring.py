from django.test import SimpleTestCase

from apps.exactla.fields import FieldSpec
from apps.jacobian.exceptions import ConstantFormError, DegreeMismatchError
from apps.jacobian.ring import build_jacobian_ring, coset_basis, hilbert_value, ideal_piece, reduce_mod_ideal
from apps.jacobian.services import (
    SmoothnessMethod,
    SmoothnessStatus,
    expected_hilbert_function,
    macaulay_bound,
    random_smooth_form,
    smoothness_check,
    socle_degree,
)
from apps.multipoly.exceptions import NotHomogeneousError
from apps.multipoly.monomials import ring_dimension
from apps.multipoly.parser import parse_polynomial
from apps.multipoly.sampling import random_invertible_matrix
from apps.multipoly.transforms import change_of_coordinates

Q = FieldSpec.rationals()
F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F7 = FieldSpec.prime(7)
F10007 = FieldSpec.prime(10007)

FERMAT = 'x0^3 + x1^3 + x2^3 + x3^3 + x4^3'
CONE = 'x0^3 + x1^3 + x2^3 + x3^3'


def poly(text, field=Q, num_vars=5):
    return parse_polynomial(text, field, num_vars)


class BuildTests(SimpleTestCase):
    def test_fermat_partials(self):
        jr = build_jacobian_ring(poly(FERMAT))
        self.assertEqual(jr.partials[0], poly('3*x0^2'))
        self.assertEqual(jr.partials[4], poly('3*x4^2'))

    def test_characteristic_three_partials_vanish(self):
        jr = build_jacobian_ring(poly(FERMAT, F3))
        self.assertTrue(all(p.is_zero() for p in jr.partials))

    def test_cone_has_zero_partial(self):
        jr = build_jacobian_ring(poly(CONE))
        self.assertTrue(jr.partials[4].is_zero())

    def test_rejects_bad_input(self):
        with self.assertRaises(NotHomogeneousError):
            build_jacobian_ring(poly('x0^3 + x1'))
        with self.assertRaises(ConstantFormError):
            build_jacobian_ring(poly('x0 + x1'))
        with self.assertRaises(ConstantFormError):
            build_jacobian_ring(poly('0'))


class GradedPieceTests(SimpleTestCase):
    def setUp(self):
        self.jr = build_jacobian_ring(poly(FERMAT))

    def test_quadric_piece(self):
        piece = ideal_piece(self.jr, 2)
        self.assertEqual(piece.dimension, 5)
        self.assertEqual(set(piece.pivot_monomials), {
            (2, 0, 0, 0, 0), (0, 2, 0, 0, 0), (0, 0, 2, 0, 0), (0, 0, 0, 2, 0), (0, 0, 0, 0, 2),
        })

    def test_cubic_piece(self):
        piece = ideal_piece(self.jr, 3)
        self.assertEqual(len(self.jr.ideal.generator_rows(3)), 25)
        self.assertEqual(piece.dimension, 25)

    def test_below_generator_degree(self):
        self.assertEqual(ideal_piece(self.jr, 1).dimension, 0)

    def test_fermat_hilbert_function(self):
        self.assertEqual([hilbert_value(self.jr, k) for k in range(7)], [1, 5, 10, 10, 5, 1, 0])
        self.assertEqual(expected_hilbert_function(4, 3, 6), [1, 5, 10, 10, 5, 1, 0])

    def test_characteristic_two_hilbert_function(self):
        jr = build_jacobian_ring(poly(FERMAT, F2))
        self.assertEqual(jr.hilbert_function(3), [1, 5, 10, 10])

    def test_cone_never_vanishes(self):
        jr = build_jacobian_ring(poly(CONE))
        self.assertGreaterEqual(hilbert_value(jr, 6), 1)
        self.assertGreaterEqual(hilbert_value(jr, 7), 1)

    def test_coset_bases(self):
        quadrics = coset_basis(self.jr, 2)
        self.assertEqual(len(quadrics), 10)
        self.assertTrue(all(max(m) == 1 for m in quadrics))
        cubics = coset_basis(self.jr, 3)
        self.assertEqual(len(cubics), 10)
        self.assertTrue(all(max(m) == 1 for m in cubics))
        self.assertEqual(coset_basis(self.jr, 0), [(0, 0, 0, 0, 0)])

    def test_reduction(self):
        self.assertTrue(all(x == 0 for x in reduce_mod_ideal(self.jr, poly('x0^2'))))
        unit = reduce_mod_ideal(self.jr, poly('x0*x1'))
        index = coset_basis(self.jr, 2).index((1, 1, 0, 0, 0))
        self.assertEqual(unit[index], 1)
        self.assertEqual(sum(1 for x in unit if x != 0), 1)
        self.assertEqual(reduce_mod_ideal(self.jr, poly('x0^2 + x0*x1')), unit)

    def test_class_representative(self):
        coordinates = reduce_mod_ideal(self.jr, poly('x0^2 + x0*x1 - 2*x2*x3'))
        representative = self.jr.class_representative(2, coordinates)
        self.assertEqual(representative, poly('x0*x1 - 2*x2*x3'))
        self.assertEqual(reduce_mod_ideal(self.jr, representative), coordinates)

    def test_degree_mismatch(self):
        with self.assertRaises(DegreeMismatchError):
            reduce_mod_ideal(self.jr, poly('x0^2 + x1'))
        with self.assertRaises(DegreeMismatchError):
            reduce_mod_ideal(self.jr, poly('x0^2'), degree=3)

    def test_rank_nullity_bookkeeping(self):
        for field in (Q, F7, F10007):
            jr = build_jacobian_ring(random_smooth_form(4, 3, field, 31))
            for k in range(6):
                piece = ideal_piece(jr, k)
                self.assertEqual(piece.dimension + hilbert_value(jr, k), ring_dimension(4, k))


class HilbertFunctionPropertyTests(SimpleTestCase):
    def test_gorenstein_symmetry_for_smooth_forms(self):
        cases = [(4, 3, Q), (4, 3, F10007), (3, 4, F10007), (4, 4, F10007)]
        for num_vars, d, field in cases:
            F = random_smooth_form(num_vars, d, field, 100 + d)
            jr = build_jacobian_ring(F)
            sigma = socle_degree(num_vars - 1, d)
            values = jr.hilbert_function(sigma + 1)
            self.assertEqual(values, expected_hilbert_function(num_vars - 1, d, sigma + 1))
            for k in range(sigma + 1):
                self.assertEqual(values[k], values[sigma - k])

    def test_equivariance(self):
        for field in (Q, F10007):
            F = random_smooth_form(4, 3, field, 8)
            A = random_invertible_matrix(field, 4, 9)
            before = build_jacobian_ring(F).hilbert_function(5)
            after = build_jacobian_ring(change_of_coordinates(F, A)).hilbert_function(5)
            self.assertEqual(before, after)

    def test_socle_degree(self):
        self.assertEqual(socle_degree(4, 3), 5)
        self.assertEqual(socle_degree(3, 3), 4)
        self.assertEqual(socle_degree(6, 2), 0)

    def test_macaulay_bound(self):
        # degree-3 hypersurface in five variables grows maximally
        self.assertEqual(macaulay_bound(34, 3), 65)
        self.assertEqual(macaulay_bound(2, 3), 2)
        self.assertEqual(macaulay_bound(0, 3), 0)


class SmoothnessTests(SimpleTestCase):
    def test_fermat_is_smooth(self):
        verdict = smoothness_check(poly(FERMAT))
        self.assertEqual(verdict.status, SmoothnessStatus.SMOOTH)
        self.assertEqual(verdict.method, SmoothnessMethod.ARTINIAN_SOCLE)
        self.assertEqual(verdict.detail, 6)

    def test_fermat_in_characteristic_two_is_smooth(self):
        self.assertEqual(smoothness_check(poly(FERMAT, F2)).status, SmoothnessStatus.SMOOTH)

    def test_cone_is_singular(self):
        verdict = smoothness_check(poly(CONE))
        self.assertEqual(verdict.status, SmoothnessStatus.SINGULAR)
        self.assertEqual(verdict.method, SmoothnessMethod.ARTINIAN_SOCLE)

    def test_triple_hyperplane_in_characteristic_three(self):
        verdict = smoothness_check(poly(FERMAT, F3))
        self.assertEqual(verdict.status, SmoothnessStatus.SINGULAR)
        self.assertEqual(verdict.method, SmoothnessMethod.EXTENDED_IDEAL_SWEEP)

    def test_smooth_cubic_in_characteristic_three(self):
        # projective closure of the elliptic curve y^2 = x^3 - x
        F = poly('x1^2*x2 - x0^3 + x0*x2^2', F3, 3)
        verdict = smoothness_check(F)
        self.assertEqual(verdict.method, SmoothnessMethod.EXTENDED_IDEAL_SWEEP)
        self.assertEqual(verdict.status, SmoothnessStatus.SMOOTH)

    def test_sweep_budget_can_run_out(self):
        verdict = smoothness_check(poly(FERMAT, F3), max_degree=2)
        self.assertEqual(verdict.status, SmoothnessStatus.UNKNOWN)
        self.assertEqual(verdict.detail, 2)

    def test_agrees_with_hilbert_function(self):
        for seed in range(3):
            F = random_smooth_form(4, 3, F10007, seed)
            jr = build_jacobian_ring(F)
            self.assertEqual(hilbert_value(jr, 5), 0)
            self.assertEqual(hilbert_value(jr, 4), 1)

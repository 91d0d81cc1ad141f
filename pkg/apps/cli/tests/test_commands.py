from dataclasses import replace
from io import StringIO
import json
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from apps.cli.harness import CSV_COLUMNS, check_probe_budget, run_probe, write_probe_csv
from apps.cli.exceptions import ProbeRefusedError
from apps.cli.serializers import SmoothnessVerdictSerializer
from apps.exactla.fields import FieldSpec
from apps.jacobian.services import random_smooth_form, smoothness_check
from apps.multipoly.parser import parse_polynomial
from apps.multipoly.sampling import derive_seed, random_linear_form

FERMAT = 'x0^3 + x1^3 + x2^3 + x3^3 + x4^3'
F3 = FieldSpec.prime(3)
F10007 = FieldSpec.prime(10007)


def run(*args, **kwargs):
    out = StringIO()
    call_command(*args, stdout=out, **kwargs)
    return out.getvalue()


def run_json(*args, **kwargs):
    return json.loads(run(*args, '--json', **kwargs))


class HilbertCommandTests(SimpleTestCase):
    def test_fermat(self):
        report = run_json('hilbert', '--poly', FERMAT, '--max-degree', '6')
        self.assertEqual([row['quotient_dimension'] for row in report['result']['rows']], [1, 5, 10, 10, 5, 1, 0])
        self.assertEqual(report['command'], 'hilbert')
        self.assertEqual(report['input'], FERMAT)
        self.assertEqual(report['field'], 'Q')

    def test_characteristic_two(self):
        report = run_json('hilbert', '--poly', FERMAT, '--field', 'F2', '--max-degree', '3')
        self.assertEqual([row['quotient_dimension'] for row in report['result']['rows']], [1, 5, 10, 10])

    def test_one_variable_defaults_to_the_degree(self):
        report = run_json('hilbert', '--poly', 'x0^3')
        rows = report['result']['rows']
        self.assertEqual([row['k'] for row in rows], [0, 1, 2, 3])
        self.assertEqual([row['quotient_dimension'] for row in rows], [1, 1, 0, 0])

    def test_zero_polynomial_rejected(self):
        with self.assertRaises(CommandError) as ctx:
            run('hilbert', '--poly', '0')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_parse_error(self):
        with self.assertRaises(CommandError) as ctx:
            run('hilbert', '--poly', 'x0 x1')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('position 3', str(ctx.exception))

    def test_inhomogeneous_rejected(self):
        with self.assertRaises(CommandError) as ctx:
            run('hilbert', '--poly', 'x0^3 + x1')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_poly_and_file_together_rejected(self):
        with self.assertRaises(CommandError) as ctx:
            run('hilbert', '--poly', FERMAT, '--poly-file', 'fermat.txt')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_poly_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'fermat.txt')
            with open(path, 'w') as handle:
                handle.write(FERMAT + '\n')
            report = run_json('hilbert', '--poly-file', path, '--max-degree', '2')
        self.assertEqual(report['input'], FERMAT)

    def test_deterministic_apart_from_timing(self):
        first = run_json('hilbert', '--poly', FERMAT)
        second = run_json('hilbert', '--poly', FERMAT)
        first.pop('timing')
        second.pop('timing')
        self.assertEqual(first, second)


class SmoothCommandTests(SimpleTestCase):
    def test_verdicts(self):
        self.assertEqual(run_json('smooth', '--poly', FERMAT)['result']['status'], 'smooth')
        cone = run_json('smooth', '--poly', 'x0^3 + x1^3 + x2^3 + x3^3', '--vars', '5')
        self.assertEqual(cone['result']['status'], 'singular')
        self.assertEqual(run_json('smooth', '--poly', FERMAT, '--field', 'F3')['result']['status'], 'singular')

    def test_command_is_a_thin_adapter(self):
        report = run_json('smooth', '--poly', FERMAT)
        direct = SmoothnessVerdictSerializer(smoothness_check(parse_polynomial(FERMAT, FieldSpec.rationals(), 5))).data
        self.assertEqual(report['result'], json.loads(json.dumps(direct)))

    def test_bad_field(self):
        with self.assertRaises(CommandError) as ctx:
            run('smooth', '--poly', FERMAT, '--field', 'F4')
        self.assertEqual(ctx.exception.returncode, 2)


class WlpCommandTests(SimpleTestCase):
    def test_search(self):
        report = run_json('wlp', '--poly', FERMAT, '--degree', '2', '--trials', '20')
        self.assertEqual(report['result']['witness']['outcome'], 'witness_found')

    def test_exhaustive_over_f2(self):
        report = run_json('wlp', '--poly', FERMAT, '--field', 'F2', '--degree', '2', '--mode', 'exhaustive')
        witness = report['result']['witness']
        self.assertEqual(witness['outcome'], 'exhausted_all_forms')
        self.assertEqual(len(witness['failures']), 31)

    def test_given_form(self):
        report = run_json('wlp', '--poly', FERMAT, '--degree', '2', '--form', 'x0')
        self.assertEqual(report['result']['map']['kernel_dimension'], 4)
        self.assertEqual(sorted(report['result']['map']['kernel']), ['x0*x1', 'x0*x2', 'x0*x3', 'x0*x4'])

    def test_exhaustive_over_rationals_refused(self):
        with self.assertRaises(CommandError) as ctx:
            run('wlp', '--poly', FERMAT, '--mode', 'exhaustive')
        self.assertEqual(ctx.exception.returncode, 3)


class EtaleCommandTests(SimpleTestCase):
    def test_verdicts(self):
        verdict = run_json('etale', '--poly', FERMAT, '--hyperplane', 'x0')['result']['verdict']
        self.assertEqual(verdict['status'], 'not_etale')
        self.assertTrue(verdict['crosscheck_passed'])
        diagonal = run_json('etale', '--poly', FERMAT, '--hyperplane', 'x0+x1+x2+x3+x4')
        self.assertEqual(diagonal['result']['verdict']['status'], 'etale')
        tangent = run_json('etale', '--poly', FERMAT, '--hyperplane', 'x0+x1')
        self.assertEqual(tangent['result']['verdict']['status'], 'section_singular')

    def test_characteristic_three(self):
        F = random_smooth_form(5, 3, F3, derive_seed(7, 0))
        for seed in range(10):
            L = random_linear_form(5, F3, derive_seed(8, seed))
            try:
                report = run_json('etale', '--poly', str(F), '--vars', '5', '--field', 'F3', '--hyperplane', str(L))
            except CommandError as exc:
                # a failed crosscheck or an undecided section, never an input error
                self.assertIn(exc.returncode, (1, 3))
                continue
            self.assertIn(report['result']['verdict']['status'], ('etale', 'not_etale', 'section_singular'))

    def test_wrong_shape(self):
        with self.assertRaises(CommandError) as ctx:
            run('etale', '--poly', 'x0^3 + x1^3 + x2^3 + x3^3', '--hyperplane', 'x0')
        self.assertEqual(ctx.exception.returncode, 2)


class DemoCommandTests(SimpleTestCase):
    def test_char2(self):
        report = run_json('demo', 'char2')
        self.assertTrue(report['result']['passed'])

    def test_contracted_lines(self):
        output = run('demo', 'contracted-lines', '--t', '0', '--t', '2')
        self.assertIn('contracted-lines: passed', output)

    def test_unknown_demo(self):
        with self.assertRaises(CommandError) as ctx:
            run('demo', 'sylvester')
        self.assertEqual(ctx.exception.returncode, 2)


class ProbeTests(SimpleTestCase):
    def test_budget(self):
        self.assertEqual(check_probe_budget(4, 3), 35)
        self.assertEqual(check_probe_budget(4, 6), 210)
        with self.assertRaises(ProbeRefusedError) as ctx:
            check_probe_budget(6, 8)
        self.assertEqual(ctx.exception.dimension, 3003)

    def test_open_cases_are_within_budget(self):
        # 3 < d < n + 2
        self.assertEqual(check_probe_budget(5, 4), 126)
        self.assertEqual(check_probe_budget(5, 5), 252)

    def test_refusal_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            run('probe', '--n', '6', '--d', '8')
        self.assertEqual(ctx.exception.returncode, 3)

    def test_csv_is_deterministic(self):
        outputs = []
        for _ in range(2):
            out = run('probe', '--n', '4', '--d', '3', '--field', 'F10007', '--samples', '3', '--seed', '11', '--no-timing')
            outputs.append(out)
        self.assertEqual(outputs[0], outputs[1])
        lines = outputs[0].strip().split('\n')
        self.assertEqual(lines[0], 'n,d,char,sample,seed,smooth,wlp_injective,kernel_dim,ms')
        self.assertEqual(len(lines), 4)

    def test_cubic_threefolds_over_rationals(self):
        records = run_probe(4, 3, FieldSpec.rationals(), 4, 7)
        for record in records:
            if record.smooth == 'smooth':
                self.assertTrue(record.wlp_injective)

    def test_quintic_surfaces(self):
        records = run_probe(3, 5, F10007, 20, 2024)
        self.assertEqual([r.sample for r in records], list(range(20)))
        smooth = [r for r in records if r.smooth == 'smooth']
        self.assertEqual(len(smooth), 20)
        self.assertTrue(all(r.wlp_injective for r in smooth))
        again = run_probe(3, 5, F10007, 20, 2024)
        self.assertEqual([replace(r, ms=0) for r in records], [replace(r, ms=0) for r in again])

    def test_cubic_fourfolds_are_recorded(self):
        records = run_probe(5, 3, F10007, 20, 5)
        out = StringIO()
        write_probe_csv(records, out, include_timing=False)
        lines = out.getvalue().strip().split('\n')
        self.assertEqual(lines[0], ','.join(CSV_COLUMNS))
        self.assertEqual(len(lines), 21)
        self.assertTrue(all(r.smooth != 'error' for r in records))

    @override_settings(PROBE_MAX_RING_DIMENSION=30)
    def test_guard_follows_settings(self):
        with self.assertRaises(ProbeRefusedError):
            check_probe_budget(4, 3)

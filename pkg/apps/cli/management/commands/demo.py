from django.core.management.base import CommandError

from apps.cli.base import CommandOutcome, ToolkitCommand
from apps.cli.options import EXIT_INPUT_ERROR
from apps.cli.serializers import DemoReportSerializer
from apps.lefschetz.demos import char2_fermat_demo
from apps.sectionmap.demos import contracted_lines_demo, fermat_kernel_demo, koszul_demo

DEMOS = ('fermat-kernel', 'char2', 'contracted-lines', 'koszul')


def _run_demo(name, options):
    if name == 'fermat-kernel':
        return fermat_kernel_demo()
    if name == 'char2':
        return char2_fermat_demo()
    if name == 'contracted-lines':
        return contracted_lines_demo(options.get('t_values'), index=options['index'])
    if name == 'koszul':
        return koszul_demo(samples=options['samples'], seed=options['seed'])
    raise CommandError(f"unknown demo '{name}', expected one of {', '.join(DEMOS)}", returncode=EXIT_INPUT_ERROR)


class Command(ToolkitCommand):
    help = 'Run a scripted verification: fermat-kernel, char2, contracted-lines or koszul'
    takes_polynomial = False

    def add_command_arguments(self, parser):
        parser.add_argument('name', help=', '.join(DEMOS))
        parser.add_argument('--t', dest='t_values', type=int, action='append',
                            help='Line parameter for contracted-lines; repeat for several.')
        parser.add_argument('--index', type=int, default=1, help='Variable x_i in the lines x0 = t*x_i.')
        parser.add_argument('--samples', type=int, default=10, help='Random cubics for koszul.')
        parser.add_argument('--seed', type=int, default=0)

    def run(self, F, options):
        report = _run_demo(options['name'], options)
        lines = [f"{'ok  ' if passed else 'FAIL'} {check}" for check, passed in report.checks.items()]
        lines.append(f"{report.name}: {'passed' if report.passed else 'FAILED'}")
        return CommandOutcome(result=DemoReportSerializer(report).data, lines=lines, passed=report.passed)

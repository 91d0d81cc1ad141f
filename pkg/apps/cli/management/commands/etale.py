from apps.cli.base import CommandOutcome, ToolkitCommand
from apps.cli.options import read_linear_form
from apps.cli.serializers import EtaleVerdictSerializer
from apps.sectionmap.services import etale_check


class Command(ToolkitCommand):
    help = 'Whether the hyperplane section map of a cubic threefold is etale at the hyperplane L = 0'

    def add_command_arguments(self, parser):
        parser.add_argument('--hyperplane', required=True, help='Linear form L, e.g. "x0 + x1".')

    def run(self, F, options):
        L = read_linear_form(options['hyperplane'], F)
        verdict = etale_check(F, L)
        line = f'{verdict.status}'
        if verdict.wlp_kernel_dimension is not None:
            line += (f' (wlp kernel {verdict.wlp_kernel_dimension}, tangent kernel {verdict.tangent_kernel_dimension}, '
                     f'crosscheck {"passed" if verdict.crosscheck_passed else "FAILED"})')
        return CommandOutcome(
            result={'hyperplane': str(L), 'verdict': EtaleVerdictSerializer(verdict).data},
            lines=[line],
            passed=verdict.crosscheck_passed is not False,
        )

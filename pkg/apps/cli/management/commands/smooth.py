from apps.cli.base import CommandOutcome, ToolkitCommand
from apps.cli.serializers import SmoothnessVerdictSerializer
from apps.jacobian.services import smoothness_check


class Command(ToolkitCommand):
    help = 'Decide whether the projective hypersurface F = 0 is smooth'

    def add_command_arguments(self, parser):
        parser.add_argument('--max-degree', type=int, help='Degree budget for the sweep used when char | d.')

    def run(self, F, options):
        verdict = smoothness_check(F, max_degree=options.get('max_degree'))
        line = f'{verdict.status} ({verdict.method}, degree {verdict.detail})'
        if verdict.certified_modulo:
            line += f', certified modulo {verdict.certified_modulo}'
        return CommandOutcome(result=SmoothnessVerdictSerializer(verdict).data, lines=[line])

from dataclasses import dataclass, field as dataclass_field
import time

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from .options import EXIT_ASSERTION_FAILED, add_polynomial_arguments, read_polynomial, translate_errors
from .serializers import ReportEnvelopeSerializer, render_json

# Django's own options are not part of the command echo
DJANGO_OPTIONS = {'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color', 'force_color', 'skip_checks'}


@dataclass
class CommandOutcome:
    result: dict
    lines: list = dataclass_field(default_factory=list)
    passed: bool = True


class ToolkitCommand(BaseCommand):
    """
    Parse the input polynomial, call ``run`` and print either a short summary
    or the JSON report envelope.
    """
    takes_polynomial = True

    def add_arguments(self, parser):
        if self.takes_polynomial:
            add_polynomial_arguments(parser)
        parser.add_argument('--json', action='store_true', help='Print the JSON report.')
        parser.add_argument('--out', help='Also write the JSON report to this file.')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run(self, F, options):
        raise NotImplementedError

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def handle(self, *args, **options):
        started = time.perf_counter()
        with translate_errors():
            F = read_polynomial(options) if self.takes_polynomial else None
            outcome = self.run(F, options)
        elapsed_ms = int((time.perf_counter() - started) * 1000)

        envelope = ReportEnvelopeSerializer({
            'tool_version': getattr(settings, 'TOOL_VERSION', '1.0.0'),
            'command': self.command_name,
            'arguments': {k: v for k, v in options.items() if k not in DJANGO_OPTIONS},
            'field': F.field.label if F is not None else options.get('field'),
            'input': F,
            'result': outcome.result,
            'timing': {'elapsed_ms': elapsed_ms},
        }).data
        text = render_json(envelope)
        if options.get('out'):
            with open(options['out'], 'w') as handle:
                handle.write(text + '\n')
        if options.get('json'):
            self.stdout.write(text)
        else:
            for line in outcome.lines:
                self.stdout.write(line)

        if not outcome.passed:
            raise CommandError(f'{self.command_name}: checks failed', returncode=EXIT_ASSERTION_FAILED)

from django.core.management.base import CommandError

from apps.cli.base import CommandOutcome, ToolkitCommand
from apps.cli.options import EXIT_INPUT_ERROR, read_linear_form
from apps.cli.serializers import MultiplicationMapSerializer, WlpWitnessSerializer
from apps.jacobian.ring import JacobianRingModel
from apps.lefschetz.services import multiplication_map, wlp_exhaustive, wlp_search

MODES = ('given', 'search', 'exhaustive')


class Command(ToolkitCommand):
    help = 'Injectivity of multiplication by a linear form from degree a to a+1 of the Jacobian ring'

    def add_command_arguments(self, parser):
        parser.add_argument('--degree', type=int, help='Source degree a (default: d - 1).')
        parser.add_argument('--mode', help='given, search or exhaustive (default: given with --form, else search).')
        parser.add_argument('--form', help='The linear form for --mode given, e.g. "x0 + x1".')
        parser.add_argument('--trials', type=int, help='Random forms to try in search mode.')
        parser.add_argument('--seed', type=int, default=0)

    def run(self, F, options):
        mode = options.get('mode') or ('given' if options.get('form') else 'search')
        if mode not in MODES:
            raise CommandError(f"unknown mode '{mode}', expected one of {', '.join(MODES)}", returncode=EXIT_INPUT_ERROR)
        jr = JacobianRingModel(F)
        a = options.get('degree')
        if a is None:
            a = jr.degree - 1

        if mode == 'given':
            if not options.get('form'):
                raise CommandError('--mode given needs --form', returncode=EXIT_INPUT_ERROR)
            mm = multiplication_map(jr, read_linear_form(options['form'], F), a)
            lines = [f'x({mm.form}): degree {a} -> {a + 1}, rank {mm.rank}, kernel dimension {mm.kernel_dimension}']
            lines += [f'  kernel: {G}' for G in mm.kernel_polynomials()]
            return CommandOutcome(result={'mode': mode, 'map': MultiplicationMapSerializer(mm).data}, lines=lines)

        if mode == 'search':
            witness = wlp_search(jr, a, trials=options.get('trials'), seed=options['seed'])
        else:
            witness = wlp_exhaustive(jr, a)
        line = f'{witness.outcome} after {witness.trials} forms'
        if witness.form is not None:
            line += f': {witness.form}'
        return CommandOutcome(result={'mode': mode, 'witness': WlpWitnessSerializer(witness).data}, lines=[line])

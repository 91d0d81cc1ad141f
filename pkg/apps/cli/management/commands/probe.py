from django.core.management.base import BaseCommand

from apps.cli.harness import run_probe, write_probe_csv
from apps.cli.options import read_field, translate_errors


class Command(BaseCommand):
    help = 'Seeded probe of injectivity of xL from degree d-1 to d for random forms, written as CSV'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Projective dimension; forms have n+1 variables.')
        parser.add_argument('--d', type=int, required=True, help='Degree of the random forms.')
        parser.add_argument('--field', default='F10007')
        parser.add_argument('--samples', type=int, default=20)
        parser.add_argument('--seed', type=int, default=0, help='Master seed.')
        parser.add_argument('--out', help='CSV path (default: stdout).')
        parser.add_argument('--no-timing', action='store_true', help='Leave the ms column empty.')
        parser.add_argument('--workers', action='store_true', help='Dispatch samples to Celery workers.')

    def handle(self, *args, **options):
        with translate_errors():
            field = read_field(options)
            records = run_probe(options['n'], options['d'], field, options['samples'], options['seed'],
                                use_workers=options['workers'] or None)
            include_timing = not options['no_timing']
            if options.get('out'):
                with open(options['out'], 'w', newline='') as handle:
                    write_probe_csv(records, handle, include_timing)
                smooth = sum(1 for r in records if r.smooth == 'smooth')
                injective = sum(1 for r in records if r.wlp_injective)
                self.stdout.write(self.style.SUCCESS(
                    f"{len(records)} samples written to {options['out']}: {smooth} smooth, {injective} injective"
                ))
            else:
                write_probe_csv(records, self.stdout, include_timing)

from apps.cli.base import CommandOutcome, ToolkitCommand
from apps.cli.serializers import HilbertRowSerializer
from apps.jacobian.ring import JacobianRingModel
from apps.jacobian.services import socle_degree


class Command(ToolkitCommand):
    help = 'Dimensions of J_k and of the Jacobian ring R/J in each degree k <= --max-degree'

    def add_command_arguments(self, parser):
        parser.add_argument('--max-degree', type=int, help='Highest degree (default: socle degree + 1, or d for one variable).')

    def run(self, F, options):
        jr = JacobianRingModel(F)
        max_degree = options.get('max_degree')
        if max_degree is None:
            max_degree = socle_degree(jr.n, jr.degree) + 1 if jr.n >= 1 and jr.degree >= 2 else jr.degree
        rows = []
        for k in range(max_degree + 1):
            quotient = jr.hilbert_value(k)
            rows.append({'k': k, 'ideal_dimension': jr.ideal.rank(k), 'quotient_dimension': quotient})
        lines = [f"{row['k']:>3}  dim J = {row['ideal_dimension']:<6} dim R/J = {row['quotient_dimension']}" for row in rows]
        return CommandOutcome(result={'rows': HilbertRowSerializer(rows, many=True).data}, lines=lines)

from apps.api.serializers import SaddleSolutionSerializer
from apps.saddle import solve_saddle
from core.commands import EnumerationCommand, Output, parse_n_values
from enumeration_engine.exceptions import UsageError


class Command(EnumerationCommand):
    help = 'Solve the saddle equation M_n(sigma) = n'
    takes_n = True
    takes_n_values = True

    def add_command_arguments(self, parser):
        parser.add_argument('--rho', default='', help='Orders l >= 3 of rho_l to evaluate, e.g. 3,4')

    def compute(self, config, options):
        rho_orders = parse_n_values(options['rho']) if options['rho'] else ()
        bits = config['precision']
        n_values = config.get('n_values') or ([config['n']] if 'n' in config else None)
        if not n_values:
            raise UsageError('saddle needs --n or --n-values')
        solutions = [
            solve_saddle(self.seq, n, config['kind'], bits, rho_orders) for n in n_values
        ]
        context = {'precision_bits': bits}
        rows = [(s.n, SaddleSolutionSerializer(s, context=context).data['sigma']) for s in solutions]
        if len(solutions) == 1:
            payload = SaddleSolutionSerializer(solutions[0], context=context).data
        else:
            payload = {
                'seq_id': self.seq.descriptor,
                'solutions': SaddleSolutionSerializer(solutions, many=True, context=context).data,
            }
        return Output(payload=payload, rows=rows)

from apps.api.serializers import RatioReportSerializer
from apps.diagnostics import ratio_report
from apps.diagnostics.tasks import solve_saddles
from apps.exact import count
from core.commands import EnumerationCommand, Output


class Command(EnumerationCommand):
    help = 'Ratios c_n / c_{n+1} normalized by y e^{delta_n}'
    takes_n_values = True
    default_n_values = '100,200,500,1000'

    def add_command_arguments(self, parser):
        parser.add_argument('--y', default=None, help='Override the declared y')

    def compute(self, config, options):
        kind, bits, n_values = config['kind'], config['precision'], config['n_values']
        counts = count(self.seq, max(n_values) + 1, kind)
        saddles = solve_saddles(self.seq, n_values, kind, bits)
        report = ratio_report(self.seq, counts, saddles, options['y'], bits)
        payload = RatioReportSerializer(report, context={'precision_bits': bits}).data
        rows = list(zip(payload['n_range'], payload['normalized']))
        return Output(payload=payload, rows=rows)

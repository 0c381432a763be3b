from apps.api.serializers import ScalingReportSerializer
from apps.diagnostics import Quantity, scaling_report
from core.commands import EnumerationCommand, Output


class Command(EnumerationCommand):
    help = 'Log-log slope of delta_n, B_n^2 or rho_l at the saddle'
    takes_n_values = True
    default_n_values = '1000,10000,100000,1000000'

    def add_command_arguments(self, parser):
        parser.add_argument('--quantity', default=Quantity.DELTA, choices=Quantity.values)
        parser.add_argument('--order', type=int, default=3, help='l for --quantity rho')
        parser.add_argument('--tolerance', type=float, default=None)

    def compute(self, config, options):
        bits = config['precision']
        report = scaling_report(
            self.seq, config['n_values'], options['quantity'], config['kind'],
            options['order'], bits,
        )
        context = {'precision_bits': bits, 'tolerance': options['tolerance']}
        payload = ScalingReportSerializer(report, context=context).data
        rows = [(sample['n'], sample['value']) for sample in payload['samples']]
        return Output(payload=payload, rows=rows)

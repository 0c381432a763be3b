from apps.api.serializers import TrendReportSerializer
from apps.diagnostics import local_limit_report
from core.commands import EnumerationCommand, Output


class Command(EnumerationCommand):
    help = 'P(Y_n = n) sqrt(2 pi B_n^2) at the saddle, which tends to 1'
    takes_n_values = True
    default_n_values = '50,100,200,400,800'

    def compute(self, config, options):
        bits = config['precision']
        report = local_limit_report(self.seq, config['n_values'], config['kind'], bits)
        payload = TrendReportSerializer(report, context={'precision_bits': bits}).data
        rows = [(sample['n'], sample['value']) for sample in payload['samples']]
        return Output(payload=payload, rows=rows)

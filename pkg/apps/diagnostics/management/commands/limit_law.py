from apps.api.serializers import LimitLawVerdictSerializer
from apps.diagnostics import limit_law_check
from core.commands import EnumerationCommand, Output


class Command(EnumerationCommand):
    help = 'Check the ratio hypotheses of the logical limit law up to n-max'

    def add_command_arguments(self, parser):
        parser.add_argument('--n-max', type=int, default=1500)
        parser.add_argument('--y', default=None, help='Override the declared y')

    def compute(self, config, options):
        bits = config['precision']
        if options['n_max'] < 3:
            raise ValueError(f"--n-max must be at least 3, got {options['n_max']}")
        verdict = limit_law_check(self.seq, options['y'], options['n_max'], config['kind'], bits)
        payload = LimitLawVerdictSerializer(verdict, context={'precision_bits': bits}).data
        return Output(payload=payload, tabular=False)

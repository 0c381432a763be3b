from dataclasses import asdict

from apps.api.serializers import FittedParamsSerializer
from apps.diagnostics import fit_expansive_params
from core.commands import EnumerationCommand, Output


class Command(EnumerationCommand):
    help = 'Least-squares fit of (K, r, y) to log a_j'
    takes_kind = False

    def add_command_arguments(self, parser):
        parser.add_argument('--j-min', type=int, default=1)
        parser.add_argument('--j-max', type=int, default=200)

    def compute(self, config, options):
        fitted = fit_expansive_params(self.seq, options['j_min'], options['j_max'])
        result = {'seq_id': self.seq.descriptor, **asdict(fitted)}
        payload = FittedParamsSerializer(result, context={'precision_bits': 64}).data
        return Output(payload=payload, tabular=False)

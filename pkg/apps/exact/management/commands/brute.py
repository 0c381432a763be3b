from apps.api.serializers import BruteForceSerializer
from apps.exact import brute_force_count
from core.commands import EnumerationCommand, Output


class Command(EnumerationCommand):
    help = 'Brute-force count over all partitions of n (capped)'
    takes_n = True

    def add_command_arguments(self, parser):
        parser.add_argument('--cap', type=int, default=None, help='Largest n the oracle accepts')

    def compute(self, config, options):
        n = config['n']
        value = brute_force_count(self.seq, n, config['kind'], cap=options['cap'])
        result = {'kind': config['kind'], 'seq_id': self.seq.descriptor, 'n': n, 'count': value}
        return Output(payload=BruteForceSerializer(result).data, rows=[(n, str(value))])

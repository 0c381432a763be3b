from mpmath import mp

from apps.api.serializers import IdentityReportSerializer
from apps.exact import count
from apps.saddle import khintchine_reconstruct, solve_saddle
from core.commands import EnumerationCommand, Output
from core.precision import LogValue


class Command(EnumerationCommand):
    help = 'Rebuild log c_n from the Khintchine identity and compare with exact counts'
    takes_n_values = True
    default_n_values = '5,10,20,50'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--sigma-factors', default='1',
            help='Multiples of the saddle at which to evaluate the identity, e.g. 0.7,1,1.5',
        )

    def compute(self, config, options):
        kind, bits = config['kind'], config['precision']
        factors = [mp.mpf(part) for part in options['sigma_factors'].split(',') if part.strip()]
        n_values = config['n_values']
        table = count(self.seq, max(n_values), kind)

        samples = []
        for n in n_values:
            exact = LogValue.from_int(table[n], bits)
            saddle = solve_saddle(self.seq, n, kind, bits).sigma
            for factor in factors:
                with mp.workprec(bits):
                    sigma = saddle * factor
                rebuilt = khintchine_reconstruct(self.seq, n, sigma, kind, bits)
                samples.append({
                    'n': n,
                    'sigma': sigma,
                    'log_reconstructed': rebuilt.log_e,
                    'log_exact': exact.log_e,
                    'abs_log_error': rebuilt.abs_log_error(exact),
                })

        report = {
            'seq_id': self.seq.descriptor,
            'kind': kind,
            'samples': samples,
            'max_abs_log_error': max(sample['abs_log_error'] for sample in samples),
        }
        payload = IdentityReportSerializer(report, context={'precision_bits': bits}).data
        rows = [(sample['n'], value['abs_log_error']) for sample, value in zip(samples, payload['samples'])]
        return Output(payload=payload, rows=rows)

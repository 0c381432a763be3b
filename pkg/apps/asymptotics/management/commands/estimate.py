from apps.api.serializers import ClosedFormConstantsSerializer, EstimateSerializer, ScalarSerializer
from apps.asymptotics import (
    Formula, SigmaMode, closed_form_constants, closed_form_estimate, hardy_ramanujan, kappa2,
    partition_saddle_estimate, relative_error, theorem1_estimate,
)
from apps.exact import Kind, count
from apps.sequences import Family, make_sequence, parse_descriptor
from core.commands import EnumerationCommand, Output
from enumeration_engine.exceptions import UsageError

METHODS = ['theorem1', 'closed-form', 'hardy-ramanujan', 'kappa2', 'partition-saddle']


class Command(EnumerationCommand):
    help = 'Asymptotic estimates of c_n and the constant kappa2'
    takes_seq = False
    takes_n = True
    # kappa2 does not depend on n
    n_required = False

    def add_command_arguments(self, parser):
        parser.add_argument('--method', required=True, choices=METHODS)
        parser.add_argument('--seq', default=None, help='Sequence descriptor (theorem1, closed-form)')
        parser.add_argument('--K', dest='K', default=None, help='K for --method kappa2')
        parser.add_argument('--r', dest='r', default=None, help='r for --method kappa2')
        parser.add_argument('--sigma-mode', default=SigmaMode.SOLVED, choices=SigmaMode.values)
        parser.add_argument(
            '--compare', action='store_true',
            help='Also compute the exact count and the relative error',
        )

    def compute(self, config, options):
        method, bits = options['method'], config['precision']
        context = {'precision_bits': bits}

        if method == 'kappa2':
            if options['K'] is None or options['r'] is None:
                raise UsageError('kappa2 needs --K and --r')
            value = kappa2(options['K'], options['r'], bits)
            payload = ScalarSerializer({'method': method, 'value': value}, context=context).data
            return Output(payload=payload, tabular=False)

        n = config.get('n')
        if n is None or n < 1:
            raise UsageError(f"{method} needs --n >= 1")
        kind = Kind(config['kind'])
        seq, constants = None, None

        if method == 'theorem1':
            seq = self.require_seq(options)
            value, formula = theorem1_estimate(seq, n, kind, bits), Formula.THEOREM1
        elif method == 'closed-form':
            seq = self.require_seq(options)
            constants = closed_form_constants(seq, kind, bits)
            value, formula = closed_form_estimate(constants, constants.y, n), Formula.CLOSED_FORM
        elif method == 'hardy-ramanujan':
            value, formula = hardy_ramanujan(n, bits), Formula.HARDY_RAMANUJAN
        else:
            value = partition_saddle_estimate(n, options['sigma_mode'], bits)
            formula = Formula.PARTITION_SADDLE

        result = {'n': n, 'value': value, 'formula': formula.value}
        if options['compare']:
            reference = seq or make_sequence(Family.PARTITIONS)
            exact = count(reference, n, kind)[n]
            result.update(exact=exact, relative_error=relative_error(value, exact))
        payload = dict(EstimateSerializer(result, context=context).data)
        if constants is not None:
            payload['constants'] = ClosedFormConstantsSerializer(constants, context=context).data
        return Output(payload=payload, rows=[(n, payload['log_e'])])

    def require_seq(self, options):
        if not options['seq']:
            raise UsageError(f"--method {options['method']} needs --seq")
        return parse_descriptor(options['seq'])

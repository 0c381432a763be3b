from apps.api.serializers import StarSequenceSerializer
from apps.exact import star_transform
from core.commands import EnumerationCommand, Output


class Command(EnumerationCommand):
    help = 'Star transform a*_1..a*_N as exact fractions; the csv output is re-readable'
    takes_kind = False
    takes_n = True

    def compute(self, config, options):
        star = star_transform(self.seq, config['n'])
        result = {'seq_id': self.seq.descriptor, 'N': star.N, 'star': star}
        return Output(payload=StarSequenceSerializer(result).data, rows=star.rows())

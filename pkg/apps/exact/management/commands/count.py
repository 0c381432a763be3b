from apps.api.serializers import CountTableSerializer
from apps.exact import count
from core.commands import EnumerationCommand, Output


class Command(EnumerationCommand):
    help = 'Exact counts c_0..c_N of multisets or selections'
    takes_n = True

    def compute(self, config, options):
        table = count(self.seq, config['n'], config['kind'])
        return Output(payload=CountTableSerializer(table).data, rows=table.rows())

from schur.serializers import MatricesQuerySerializer

from ._jtvo import JtvoCommand


class Command(JtvoCommand):
    help = 'Print the truncations H(M,N), E(M,N) and their product'
    query_serializer = MatricesQuerySerializer
    command_name = 'matrices'

    def add_query_arguments(self, parser):
        self.add_flag(parser, '--M', type=int, dest='M', help='First row/column index')
        self.add_flag(parser, '--N', type=int, dest='N', help='Last row/column index')

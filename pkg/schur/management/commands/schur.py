from schur.serializers import SchurQuerySerializer

from ._jtvo import JtvoCommand


class Command(JtvoCommand):
    help = 'Print the generalized Schur function s_v of an integer vector'
    query_serializer = SchurQuerySerializer
    command_name = 'schur'

    def add_query_arguments(self, parser):
        self.add_flag(parser, '--shape', help='Integer vector, e.g. 3,2,1 (empty: "()")')

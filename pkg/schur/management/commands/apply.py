from schur.serializers import ApplyQuerySerializer

from ._jtvo import JtvoCommand


class Command(JtvoCommand):
    help = 'Apply a word in psi / psistar (right to left) to a boson state'
    query_serializer = ApplyQuerySerializer
    command_name = 'apply'

    def add_query_arguments(self, parser):
        self.add_flag(parser, '--word', help='Operator word, e.g. "psi:3,psistar:0"')
        self.add_flag(parser, '--state', help='Boson state, e.g. "2,1@0;-1/2*1@1"')
        self.add_flag(parser, '--expand', action='store_true', default=None,
                      help='Also print each charge component as a polynomial')

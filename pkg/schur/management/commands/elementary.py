from schur.serializers import ElementaryQuerySerializer

from ._jtvo import JtvoCommand


class Command(JtvoCommand):
    help = 'Print the generalized elementary function e^(p)_a'
    query_serializer = ElementaryQuerySerializer
    command_name = 'elementary'

    def add_query_arguments(self, parser):
        self.add_flag(parser, '--p', type=int, help='Superscript p')
        self.add_flag(parser, '--a', type=int, help='Subscript a')

from schur.serializers import HookQuerySerializer

from ._jtvo import JtvoCommand


class Command(JtvoCommand):
    help = 'Print the hook Schur function s_(m|n)'
    query_serializer = HookQuerySerializer
    command_name = 'hook'

    def add_query_arguments(self, parser):
        self.add_flag(parser, '--m', type=int, help='Arm length m')
        self.add_flag(parser, '--n', type=int, help='Leg length n')

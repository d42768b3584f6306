from schur.serializers import VerifyQuerySerializer
from schur.services.verification import IdentityVerifier

from ._jtvo import JtvoCommand


class Command(JtvoCommand):
    help = 'Run a verification suite; exits 1 when an identity fails'
    query_serializer = VerifyQuerySerializer
    command_name = 'verify'

    def add_query_arguments(self, parser):
        parser.add_argument('suite', choices=IdentityVerifier.suites())
        self.add_flag(parser, '--maxweight', type=int, help='Largest partition weight in the sweep')
        self.add_flag(parser, '--range', type=int, help='Index range for newton / matrices / hooks / char')
        self.add_flag(parser, '--kmax', type=int, help='Largest |k| for operator indices')
        self.add_flag(parser, '--seed', type=int, help='Seed for the randomized sweeps')
        self.add_flag(parser, '--record', action='store_true', default=None,
                      help='Store the report as a VerificationRun')

    def collect(self, options):
        params = super().collect(options)
        params['suite'] = options['suite']
        return params

    def handle(self, *args, **options):
        super().handle(*args, **options)
        self.stderr.write(self.style.SUCCESS(f"{options['suite']}: all identities hold"))

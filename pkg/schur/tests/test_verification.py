from django.test import SimpleTestCase, override_settings, tag
from rest_framework.renderers import JSONRenderer

from schur.exceptions import IdentityViolation, RangeError, UnsupportedFamilyError
from schur.services.families import (
    ClassicalFamily, LieCharacterFamily, LinearRecurrenceFamily, ShiftedFamily,
)
from schur.services.partitions import Partition
from schur.services.verification import IdentityVerifier, VerificationReport


class VerificationReportTests(SimpleTestCase):

    def test_passing_report(self):
        report = VerificationReport(suite='newton', family='classical', parameters={'range': 2})
        report.record(True, a=0, b=0)
        self.assertTrue(report.passed)
        self.assertEqual(
            report.to_text(),
            "suite: newton\nfamily: classical\nparameters: range=2\ncases: 1\nfailures: 0\nstatus: PASSED",
        )

    def test_keeps_the_first_counterexample(self):
        report = VerificationReport(suite='hooks', family='lie')
        with self.assertLogs('schur.services.verification', level='WARNING'):
            report.record(False, m=1, shape=Partition((2, 1)))
            report.record(False, m=2)
        self.assertFalse(report.passed)
        self.assertEqual(report.failures, 2)
        self.assertEqual(report.counterexample, {'m': 1, 'shape': [2, 1]})
        rendered = JSONRenderer().render(report.to_json()['counterexample']).decode()
        self.assertEqual(rendered, '{"m":1,"shape":[2,1]}')
        self.assertIn(f"counterexample: {rendered}", report.to_text())
        self.assertIn("status: FAILED", report.to_text())

    def test_attempt_turns_violations_into_failures(self):
        report = VerificationReport(suite='giambelli', family='classical')

        def broken():
            raise IdentityViolation("forms disagree", context={'n': 2})

        with self.assertLogs('schur.services.verification', level='WARNING'):
            report.attempt(broken, shape=Partition((1,)))
        report.attempt(lambda: True, shape=Partition())
        self.assertEqual((report.cases, report.failures), (2, 1))
        self.assertEqual(report.counterexample['detail'], {'n': 2})
        self.assertEqual(report.counterexample['error'], "forms disagree")

    def test_json_document(self):
        document = VerificationReport(suite='basis', family='classical', cases=3).to_json()
        self.assertEqual(document['schema'], 1)
        self.assertTrue(document['passed'])
        self.assertIsNone(document['counterexample'])


class IdentityVerifierTests(SimpleTestCase):

    def test_suite_names(self):
        self.assertEqual(
            IdentityVerifier.suites(),
            ['newton', 'matrices', 'giambelli', 'hooks', 'straightening', 'clifford', 'bernstein',
             'prop42', 'correspondence', 'heisenberg', 'char', 'linrec', 'shifted', 'skew', 'basis'],
        )

    def test_option_defaults(self):
        self.assertEqual(IdentityVerifier.resolve_options('giambelli', ClassicalFamily()), {'maxweight': 8})
        self.assertEqual(IdentityVerifier.resolve_options('giambelli', LieCharacterFamily()), {'maxweight': 6})
        self.assertEqual(IdentityVerifier.resolve_options('newton', ClassicalFamily(), range=2), {'range': 2})
        self.assertEqual(IdentityVerifier.resolve_options('shifted', ShiftedFamily())['seed'], 0)

    def test_unknown_suite(self):
        with self.assertRaises(RangeError):
            IdentityVerifier.run('nope', ClassicalFamily())

    def test_family_specific_suites(self):
        with self.assertRaises(UnsupportedFamilyError):
            IdentityVerifier.run('char', ClassicalFamily())
        with self.assertRaises(UnsupportedFamilyError):
            IdentityVerifier.run('shifted', LieCharacterFamily())
        with self.assertRaises(UnsupportedFamilyError):
            IdentityVerifier.run('linrec', ShiftedFamily())

    def assertPasses(self, suite, family, cases=None, **options):
        report = IdentityVerifier.run(suite, family, **options)
        self.assertTrue(report.passed, report.to_text())
        if cases is not None:
            self.assertEqual(report.cases, cases)
        return report

    def test_determinant_suites(self):
        self.assertPasses('newton', LieCharacterFamily(), cases=25, range=2)
        self.assertPasses('matrices', ShiftedFamily(), cases=10, range=2)
        self.assertPasses('hooks', LinearRecurrenceFamily((1, 1)), cases=36, range=2)
        self.assertPasses('giambelli', ClassicalFamily(), maxweight=3)
        self.assertPasses('basis', LieCharacterFamily(), maxweight=3)

    @override_settings(JTVO_RANDOM_SAMPLES=20)
    def test_straightening_suite(self):
        report = self.assertPasses('straightening', ShiftedFamily(), cases=40, seed=7)
        self.assertEqual(report.parameters, {'seed': 7})

    def test_clifford_suites(self):
        self.assertPasses('clifford', ClassicalFamily(), cases=1500, maxweight=2, kmax=2)
        self.assertPasses('bernstein', ClassicalFamily(), cases=14, maxweight=3)
        self.assertPasses('correspondence', ClassicalFamily(), maxweight=2, kmax=2)
        self.assertPasses('heisenberg', ClassicalFamily(), maxweight=2, kmax=1)

    def test_vertex_suites(self):
        self.assertPasses('prop42', ShiftedFamily(), maxweight=1)
        self.assertPasses('skew', ClassicalFamily(), maxweight=3)
        self.assertPasses('char', LieCharacterFamily(), maxweight=1, range=2)
        self.assertPasses('linrec', LinearRecurrenceFamily((1, 1)), maxweight=1, range=2)

    @override_settings(JTVO_RANDOM_SAMPLES=50)
    def test_shifted_suite(self):
        self.assertPasses('shifted', ShiftedFamily(), range=2)


@tag('acceptance')
class AcceptanceSweepTests(SimpleTestCase):
    """Suites at their default sizes; ``manage.py test --exclude-tag acceptance`` skips them."""

    FAMILIES = (
        ClassicalFamily(),
        LieCharacterFamily(),
        ShiftedFamily(),
        LinearRecurrenceFamily((1, 1)),
    )

    def assertSweep(self, suite, family, cases=None, **options):
        report = IdentityVerifier.run(suite, family, **options)
        self.assertTrue(report.passed, report.to_text())
        if cases is not None:
            self.assertEqual(report.cases, cases)

    def test_determinant_calculus(self):
        for family in self.FAMILIES:
            with self.subTest(family=str(family)):
                self.assertSweep('newton', family, cases=81)
                self.assertSweep('matrices', family, cases=10)
                self.assertSweep('hooks', family, cases=100)
                self.assertSweep('giambelli', family)
                self.assertSweep('skew', family)

    def test_straightening_and_basis(self):
        self.assertSweep('straightening', ClassicalFamily(), cases=400)
        self.assertSweep('basis', ClassicalFamily(), cases=7)
        self.assertSweep('basis', LieCharacterFamily(), cases=7)

    def test_clifford_action(self):
        self.assertSweep('clifford', ClassicalFamily(), cases=48165)
        self.assertSweep('bernstein', ClassicalFamily(), cases=38)
        self.assertSweep('correspondence', ClassicalFamily(), cases=18525)
        self.assertSweep('heisenberg', ClassicalFamily(), cases=3000)

    def test_skew_expansion_on_every_family(self):
        for family in self.FAMILIES:
            with self.subTest(family=str(family)):
                self.assertSweep('prop42', family, cases=396)

    def test_family_specific_identities(self):
        self.assertSweep('char', LieCharacterFamily())
        self.assertSweep('linrec', LinearRecurrenceFamily((1, 1)))
        self.assertSweep('shifted', ShiftedFamily())

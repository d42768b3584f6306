from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from schur.exceptions import LiteralError
from schur.services.boson import (
    BosonState, CliffordAction, HeisenbergAction, OperatorWord, SkewOperators, removal_shape,
)
from schur.services.families import ClassicalFamily, LieCharacterFamily, ShiftedFamily
from schur.services.partitions import Partition, partitions_up_to
from schur.services.poly import Poly

from .strategies import partitions

indices = st.integers(-5, 5)
charges = st.integers(-2, 2)

psi, psi_star = CliffordAction.psi, CliffordAction.psi_star


class BosonStateTests(SimpleTestCase):

    def test_parse_and_render(self):
        state = BosonState.parse("2,1@0;-1/2*1@1")
        self.assertEqual(str(state), "s[2,1]z^0 - 1/2*s[1]z^1")
        self.assertEqual(str(BosonState.parse("()@-1")), "s[()]z^-1")
        self.assertEqual(BosonState.parse("1@0;1@0"), BosonState.basis(Partition((1,)), 0, coeff=2))

    def test_parse_errors(self):
        for literal in ("2,1", "x*1@0", "1e5*1@0", "1.5*1@0", "1,2@0", "1@y", "", " ; "):
            with self.subTest(literal=literal):
                with self.assertRaises(LiteralError):
                    BosonState.parse(literal)

    def test_expand(self):
        state = BosonState.parse("1,1@0;2@0;1@1")
        h1 = Poly.generator('h', 1)
        self.assertEqual(state.expand(ClassicalFamily()), {0: h1 * h1, 1: h1})

    def test_to_json(self):
        self.assertEqual(
            BosonState.parse("-1/2*1@1").to_json(),
            [{'shape': [1], 'charge': 1, 'coeff': '-1/2'}],
        )

    def test_words(self):
        word = OperatorWord.parse("psi:3, psistar:0")
        self.assertEqual(word.letters, (('psi', 3), ('psistar', 0)))
        self.assertEqual(str(word), "psi:3,psistar:0")
        self.assertEqual(len(OperatorWord.parse("")), 0)
        for literal in ("phi:1", "psi3", "psi:x"):
            with self.subTest(literal=literal):
                with self.assertRaises(LiteralError):
                    OperatorWord.parse(literal)


class CliffordActionTests(SimpleTestCase):

    def setUp(self):
        self.vacuum = BosonState.vacuum()

    def test_on_the_vacuum(self):
        self.assertEqual(str(psi(1, self.vacuum)), "s[()]z^1")
        self.assertEqual(str(psi(3, self.vacuum)), "s[2]z^1")
        self.assertFalse(psi(0, self.vacuum))
        self.assertEqual(str(psi_star(0, self.vacuum)), "s[()]z^-1")
        self.assertEqual(str(psi_star(-1, self.vacuum)), "-s[1]z^-1")
        self.assertFalse(psi_star(1, self.vacuum))

    def test_psi_star_slot(self):
        shape = Partition((2, 1))
        self.assertEqual(CliffordAction.psi_star_slot(2, shape, 0), 1)
        self.assertEqual(CliffordAction.psi_star_slot(0, shape, 0), 2)
        self.assertEqual(CliffordAction.psi_star_slot(-2, shape, 0), 3)
        self.assertIsNone(CliffordAction.psi_star_slot(1, shape, 0))
        self.assertEqual(removal_shape(shape, 2), Partition((3,)))

    def test_apply_word_runs_right_to_left(self):
        word = OperatorWord.parse("psi:4,psi:2")
        self.assertEqual(str(CliffordAction.apply_word(word, self.vacuum)), "s[2,1]z^2")
        self.assertFalse(CliffordAction.apply_word(OperatorWord.parse("psi:2,psi:2"), self.vacuum))

    def test_creation_and_annihilation_words(self):
        for shape in partitions_up_to(4):
            with self.subTest(shape=str(shape)):
                created = CliffordAction.apply_word(CliffordAction.creation_word(shape), self.vacuum)
                self.assertEqual(created, BosonState.basis(shape, shape.length))
                annihilated = CliffordAction.apply_word(CliffordAction.annihilation_word(shape), self.vacuum)
                self.assertEqual(
                    annihilated,
                    BosonState.basis(shape.conjugate(), -shape.length, coeff=(-1) ** shape.weight),
                )

    @given(partitions(max_length=3, max_part=3), charges, indices, indices)
    @hypothesis_settings(max_examples=150, deadline=None)
    def test_clifford_relations(self, shape, charge, k, l):
        vector = BosonState.basis(shape, charge)
        self.assertFalse(psi(k, psi(l, vector)) + psi(l, psi(k, vector)))
        self.assertFalse(psi_star(k, psi_star(l, vector)) + psi_star(l, psi_star(k, vector)))
        expected = vector if k == l else BosonState.zero()
        self.assertEqual(psi(k, psi_star(l, vector)) + psi_star(l, psi(k, vector)), expected)


class SkewOperatorTests(SimpleTestCase):

    def test_empty_shape(self):
        for family in (ClassicalFamily(), LieCharacterFamily(), ShiftedFamily()):
            self.assertEqual(SkewOperators.d_skew(family, 0, Partition()), 1)
            self.assertEqual(SkewOperators.d_upper(family, -1, Partition()), 1)

    def test_classical_column_deletion(self):
        family = ClassicalFamily()
        for shape in partitions_up_to(4):
            for p in range(0, shape.length + 1):
                with self.subTest(shape=str(shape), p=p):
                    self.assertEqual(SkewOperators.d_skew(family, p, shape), SkewOperators.skew_by_column(shape, p))
        self.assertEqual(SkewOperators.d_skew(family, 3, Partition((2, 1))), 0)

    def test_upper_vanishes_for_non_negative_index(self):
        family = LieCharacterFamily()
        for shape in partitions_up_to(3):
            for p in range(0, 3):
                self.assertFalse(SkewOperators.d_upper(family, p, shape))


class HeisenbergTests(SimpleTestCase):

    def test_alpha_on_the_vacuum(self):
        vacuum = BosonState.vacuum()
        self.assertFalse(HeisenbergAction.alpha(1, vacuum))
        self.assertEqual(HeisenbergAction.alpha(-1, vacuum), BosonState.basis(Partition((1,)), 0))
        self.assertEqual(HeisenbergAction.alpha(0, BosonState.vacuum(3)), BosonState.vacuum(3) * 3)

    @given(partitions(max_length=3, max_part=3), charges, st.integers(-3, 3), st.integers(-3, 3))
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_commutator(self, shape, charge, j, k):
        vector = BosonState.basis(shape, charge)
        expected = vector * j if j == -k else BosonState.zero()
        self.assertEqual(HeisenbergAction.commutator(j, k, vector), expected)

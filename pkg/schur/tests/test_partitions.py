from itertools import product

from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings

from schur.exceptions import DomainError, LiteralError
from schur.services.families import ClassicalFamily
from schur.services.partitions import (
    ZERO, FrobeniusCoords, Partition, SignedPartition, parse_partition, parse_vector,
    partitions_of, partitions_up_to, permutation_sign, straighten, straighten_by_exchange,
)
from schur.services.poly import det_poly
from schur.services.schur_calculator import SchurCalculator, jacobi_trudi_matrix

from .strategies import integer_vectors, partitions


class PartitionTests(SimpleTestCase):

    def test_validation(self):
        with self.assertRaises(DomainError):
            Partition((1, 2))
        with self.assertRaises(DomainError):
            Partition((2, 0))
        self.assertEqual(Partition.from_parts([3, 1, 0, 0]), Partition((3, 1)))

    def test_conjugate(self):
        self.assertEqual(Partition((3, 2, 2, 2)).conjugate(), Partition((4, 4, 1)))
        self.assertEqual(Partition().conjugate(), Partition())

    def test_frobenius(self):
        coords = Partition((3, 2, 2, 2)).to_frobenius()
        self.assertEqual(coords, FrobeniusCoords((2, 0), (3, 2)))
        self.assertEqual(str(coords), "(2 0|3 2)")
        self.assertEqual(Partition.from_frobenius(coords), Partition((3, 2, 2, 2)))
        self.assertEqual(Partition.hook(2, 1), Partition((3, 1)))
        self.assertEqual(Partition.hook(2, 1).to_frobenius(), FrobeniusCoords((2,), (1,)))

    def test_frobenius_validation(self):
        with self.assertRaises(DomainError):
            FrobeniusCoords((1, 1), (2, 0))
        with self.assertRaises(DomainError):
            FrobeniusCoords((1,), ())

    @given(partitions())
    def test_conjugate_is_involution(self, shape):
        self.assertEqual(shape.conjugate().conjugate(), shape)
        self.assertEqual(shape.conjugate().weight, shape.weight)

    @given(partitions())
    def test_frobenius_round_trip(self, shape):
        coords = shape.to_frobenius()
        self.assertEqual(Partition.from_frobenius(coords), shape)
        self.assertEqual(shape.conjugate().to_frobenius(), coords.conjugate())

    def test_enumeration(self):
        self.assertEqual(
            [p.parts for p in partitions_of(4)],
            [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)],
        )
        self.assertEqual(len(list(partitions_up_to(3))), 7)
        self.assertEqual(list(partitions_of(0)), [Partition()])

    def test_permutation_sign(self):
        self.assertEqual(permutation_sign([0, 1, 2]), 1)
        self.assertEqual(permutation_sign([1, 0]), -1)
        self.assertEqual(permutation_sign([1, 2, 0]), 1)

    def test_literals(self):
        self.assertEqual(parse_vector(" 3,-1,2 "), (3, -1, 2))
        self.assertEqual(parse_vector("()"), ())
        self.assertEqual(parse_partition("2,1,0"), Partition((2, 1)))
        with self.assertRaises(LiteralError):
            parse_vector("3,x")
        with self.assertRaises(LiteralError):
            parse_partition("1,2")


class StraighteningTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(straighten((1, 2)), ZERO)
        self.assertEqual(straighten((0, 2)), SignedPartition(-1, Partition((1, 1))))
        self.assertEqual(straighten((-1, 2)), SignedPartition(-1, Partition((1,))))
        self.assertEqual(straighten((-1,)), ZERO)
        self.assertEqual(straighten((2, 1, 0)), SignedPartition(1, Partition((2, 1))))
        self.assertEqual(straighten(()), SignedPartition(1, Partition()))

    def test_matches_exchange_rule_exhaustively(self):
        for length in range(0, 5):
            for vector in product(range(-3, 7), repeat=length):
                with self.subTest(vector=vector):
                    self.assertEqual(straighten(vector), straighten_by_exchange(vector))

    @given(integer_vectors)
    @hypothesis_settings(max_examples=80, deadline=None)
    def test_matches_unreduced_determinant(self, vector):
        family = ClassicalFamily()
        signed = straighten(vector)
        direct = det_poly(jacobi_trudi_matrix(family, vector, len(vector)))
        self.assertEqual(direct, SchurCalculator.schur(family, vector))
        if not signed.sign:
            self.assertEqual(direct, 0)

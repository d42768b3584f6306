from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from schur.exceptions import DomainError, LiteralError, ShapeError
from schur.services.poly import GeneratorId, Monomial, Poly, det_poly, parse_rational, rank_of

from .strategies import polys

h1, h2, h3 = (Poly.generator('h', i) for i in (1, 2, 3))


class PolyArithmeticTests(SimpleTestCase):

    def test_additive_identity(self):
        self.assertEqual(Poly.zero() + h1, h1)
        self.assertEqual(h1 - h1, Poly.zero())

    def test_square_has_multiplicity_two(self):
        square = h1 * h1
        self.assertEqual(square.coefficient(Monomial.of(GeneratorId('h', 1), 2)), 1)
        self.assertEqual(str(square), "h1^2")

    def test_difference_of_squares(self):
        self.assertEqual((h1 + h2) * (h1 - h2), h1 * h1 - h2 * h2)

    def test_scalar_and_fraction_coefficients(self):
        value = h1 * Fraction(1, 2) + 3 * h2 - 1
        self.assertEqual(str(value), "-1 + 1/2*h1 + 3*h2")
        self.assertEqual(value.degree, 2)

    def test_constants_compare_with_scalars(self):
        self.assertEqual(Poly.constant(3), 3)
        self.assertEqual(hash(Poly.constant(Fraction(1, 2))), hash(Fraction(1, 2)))
        self.assertTrue(Poly.constant(5).is_constant())
        self.assertIsNone(Poly.zero().degree)

    def test_graded_generators(self):
        self.assertEqual(Poly.graded('h', 0), 1)
        self.assertEqual(Poly.graded('h', -2), 0)
        self.assertEqual(Poly.graded('h', 2), h2)

    def test_rejects_floats_and_zero_index(self):
        with self.assertRaises(DomainError):
            Poly.constant(0.5)
        with self.assertRaises(DomainError):
            GeneratorId('h', 0)

    def test_rational_literals(self):
        self.assertEqual(parse_rational(" -4/6 "), Fraction(-2, 3))
        self.assertEqual(Poly.constant("7"), 7)
        for literal in ("1e5", "1.5", "2/-3", "", "1/0"):
            with self.subTest(literal=literal):
                with self.assertRaises(LiteralError):
                    parse_rational(literal)

    def test_canonical_rendering(self):
        self.assertEqual(str(h1 * h1 - h2), "h1^2 - h2")
        self.assertEqual(str(Poly.zero()), "0")
        self.assertEqual(
            (h1 * h1 - h2).to_json(),
            [
                {'monomial': [['h', 1, 2]], 'num': 1, 'den': 1},
                {'monomial': [['h', 2, 1]], 'num': -1, 'den': 1},
            ],
        )

    def test_substitute(self):
        doubled = (h1 * h2).substitute(lambda g: Poly.generator('h', g.index) * 2)
        self.assertEqual(doubled, h1 * h2 * 4)

    @given(polys(), polys(), polys())
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual(a + b, b + a)
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * b, b * a)
        self.assertEqual(a * (b + c), a * b + a * c)


class DeterminantTests(SimpleTestCase):

    def test_empty_matrix(self):
        self.assertEqual(det_poly([]), 1)

    def test_two_by_two_is_s11(self):
        self.assertEqual(det_poly([[h1, h2], [1, h1]]), h1 * h1 - h2)

    def test_identity(self):
        for n in range(1, 5):
            identity = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            self.assertEqual(det_poly(identity), 1)

    def test_non_square(self):
        with self.assertRaises(ShapeError):
            det_poly([[h1, h2]])

    @given(st.lists(polys(max_terms=2), min_size=6, max_size=6))
    @hypothesis_settings(max_examples=30, deadline=None)
    def test_upper_triangular_is_diagonal_product(self, entries):
        a, b, c, d, e, f = entries
        matrix = [[a, b, c], [0, d, e], [0, 0, f]]
        self.assertEqual(det_poly(matrix), a * d * f)

    @given(st.integers(3, 4).flatmap(
        lambda n: st.tuples(st.just(n), st.lists(polys(max_terms=2), min_size=n * n, max_size=n * n))
    ))
    @hypothesis_settings(max_examples=20, deadline=None)
    def test_row_swap_negates(self, data):
        n, entries = data
        matrix = [entries[i * n:(i + 1) * n] for i in range(n)]
        swapped = [matrix[1], matrix[0]] + matrix[2:]
        self.assertEqual(det_poly(swapped), -det_poly(matrix))

    def test_rank(self):
        self.assertEqual(rank_of([h1, h2, h1 + h2]), 2)
        self.assertEqual(rank_of([h1 * h1, h2, Poly.one()]), 3)
        self.assertEqual(rank_of([]), 0)

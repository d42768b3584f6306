"""
Exact sparse polynomials over a countable set of graded generators.

A generator is a ``(tag, index)`` pair with ``index >= 1`` and degree equal to
its index. Index 0 of every family is the ring unit and negative indices are
zero, so neither is ever stored. Coefficients are ``Fraction`` values kept in
lowest terms; a ``Poly`` never holds a zero coefficient, which makes equality
of term maps the ring equality.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from ..exceptions import DomainError, LiteralError, ShapeError

logger = logging.getLogger(__name__)

RATIONAL_LITERAL = re.compile(r"-?\d+(?:/\d+)?", re.ASCII)


def parse_rational(text):
    """Only ``p`` and ``p/q`` are accepted; decimal and exponent forms are rejected."""
    text = text.strip()
    if not RATIONAL_LITERAL.fullmatch(text):
        raise LiteralError(f"malformed rational {text!r}; expected p or p/q")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise LiteralError(f"malformed rational {text!r}") from None


def as_coefficient(value):
    """Coerce an int / Fraction / 'p/q' string to an exact coefficient."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise DomainError(f"refusing inexact coefficient {value!r}")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


@dataclass(frozen=True, order=True)
class GeneratorId:
    tag: str
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise DomainError(f"generator index must be positive, got {self.tag}{self.index}")

    @property
    def degree(self):
        return self.index

    def __str__(self):
        return f"{self.tag}{self.index}"


@dataclass(frozen=True, order=True)
class Monomial:
    """Product of generators; ``factors`` is strictly ascending by generator."""

    factors: tuple = ()

    @classmethod
    def of(cls, generator, multiplicity=1):
        return cls(((generator, multiplicity),))

    @property
    def degree(self):
        return sum(g.index * mult for g, mult in self.factors)

    def __mul__(self, other):
        if not self.factors:
            return other
        if not other.factors:
            return self
        merged = dict(self.factors)
        for generator, mult in other.factors:
            merged[generator] = merged.get(generator, 0) + mult
        return Monomial(tuple(sorted(merged.items())))

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(
            str(g) if mult == 1 else f"{g}^{mult}" for g, mult in self.factors
        )

    def to_json(self):
        return [[g.tag, g.index, mult] for g, mult in self.factors]


ONE_MONOMIAL = Monomial()


class Poly:
    """Immutable exact polynomial; a finite map ``Monomial -> Fraction``."""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        cleaned = {}
        for monomial, coeff in (terms or {}).items():
            coeff = as_coefficient(coeff)
            if coeff:
                cleaned[monomial] = coeff
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        # terms already canonical: no zero coefficients
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def constant(cls, value):
        value = as_coefficient(value)
        return cls._wrap({ONE_MONOMIAL: value} if value else {})

    @classmethod
    def generator(cls, tag, index):
        return cls._wrap({Monomial.of(GeneratorId(tag, index)): Fraction(1)})

    @classmethod
    def graded(cls, tag, index):
        """Generator of a family with the unit at index 0 and zero below it."""
        if index < 0:
            return cls.zero()
        if index == 0:
            return cls.one()
        return cls.generator(tag, index)

    @classmethod
    def sum(cls, polys):
        """Sum many polynomials with a single accumulator."""
        acc = {}
        for poly in polys:
            for monomial, coeff in _coerce(poly)._terms.items():
                acc[monomial] = acc.get(monomial, 0) + coeff
        return cls._wrap({m: c for m, c in acc.items() if c})

    # -- inspection ---------------------------------------------------------

    def items(self):
        """Terms in canonical order: total degree, then monomial order."""
        return sorted(self._terms.items(), key=lambda item: (item[0].degree, item[0]))

    def coefficient(self, monomial):
        return self._terms.get(monomial, Fraction(0))

    @property
    def degree(self):
        """Filtration degree; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(m.degree for m in self._terms)

    def is_constant(self):
        return all(not m.factors for m in self._terms)

    def constant_term(self):
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    def tags(self):
        return {g.tag for m in self._terms for g, _ in m.factors}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            # constants hash like the scalar they compare equal to
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for monomial, coeff in other._terms.items():
            value = acc.get(monomial, 0) + coeff
            if value:
                acc[monomial] = value
            else:
                acc.pop(monomial, None)
        return Poly._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._terms or not other._terms:
            return Poly.zero()
        acc = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = m1 * m2
                acc[monomial] = acc.get(monomial, 0) + c1 * c2
        return Poly._wrap({m: c for m, c in acc.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError(f"only non-negative integer powers, got {exponent!r}")
        result, base = Poly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor):
        factor = as_coefficient(factor)
        if not factor:
            return Poly.zero()
        if factor == 1:
            return self
        return Poly._wrap({m: c * factor for m, c in self._terms.items()})

    def substitute(self, image):
        """Apply the ring homomorphism sending each generator ``g`` to ``image(g)``."""
        images = {}
        terms = []
        for monomial, coeff in self._terms.items():
            term = Poly.constant(coeff)
            for generator, mult in monomial.factors:
                if generator not in images:
                    images[generator] = image(generator)
                term = term * images[generator] ** mult
            terms.append(term)
        return Poly.sum(terms)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for position, (monomial, coeff) in enumerate(self.items()):
            magnitude = abs(coeff)
            if not monomial.factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = str(monomial)
            else:
                body = f"{magnitude}*{monomial}"
            if position == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" {'-' if coeff < 0 else '+'} {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def to_json(self):
        return [
            {'monomial': monomial.to_json(), 'num': coeff.numerator, 'den': coeff.denominator}
            for monomial, coeff in self.items()
        ]


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


def det_poly(matrix):
    """
    Exact determinant of a square matrix of polynomials.

    First-row cofactor expansion; every minor is identified by the row it starts
    at and the set of columns still available (a bitmask), and is computed once.
    """
    rows = [[_coerce(entry) for entry in row] for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ShapeError(f"determinant needs a square matrix, got a row of length {len(row)} in a {n}-row matrix")
    if n == 0:
        return Poly.one()

    memo = {}

    def minor(row, columns):
        if row == n:
            return Poly.one()
        key = (row, columns)
        cached = memo.get(key)
        if cached is not None:
            return cached
        terms = []
        sign = 1
        for j in range(n):
            if not columns >> j & 1:
                continue
            entry = rows[row][j]
            if entry:
                product = entry * minor(row + 1, columns & ~(1 << j))
                terms.append(product if sign > 0 else -product)
            sign = -sign
        value = Poly.sum(terms)
        memo[key] = value
        return value

    result = minor(0, (1 << n) - 1)
    logger.debug("det_poly %dx%d: %d minors", n, n, len(memo))
    return result


def rank_of(polys):
    """Rank over the rationals of a list of polynomials (exact elimination)."""
    monomials = sorted({m for p in polys for m in p._terms}, key=lambda m: (m.degree, m))
    matrix = [[p.coefficient(m) for m in monomials] for p in polys]
    rank = 0
    for col in range(len(monomials)):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col]:
                factor = matrix[r][col] / lead
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank

"""
Generator families: suppliers of the generalized complete functions h^(r)_k.

Every family works over a polynomial ring in base generators of one tag and
satisfies the structural requirements

    h(k, -k) = 1,    h(r, k) = 0 for k + r < 0,    deg h(r, k) <= k + r,

which the base class enforces for ``k + r <= 0``; subclasses only compute the
remaining values. Values are memoized per family instance; families are
immutable, so the cache never needs invalidating and concurrent fills are
harmless (both writers store equal values).
"""
from __future__ import annotations

import logging
from functools import lru_cache

from django.db import models

from ..exceptions import DomainError, LiteralError, UnsupportedFamilyError
from .poly import Poly, as_coefficient, det_poly, parse_rational

logger = logging.getLogger(__name__)


class FamilyKind(models.TextChoices):
    CLASSICAL = 'classical', 'Classical symmetric functions'
    LIE = 'lie', 'Universal characters of classical Lie algebras'
    SHIFTED = 'shifted', 'Shifted Schur functions'
    LINREC = 'linrec', 'Linear recurrence'
    TRIDIAGONAL = 'tridiagonal', 'Tridiagonal recurrence'


class GeneratorFamily:
    """Base class; subclasses implement ``_compute_h`` for ``k + r > 0``."""

    kind = None
    base_tag = 'h'

    def __init__(self):
        self._cache = {}

    @property
    def name(self):
        return self.kind.value

    def base(self, k):
        """h(0, k): the base generator of index k, 1 at k = 0, zero below."""
        return Poly.graded(self.base_tag, k)

    def h(self, r, k):
        if k + r < 0:
            return Poly.zero()
        if k + r == 0:
            return Poly.one()
        key = (r, k)
        value = self._cache.get(key)
        if value is None:
            value = self._compute_h(r, k)
            self._cache[key] = value
        return value

    def _compute_h(self, r, k):
        raise NotImplementedError

    def parameters(self):
        return {}

    def describe(self):
        return {'kind': self.name, **self.parameters()}

    def __str__(self):
        params = self.parameters()
        if not params:
            return self.name
        inner = ";".join(f"{key}={','.join(values)}" for key, values in params.items())
        return f"{self.name}[{inner}]"


class ClassicalFamily(GeneratorFamily):
    """Ordinary complete symmetric functions: h(r, k) = h_{k+r}."""

    kind = FamilyKind.CLASSICAL

    def _compute_h(self, r, k):
        return self.base(k + r)


class LieCharacterFamily(GeneratorFamily):
    """Universal characters of the symplectic / orthogonal algebras in the J_a."""

    kind = FamilyKind.LIE
    base_tag = 'J'

    def __init__(self):
        super().__init__()
        self._k_cache = {}

    def J(self, a):
        return self.base(a)

    def _compute_h(self, r, k):
        if r > 0:
            return self.J(k + r) + self.J(k - r)
        return self.J(k + r)

    def k_coeff(self, p):
        """K_p with J(u)K(-u) = 1: K_0 = 1, K_p = 0 for p < 0, det[J_{1-i+j}] otherwise."""
        if p < 0:
            return Poly.zero()
        if p == 0:
            return Poly.one()
        value = self._k_cache.get(p)
        if value is None:
            value = det_poly([[self.J(1 - i + j) for j in range(1, p + 1)] for i in range(1, p + 1)])
            self._k_cache[p] = value
        return value


class ShiftedFamily(GeneratorFamily):
    """Shifted Schur functions: h(r, k) = phi^r(h*_{k+r})."""

    kind = FamilyKind.SHIFTED
    base_tag = 'hstar'

    def __init__(self):
        super().__init__()
        self._inverse_images = {0: Poly.one()}

    def _compute_h(self, r, k):
        if r == 0:
            return self.base(k)
        if r > 0:
            return self.phi(self.h(r - 1, k + 1))
        return self.phi_inverse(self.h(r + 1, k - 1))

    def _check_ring(self, poly):
        foreign = poly.tags() - {self.base_tag}
        if foreign:
            raise DomainError(f"phi acts on the {self.base_tag} generators only, got {sorted(foreign)}")

    def phi(self, poly):
        """Ring automorphism with phi(h*_k) = h*_k + (k-1) h*_{k-1}."""
        self._check_ring(poly)
        return poly.substitute(lambda g: self.base(g.index) + (g.index - 1) * self.base(g.index - 1))

    def _inverse_image(self, k):
        value = self._inverse_images.get(k)
        if value is None:
            value = self.base(k) - (k - 1) * self._inverse_image(k - 1)
            self._inverse_images[k] = value
        return value

    def phi_inverse(self, poly):
        self._check_ring(poly)
        return poly.substitute(lambda g: self._inverse_image(g.index))

    def phi_power(self, poly, n):
        step = self.phi if n >= 0 else self.phi_inverse
        for _ in range(abs(n)):
            poly = step(poly)
        return poly


class LinearRecurrenceFamily(GeneratorFamily):
    """
    h(p, k) = sum_{i=-1}^{l} a_i(k) h(p-1, k-i) with a_{-1} = 1.

    ``coeffs`` are the constants a_0..a_l; ``coefficient_fn`` (if given) maps k to
    the k-dependent tuple a_0(k)..a_l(k) instead. Negative superscripts come from
    reading the same relation downwards:

        h(p-1, k+1) = h(p, k) - sum_{i=0}^{l} a_i(k) h(p-1, k-i),

    which fixes h(p-1, .) by induction on k from its floor h(p-1, 1-p) = 1.
    """

    kind = FamilyKind.LINREC

    def __init__(self, coeffs, coefficient_fn=None, label=None):
        super().__init__()
        self.coeffs = tuple(as_coefficient(c) for c in coeffs)
        if not self.coeffs and coefficient_fn is None:
            raise DomainError("a linear recurrence needs at least a_0")
        self.coefficient_fn = coefficient_fn
        self._label = label

    @property
    def is_constant(self):
        return self.coefficient_fn is None

    def coefficients_at(self, k):
        if self.coefficient_fn is None:
            return self.coeffs
        return tuple(as_coefficient(c) for c in self.coefficient_fn(k))

    def symbol(self):
        """Coefficients of f(u) = sum_{i=-1}^{l} a_i u^i, keyed by exponent."""
        if not self.is_constant:
            raise UnsupportedFamilyError("f(u) exists only for constant recurrence coefficients")
        return {-1: as_coefficient(1), **{i: a for i, a in enumerate(self.coeffs) if a}}

    def _compute_h(self, p, k):
        if p == 0:
            return self.base(k)
        if p > 0:
            coeffs = self.coefficients_at(k)
            terms = [self.h(p - 1, k + 1)]
            terms.extend(a * self.h(p - 1, k - i) for i, a in enumerate(coeffs) if a)
            return Poly.sum(terms)
        coeffs = self.coefficients_at(k - 1)
        terms = [self.h(p + 1, k - 1)]
        terms.extend(-a * self.h(p, k - 1 - i) for i, a in enumerate(coeffs) if a)
        return Poly.sum(terms)

    def parameters(self):
        if self._label is not None:
            return self._label
        return {'coeffs': [str(c) for c in self.coeffs]}


class TridiagonalFamily(LinearRecurrenceFamily):
    """h(p+1, k) = h(p, k+1) + a(k) h(p, k) + b(k) h(p, k-1), a and b affine in k."""

    kind = FamilyKind.TRIDIAGONAL

    def __init__(self, coeffs, slopes=(0, 0)):
        a0, b0 = (tuple(as_coefficient(c) for c in coeffs) + (as_coefficient(0),) * 2)[:2]
        a1, b1 = (tuple(as_coefficient(c) for c in slopes) + (as_coefficient(0),) * 2)[:2]
        super().__init__(
            (a0, b0),
            coefficient_fn=lambda k: (a0 + a1 * k, b0 + b1 * k),
            label={'coeffs': [str(a0), str(b0)], 'slopes': [str(a1), str(b1)]},
        )


def parse_coefficients(text):
    """``'1,1/2,-3'`` -> exact rationals."""
    text = (text or '').strip()
    if not text:
        return ()
    try:
        return tuple(parse_rational(piece) for piece in text.split(','))
    except LiteralError as exc:
        raise LiteralError(f"malformed coefficient list {text!r}: {exc}") from None


FAMILY_CACHE_SIZE = 64


@lru_cache(maxsize=FAMILY_CACHE_SIZE)
def get_family(kind, coeffs=(), slopes=()):
    """Shared family instances; only the most recently used parameter sets stay cached."""
    kind = FamilyKind(kind)
    if kind == FamilyKind.CLASSICAL:
        family = ClassicalFamily()
    elif kind == FamilyKind.LIE:
        family = LieCharacterFamily()
    elif kind == FamilyKind.SHIFTED:
        family = ShiftedFamily()
    elif kind == FamilyKind.LINREC:
        family = LinearRecurrenceFamily(coeffs or (0,))
    else:
        family = TridiagonalFamily(coeffs or (0, 0), slopes or (0, 0))
    logger.debug("built family %s", family)
    return family


def build_family(kind, coeffs='', slopes=''):
    """Family from CLI / API literals."""
    if kind not in FamilyKind.values:
        raise LiteralError(f"unknown family {kind!r}; choose from {', '.join(FamilyKind.values)}")
    return get_family(kind, parse_coefficients(coeffs), parse_coefficients(slopes))

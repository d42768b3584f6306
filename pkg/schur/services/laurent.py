"""
Finite Laurent polynomials in a formal variable u with Poly coefficients.

Used to read off u^k coefficients of generating-function identities. Infinite
series (H(u), J(u), K(-u), ...) are truncated by the caller to the exponent
window that can reach the coefficient being extracted.
"""
from __future__ import annotations

from .poly import Poly, _coerce


class LaurentPoly:
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs=None):
        self._coeffs = {}
        for exponent, value in (coeffs or {}).items():
            value = _coerce(value)
            if value:
                self._coeffs[exponent] = value

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def series(cls, coefficient, low, high):
        """Truncation sum_{n=low}^{high} coefficient(n) u^n."""
        return cls({n: coefficient(n) for n in range(low, high + 1)})

    def coefficient(self, exponent):
        return self._coeffs.get(exponent, Poly.zero())

    def exponents(self):
        return sorted(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __add__(self, other):
        acc = dict(self._coeffs)
        for exponent, value in other._coeffs.items():
            acc[exponent] = acc.get(exponent, Poly.zero()) + value
        return LaurentPoly(acc)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        acc = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                acc.setdefault(e1 + e2, []).append(c1 * c2)
        return LaurentPoly({e: Poly.sum(terms) for e, terms in acc.items()})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = LaurentPoly.monomial(0)
        for _ in range(exponent):
            result = result * self
        return result

    def substitute_inverse(self):
        """u -> 1/u."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def __repr__(self):
        inner = " + ".join(f"({self._coeffs[e]})u^{e}" for e in self.exponents())
        return f"LaurentPoly({inner or '0'})"

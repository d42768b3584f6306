"""
Coefficient-level vertex operator identities.

Every check compares fully expanded polynomials: the left side is the Clifford
action on s_lambda z^m expanded through the family, the right side is built from
h, e, D_p and D^(p). For the Lie-character and linear-recurrence families the
right side is read off as a coefficient of a generating function product.
"""
import logging
from dataclasses import dataclass

from ..exceptions import IdentityViolation, UnsupportedFamilyError
from .boson import CliffordAction, SkewOperators
from .families import LieCharacterFamily, LinearRecurrenceFamily
from .laurent import LaurentPoly
from .poly import Poly
from .schur_calculator import SchurCalculator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentitySides:
    left: Poly
    right: Poly

    @property
    def holds(self):
        return self.left == self.right


def _sign(n):
    return -1 if n % 2 else 1


class VertexIdentities:

    @staticmethod
    def psi_left(family, k, charge, shape):
        expanded = CliffordAction.psi_basis(k, shape, charge).expand(family)
        return expanded.get(charge + 1, Poly.zero())

    @staticmethod
    def psi_star_left(family, k, charge, shape):
        expanded = CliffordAction.psi_star_basis(k, shape, charge).expand(family)
        return expanded.get(charge - 1, Poly.zero())

    @staticmethod
    def _upper_range(family, shape):
        """p-support of D^(-p)(s_lambda): 1 <= p <= lambda_1 + 1."""
        top = shape.part(1) + 1
        beyond = SkewOperators.d_upper(family, -(top + 1), shape)
        if beyond:
            raise IdentityViolation(
                f"D^({-(top + 1)}) does not vanish on {shape}",
                context={'shape': shape.to_json(), 'value': str(beyond)},
            )
        return range(1, top + 1)

    @staticmethod
    def prop42_sides(family, k, charge, shape):
        """
        psi_k s_lambda z^m = sum_p (-1)^p h(p, k-m-1) D_p(s_lambda) z^(m+1)
        psi*_k s_lambda z^m = (-1)^a sum_p (-1)^p e(p, a) D^(-p)(s_lambda) z^(m-1), a = k-m+1
        """
        s = k - charge - 1
        psi_right = Poly.sum(
            _sign(p) * family.h(p, s) * SkewOperators.d_skew(family, p, shape)
            for p in range(0, shape.length + 1)
        )
        a = k - charge + 1
        star_right = Poly.sum(
            _sign(p) * SchurCalculator.elementary(family, p, a) * SkewOperators.d_upper(family, -p, shape)
            for p in VertexIdentities._upper_range(family, shape)
            if p >= a
        ) * _sign(a)
        return (
            IdentitySides(VertexIdentities.psi_left(family, k, charge, shape), psi_right),
            IdentitySides(VertexIdentities.psi_star_left(family, k, charge, shape), star_right),
        )

    @staticmethod
    def verify_prop42(family, k, charge, shape):
        psi_sides, star_sides = VertexIdentities.prop42_sides(family, k, charge, shape)
        return psi_sides.holds, star_sides.holds

    @staticmethod
    def _d_lower_series(family, shape, sign):
        """DE(sign * u) = sum_p D_p (sign * u)^p."""
        return LaurentPoly({
            p: SkewOperators.d_skew(family, p, shape) * sign ** p
            for p in range(0, shape.length + 1)
        })

    @staticmethod
    def _d_upper_series(family, shape):
        """DH(u) = sum_{p>=1} D^(-p) u^p."""
        return LaurentPoly({
            p: SkewOperators.d_upper(family, -p, shape)
            for p in VertexIdentities._upper_range(family, shape)
        })

    @staticmethod
    def char_sides(family, k, charge, shape):
        """
        Coefficient form of the Lie-character vertex operators:
        psi side   [u^s]  J(u) (DE(-u) + DE(-1/u) - D_0),   s = k-m-1
        psi* side  [u^-a] K(-u) (DH(1/u) - DH(u)),          a = k-m+1
        """
        if not isinstance(family, LieCharacterFamily):
            raise UnsupportedFamilyError(f"the character identities need the lie family, got {family}")
        s = k - charge - 1
        lower = VertexIdentities._d_lower_series(family, shape, -1)
        j_series = LaurentPoly.series(family.J, 0, max(s + shape.length, 0))
        bracket = lower + lower.substitute_inverse() - LaurentPoly.monomial(0, SkewOperators.d_skew(family, 0, shape))
        psi_right = (j_series * bracket).coefficient(s)

        a = k - charge + 1
        upper = VertexIdentities._d_upper_series(family, shape)
        reach = max(0, shape.part(1) + 1 - a, -a - 1)
        k_series = LaurentPoly.series(lambda n: family.k_coeff(n) * _sign(n), 0, reach)
        star_right = (k_series * (upper.substitute_inverse() - upper)).coefficient(-a)
        return (
            IdentitySides(VertexIdentities.psi_left(family, k, charge, shape), psi_right),
            IdentitySides(VertexIdentities.psi_star_left(family, k, charge, shape), star_right),
        )

    @staticmethod
    def verify_char_vertex(family, k, charge, shape):
        psi_sides, star_sides = VertexIdentities.char_sides(family, k, charge, shape)
        return psi_sides.holds, star_sides.holds

    @staticmethod
    def _require_constant_recurrence(family):
        if not isinstance(family, LinearRecurrenceFamily) or not family.is_constant:
            raise UnsupportedFamilyError(
                f"the recurrence vertex identities need constant recurrence coefficients, got {family}"
            )

    @staticmethod
    def recurrence_convolution(family, p):
        """Coefficients of g(u)^p, g(u) = sum_{i=-1}^{l} (-1)^(i-1) a_i u^i."""
        VertexIdentities._require_constant_recurrence(family)
        g = LaurentPoly({i: Poly.constant(a * _sign(i - 1)) for i, a in family.symbol().items()})
        return g ** p

    @staticmethod
    def elementary_by_convolution(family, p, a):
        """e^(p)_a = sum_n c^(p)_n e^(0)_{a+n}."""
        weights = VertexIdentities.recurrence_convolution(family, p)
        return Poly.sum(
            weights.coefficient(n) * SchurCalculator.elementary(family, 0, a + n)
            for n in weights.exponents()
        )

    @staticmethod
    def linrec_sides(family, k, charge, shape):
        """
        psi side   [u^s] H(u) sum_{p=0}^{l} (-f(u))^p D_p,  f(u) = sum_{i=-1}^{l} a_i u^i
        psi* side  the psi* decomposition with e(p, a) replaced by its g(u)^p convolution
        """
        VertexIdentities._require_constant_recurrence(family)
        s = k - charge - 1
        minus_f = -LaurentPoly({i: Poly.constant(a) for i, a in family.symbol().items()})
        skew_sum = LaurentPoly()
        for p in range(0, shape.length + 1):
            skew_sum = skew_sum + (minus_f ** p) * SkewOperators.d_skew(family, p, shape)
        h_series = LaurentPoly.series(family.base, 0, max(s + shape.length, 0))
        psi_right = (h_series * skew_sum).coefficient(s)

        a = k - charge + 1
        star_right = Poly.sum(
            _sign(p) * VertexIdentities.elementary_by_convolution(family, p, a)
            * SkewOperators.d_upper(family, -p, shape)
            for p in VertexIdentities._upper_range(family, shape)
        ) * _sign(a)
        return (
            IdentitySides(VertexIdentities.psi_left(family, k, charge, shape), psi_right),
            IdentitySides(VertexIdentities.psi_star_left(family, k, charge, shape), star_right),
        )

    @staticmethod
    def verify_linrec_vertex(family, k, charge, shape):
        psi_sides, star_sides = VertexIdentities.linrec_sides(family, k, charge, shape)
        return psi_sides.holds, star_sides.holds

"""
The boson space: exact combinations of basis vectors s_lambda z^m, the Clifford
operators psi_k / psi*_k acting on them, the skew operators D_p / D^(p) and the
normal-ordered Heisenberg generators.

The Clifford action is written on the Schur basis and is the same for every
generator family; a family only enters when a state is expanded into
polynomials (``BosonState.expand``) or through D_p / D^(p).
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from ..exceptions import IdentityViolation, LiteralError
from .linear import LinearCombination
from .partitions import Partition, parse_partition, straighten
from .poly import Poly, as_coefficient, det_poly, parse_rational
from .schur_calculator import SchurCalculator

logger = logging.getLogger(__name__)


class BosonState(LinearCombination):
    """Keys are ``(Partition, charge)``."""

    __slots__ = ()

    @staticmethod
    def sort_key(key):
        shape, charge = key
        return (charge, shape.weight, shape.parts)

    def render_basis(self, key):
        shape, charge = key
        return f"s[{shape}]z^{charge}"

    @classmethod
    def vacuum(cls, charge=0):
        return cls.basis(Partition(), charge)

    @classmethod
    def parse(cls, text):
        """``'2,1@0;-1/2*1@1'``: terms ``[c*]shape@charge`` joined by ``;``."""
        terms = {}
        for piece in (text or '').split(';'):
            piece = piece.strip()
            if not piece:
                continue
            coeff = 1
            if '*' in piece:
                raw_coeff, piece = piece.split('*', 1)
                coeff = parse_rational(raw_coeff)
            shape_text, sep, charge_text = piece.rpartition('@')
            if not sep:
                raise LiteralError(f"state term {piece!r} needs a charge: shape@m")
            try:
                charge = int(charge_text)
            except ValueError:
                raise LiteralError(f"malformed charge {charge_text!r}") from None
            key = (parse_partition(shape_text), charge)
            terms[key] = terms.get(key, 0) + as_coefficient(coeff)
        if not terms:
            raise LiteralError(f"empty state literal {text!r}")
        return cls(terms)

    def expand(self, family):
        """Charge -> polynomial sum of coeff * s_lambda over that charge."""
        components = {}
        for (shape, charge), coeff in self.items():
            components.setdefault(charge, []).append(
                SchurCalculator.schur(family, shape.parts) * coeff
            )
        return {charge: Poly.sum(polys) for charge, polys in components.items()}

    def to_json(self):
        return [
            {'shape': shape.to_json(), 'charge': charge, 'coeff': str(coeff)}
            for (shape, charge), coeff in self.items()
        ]


@dataclass(frozen=True)
class OperatorWord:
    """Letters ``(kind, index)`` with kind ``psi`` or ``psistar``, applied right to left."""

    letters: tuple = ()

    KINDS = ('psi', 'psistar')

    def __post_init__(self):
        for kind, _ in self.letters:
            if kind not in self.KINDS:
                raise LiteralError(f"unknown operator {kind!r}; use psi or psistar")

    @classmethod
    def parse(cls, text):
        letters = []
        for piece in (text or '').split(','):
            piece = piece.strip()
            if not piece:
                continue
            kind, sep, index = piece.partition(':')
            if not sep:
                raise LiteralError(f"operator letter {piece!r} must look like psi:3")
            try:
                letters.append((kind.strip(), int(index)))
            except ValueError:
                raise LiteralError(f"malformed operator index in {piece!r}") from None
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ",".join(f"{kind}:{index}" for kind, index in self.letters)


def removal_shape(shape, t):
    """(lambda_1+1, ..., lambda_{t-1}+1, lambda_{t+1}, ...) with the zero tail."""
    head = tuple(shape.part(i) + 1 for i in range(1, t))
    return Partition.from_parts(head + shape.parts[t:])


class CliffordAction:
    """psi_k / psi*_k on the Schur basis."""

    @staticmethod
    def psi_basis(k, shape, charge):
        signed = straighten((k - charge - 1,) + shape.parts)
        if not signed.sign:
            return BosonState.zero()
        return BosonState.basis(signed.shape, charge + 1, coeff=signed.sign)

    @staticmethod
    def psi_star_slot(k, shape, charge):
        """The unique t >= 1 with k - m - 1 = lambda_t - t, or None."""
        target = k - charge - 1
        for t in range(1, shape.length + 1):
            if shape.part(t) - t == target:
                return t
        # beyond the stored parts lambda_t - t = -t
        if -target > shape.length:
            return -target
        return None

    @staticmethod
    def psi_star_basis(k, shape, charge):
        t = CliffordAction.psi_star_slot(k, shape, charge)
        if t is None:
            return BosonState.zero()
        sign = 1 if t % 2 else -1
        return BosonState.basis(removal_shape(shape, t), charge - 1, coeff=sign)

    @staticmethod
    def psi(k, state):
        return state.map_basis(lambda key: CliffordAction.psi_basis(k, *key))

    @staticmethod
    def psi_star(k, state):
        return state.map_basis(lambda key: CliffordAction.psi_star_basis(k, *key))

    @staticmethod
    def apply_letter(kind, index, state):
        if kind == 'psi':
            return CliffordAction.psi(index, state)
        return CliffordAction.psi_star(index, state)

    @staticmethod
    def apply_word(word, state):
        for kind, index in reversed(word.letters):
            state = CliffordAction.apply_letter(kind, index, state)
        return state

    @staticmethod
    def creation_word(shape):
        """Word with psi_{lambda_1+l} ... psi_{lambda_l+1} (vacuum) = s_lambda z^l."""
        l = shape.length
        return OperatorWord(tuple(('psi', shape.part(i) + l - i + 1) for i in range(1, l + 1)))

    @staticmethod
    def annihilation_word(shape):
        """Word with psi*_{-lambda_1-l+1} ... psi*_{-lambda_l} (vacuum) = (-1)^|lambda| s_lambda' z^-l."""
        l = shape.length
        return OperatorWord(tuple(('psistar', -shape.part(i) - (l - i)) for i in range(1, l + 1)))


class SkewOperators:
    """D_p (column deletion) and D^(p) (column augmentation) on s_lambda."""

    @staticmethod
    def _deleted_column_det(family, shape, p, size):
        columns = [c for c in range(size + 1) if c != p]
        return det_poly([
            [family.h(c, shape.part(i) - i) for c in columns]
            for i in range(1, size + 1)
        ])

    @staticmethod
    def d_skew(family, p, shape):
        l = shape.length
        if p < 0 or p > l:
            return Poly.zero()
        value = SkewOperators._deleted_column_det(family, shape, p, l)
        if settings.JTVO_STABILIZATION_CHECK:
            extended = SkewOperators._deleted_column_det(family, shape, p, l + 1)
            if extended != value:
                raise IdentityViolation(
                    f"D_{p} determinant of {shape} does not stabilize for {family}",
                    context={'p': p, 'shape': shape.to_json()},
                )
        return value

    @staticmethod
    def d_upper(family, p, shape):
        """
        sum_t (-1)^(t+1) h(p, lambda_t - t + 2) s_(lambda_1+1, ..., lambda_{t-1}+1, lambda_{t+1}, ...).

        For t > l(lambda) the h factor is h(p, 2 - t), zero once t > p + 2; the
        sum stops at max(l, p + 2).
        """
        last = max(shape.length, p + 2)
        boundary = family.h(p, shape.part(last + 1) - (last + 1) + 2)
        if boundary:
            raise IdentityViolation(
                f"D^({p}) support bound {last} is too small for {shape}",
                context={'p': p, 'shape': shape.to_json(), 'term': str(boundary)},
            )
        terms = []
        for t in range(1, last + 1):
            factor = family.h(p, shape.part(t) - t + 2)
            if not factor:
                continue
            rest = SchurCalculator.schur(family, removal_shape(shape, t).parts)
            product = factor * rest
            terms.append(product if t % 2 else -product)
        return Poly.sum(terms)

    @staticmethod
    def skew_by_column(shape, p):
        """Classical skew Schur determinant det[h_{lambda_i - nu_j - i + j}] with nu = (1^p)."""
        l = shape.length
        nu = Partition((1,) * p)
        return det_poly([
            [Poly.graded('h', shape.part(i) - nu.part(j) - i + j) for j in range(1, l + 1)]
            for i in range(1, l + 1)
        ])


class HeisenbergAction:
    """alpha_k = sum_{j>=1} psi_j psi*_{j+k} - sum_{j<=0} psi*_{j+k} psi_j."""

    @staticmethod
    def _alpha_basis(k, shape, charge):
        vector = BosonState.basis(shape, charge)
        # occupied fermion indices are lambda_t + m - t + 1: at most lambda_1 + m, all <= m - l
        top = shape.part(1) + charge - k
        bottom = charge - shape.length + 1
        if top + 1 >= 1 and CliffordAction.psi_star(top + 1 + k, vector):
            raise IdentityViolation(f"alpha_{k} range misses j={top + 1} on {vector}")
        if bottom - 1 <= 0 and CliffordAction.psi(bottom - 1, vector):
            raise IdentityViolation(f"alpha_{k} range misses j={bottom - 1} on {vector}")
        positive = [
            CliffordAction.psi(j, CliffordAction.psi_star(j + k, vector))
            for j in range(1, top + 1)
        ]
        negative = [
            CliffordAction.psi_star(j + k, CliffordAction.psi(j, vector))
            for j in range(bottom, 1)
        ]
        return BosonState.sum(positive) - BosonState.sum(negative)

    @staticmethod
    def alpha(k, state):
        return state.map_basis(lambda key: HeisenbergAction._alpha_basis(k, *key))

    @staticmethod
    def commutator(j, k, state):
        return (
            HeisenbergAction.alpha(j, HeisenbergAction.alpha(k, state))
            - HeisenbergAction.alpha(k, HeisenbergAction.alpha(j, state))
        )

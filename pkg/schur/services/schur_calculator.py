import logging
from functools import lru_cache

from django.conf import settings

from ..exceptions import IdentityViolation, RangeError
from .partitions import straighten
from .poly import Poly, det_poly

logger = logging.getLogger(__name__)


def jacobi_trudi_matrix(family, parts, size):
    """[h(j-1, lambda_i - i + 1)] for i, j = 1..size, zero-extending ``parts``."""
    row = lambda i: parts[i - 1] if i <= len(parts) else 0
    return [
        [family.h(j - 1, row(i) - i + 1) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]


@lru_cache(maxsize=4096)
def _schur_of_shape(family, shape):
    value = det_poly(jacobi_trudi_matrix(family, shape.parts, shape.length))
    if settings.JTVO_STABILIZATION_CHECK:
        extended = det_poly(jacobi_trudi_matrix(family, shape.parts, shape.length + 1))
        if extended != value:
            raise IdentityViolation(
                f"Jacobi-Trudi determinant of {shape} does not stabilize for {family}",
                context={'shape': shape.to_json(), 'size': shape.length + 1},
            )
    logger.debug("schur %s for %s: %d terms", shape, family, len(value))
    return value


@lru_cache(maxsize=4096)
def _elementary(family, p, a):
    size = p - a
    return det_poly([
        [family.h(-p + j, p + 1 - i) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ])


class SchurCalculator:
    """
    Generalized Schur calculus over a generator family: Jacobi-Trudi, elementary
    functions, Newton's identity, H/E matrices, hooks and Giambelli.
    """

    @staticmethod
    def schur(family, vector):
        """s_v for any integer vector, reduced through straightening."""
        signed = straighten(vector)
        if not signed.sign:
            return Poly.zero()
        value = _schur_of_shape(family, signed.shape)
        return value if signed.sign > 0 else -value

    @staticmethod
    def elementary(family, p, a):
        """e^(p)_a: 0 for p < a, 1 for p = a, det[h(-p+j, p+1-i)] of size p-a otherwise."""
        if p < a:
            return Poly.zero()
        if p == a:
            return Poly.one()
        return _elementary(family, p, a)

    @staticmethod
    def newton_sum(family, a, b):
        """
        sum_p (-1)^(a-p) h(p, b) e(-p, a); every term outside -b <= p <= -a vanishes.
        The result must be the constant delta_{a,b}.
        """
        total = Poly.sum(
            (-1) ** ((a - p) % 2) * family.h(p, b) * SchurCalculator.elementary(family, -p, a)
            for p in range(-b, -a + 1)
        )
        if not total.is_constant():
            raise IdentityViolation(
                f"Newton sum for a={a}, b={b} is not constant: {total}",
                context={'a': a, 'b': b, 'value': str(total)},
            )
        return total.constant_term()

    @staticmethod
    def he_matrices(family, M, N):
        """Truncations to rows/columns M..N of H_{bp} = h(p, -b) and E_{pa} = (-1)^(a-p) e(-p, -a)."""
        if M >= N:
            raise RangeError(f"matrix truncation needs M < N, got M={M}, N={N}")
        indices = range(M, N + 1)
        H = [[family.h(p, -b) for p in indices] for b in indices]
        E = [
            [(-1) ** ((a - p) % 2) * SchurCalculator.elementary(family, -p, -a) for a in indices]
            for p in indices
        ]
        return H, E

    @staticmethod
    def matrix_product(left, right):
        return [
            [Poly.sum(row[t] * right[t][j] for t in range(len(right))) for j in range(len(right[0]))]
            for row in left
        ]

    @staticmethod
    def is_identity(matrix):
        return all(
            entry == (1 if i == j else 0)
            for i, row in enumerate(matrix) for j, entry in enumerate(row)
        )

    @staticmethod
    def hook_schur(family, m, n):
        """s_(m|n) = sum_{p=0}^{n} (-1)^p h(p, m+1) e(-p, -n)."""
        return Poly.sum(
            (-1) ** p * family.h(p, m + 1) * SchurCalculator.elementary(family, -p, -n)
            for p in range(0, n + 1)
        )

    @staticmethod
    def giambelli_extended(family, shape, n):
        if n < shape.length:
            raise RangeError(f"Giambelli size {n} is below the length of {shape}")
        return det_poly([
            [SchurCalculator.hook_schur(family, shape.part(i) - i, n - j) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ])

    @staticmethod
    def giambelli_frobenius(family, shape):
        coords = shape.to_frobenius()
        return det_poly([
            [SchurCalculator.hook_schur(family, alpha, beta) for beta in coords.betas]
            for alpha in coords.alphas
        ])

    @staticmethod
    def giambelli(family, shape, n):
        """
        det[s_(lambda_i - i | n - j)] of size n, cross-checked against the r x r
        Frobenius form and the Jacobi-Trudi value; returns the r x r form.
        """
        extended = SchurCalculator.giambelli_extended(family, shape, n)
        compact = SchurCalculator.giambelli_frobenius(family, shape)
        direct = SchurCalculator.schur(family, shape.parts)
        if not extended == compact == direct:
            raise IdentityViolation(
                f"Giambelli forms disagree for {shape} at n={n}",
                context={
                    'shape': shape.to_json(), 'n': n,
                    'extended': str(extended), 'frobenius': str(compact), 'schur': str(direct),
                },
            )
        return compact

    @staticmethod
    def dual_jacobi_trudi(family, shape):
        """det[e(i, j - mu_j)] with mu the conjugate partition."""
        mu = shape.conjugate()
        k = mu.length
        return det_poly([
            [SchurCalculator.elementary(family, i, j - mu.part(j)) for j in range(1, k + 1)]
            for i in range(1, k + 1)
        ])

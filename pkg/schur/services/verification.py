"""
Verification suites: exhaustive or seeded sweeps of the exact identities.

Each suite fills a ``VerificationReport``; a case raising ``IdentityViolation``
counts as a failed case so one bad input never aborts the sweep. Only the
first counterexample is kept. Sweeps are sequential and deterministic for a
fixed seed.
"""
import logging
import random
from dataclasses import dataclass, field

from django.conf import settings
from rest_framework.renderers import JSONRenderer

from ..exceptions import IdentityViolation, RangeError, UnsupportedFamilyError
from .boson import BosonState, CliffordAction, HeisenbergAction, SkewOperators
from .families import (
    ClassicalFamily, FamilyKind, LieCharacterFamily, ShiftedFamily, get_family,
)
from .fermion import FermionAction, FermionState, to_boson
from .partitions import Partition, partitions_up_to, straighten, straighten_by_exchange
from .poly import Poly, rank_of
from .schur_calculator import SchurCalculator
from .vertex import VertexIdentities

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class VerificationReport:
    suite: str
    family: str
    parameters: dict = field(default_factory=dict)
    cases: int = 0
    failures: int = 0
    counterexample: dict = None

    @property
    def passed(self):
        return self.failures == 0

    def record(self, ok, **context):
        self.cases += 1
        if ok:
            return
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = _jsonable(context)
        logger.warning("%s [%s] failed: %s", self.suite, self.family, context)

    def attempt(self, predicate, **context):
        """Run ``predicate()`` (truthy on success) as one case."""
        try:
            ok = predicate()
        except IdentityViolation as exc:
            self.record(False, error=str(exc), detail=exc.context, **context)
            return
        self.record(bool(ok), **context)

    def to_text(self):
        lines = [
            f"suite: {self.suite}",
            f"family: {self.family}",
        ]
        if self.parameters:
            rendered = " ".join(f"{key}={value}" for key, value in sorted(self.parameters.items()))
            lines.append(f"parameters: {rendered}")
        lines += [
            f"cases: {self.cases}",
            f"failures: {self.failures}",
            f"status: {'PASSED' if self.passed else 'FAILED'}",
        ]
        if self.counterexample is not None:
            lines.append(f"counterexample: {JSONRenderer().render(self.counterexample).decode()}")
        return "\n".join(lines)

    def to_json(self):
        return {
            'schema': SCHEMA_VERSION,
            'suite': self.suite,
            'family': self.family,
            'parameters': self.parameters,
            'cases': self.cases,
            'failures': self.failures,
            'passed': self.passed,
            'counterexample': self.counterexample,
        }


def _jsonable(value):
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, Partition):
        return value.to_json()
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def _basis_vectors(max_weight, max_charge):
    for shape in partitions_up_to(max_weight):
        for charge in range(-max_charge, max_charge + 1):
            yield shape, charge


def _vertex_sweep(max_weight, low=-4, high=6):
    """(shape, k, m) with |lambda| <= max_weight, low <= k-m-1 <= high, m in {-1, 0, 1}."""
    for shape in partitions_up_to(max_weight):
        for charge in (-1, 0, 1):
            for s in range(low, high + 1):
                yield shape, s + charge + 1, charge


def _delta(i, j):
    return 1 if i == j else 0


class IdentityVerifier:
    """
    Runs one named suite against one family. Option defaults follow the
    acceptance sweeps; ``None`` means "use the suite default".
    """

    DEFAULTS = {
        'newton': {'range': 4},
        'matrices': {'range': 4},
        'giambelli': {'maxweight': None},
        'hooks': {'range': 4},
        'straightening': {'seed': None},
        'clifford': {'maxweight': 5, 'kmax': 6},
        'bernstein': {'maxweight': 5},
        'prop42': {'maxweight': 4},
        'correspondence': {'maxweight': 5, 'kmax': 6},
        'heisenberg': {'maxweight': 4, 'kmax': 3},
        'char': {'maxweight': 3, 'range': 4},
        'linrec': {'maxweight': 3, 'range': 4},
        'shifted': {'range': 4, 'seed': None},
        'skew': {'maxweight': 5},
        'basis': {'maxweight': 6},
    }

    @staticmethod
    def suites():
        return list(IdentityVerifier.DEFAULTS)

    @staticmethod
    def resolve_options(suite, family, **options):
        resolved = {}
        for key, default in IdentityVerifier.DEFAULTS[suite].items():
            value = options.get(key)
            if value is None:
                value = default
            if key == 'maxweight' and value is None:
                value = 8 if family.kind == FamilyKind.CLASSICAL else 6
            if key == 'seed' and value is None:
                value = settings.JTVO_DEFAULT_SEED
            resolved[key] = value
        return resolved

    @staticmethod
    def run(suite, family, **options):
        if suite not in IdentityVerifier.DEFAULTS:
            raise RangeError(f"unknown suite {suite!r}; choose from {', '.join(IdentityVerifier.suites())}")
        parameters = IdentityVerifier.resolve_options(suite, family, **options)
        report = VerificationReport(suite=suite, family=str(family), parameters=parameters)
        logger.info("running %s for %s with %s", suite, family, parameters)
        kwargs = {('span' if key == 'range' else key): value for key, value in parameters.items()}
        getattr(IdentityVerifier, f"_suite_{suite}")(report, family, **kwargs)
        logger.info("%s for %s: %d cases, %d failures", suite, family, report.cases, report.failures)
        return report

    # -- determinant calculus -----------------------------------------------

    @staticmethod
    def _suite_newton(report, family, span):
        for a in range(-span, span + 1):
            for b in range(-span, span + 1):
                report.attempt(
                    lambda: SchurCalculator.newton_sum(family, a, b) == _delta(a, b),
                    a=a, b=b,
                )

    @staticmethod
    def _suite_matrices(report, family, span):
        for M, N in ((-span, span), (-span - 2, span - 2)):
            H, E = SchurCalculator.he_matrices(family, M, N)
            size = len(H)
            for name, matrix in (('H', H), ('E', E)):
                report.record(
                    all(matrix[i][i] == 1 for i in range(size)),
                    check=f"{name} unit diagonal", M=M, N=N,
                )
                report.record(
                    all(not matrix[i][j] for i in range(size) for j in range(i)),
                    check=f"{name} upper triangular", M=M, N=N,
                )
            report.record(
                SchurCalculator.is_identity(SchurCalculator.matrix_product(H, E)),
                check="H*E = Id", M=M, N=N,
            )

    @staticmethod
    def _suite_giambelli(report, family, maxweight):
        for shape in partitions_up_to(maxweight):
            for n in (shape.length, shape.length + 2):
                report.attempt(
                    lambda: SchurCalculator.giambelli(family, shape, n) is not None,
                    check="giambelli", shape=shape, n=n,
                )
            report.attempt(
                lambda: SchurCalculator.dual_jacobi_trudi(family, shape) == SchurCalculator.schur(family, shape.parts),
                check="dual Jacobi-Trudi", shape=shape,
            )

    @staticmethod
    def _suite_hooks(report, family, span):
        for m in range(-span - 1, span + 1):
            for n in range(-span - 1, span + 1):
                if m >= 0 and n >= 0:
                    expected = SchurCalculator.schur(family, Partition.hook(m, n).parts)
                elif m + n == -1 and n >= 0:
                    expected = Poly.constant((-1) ** n)
                else:
                    expected = Poly.zero()
                report.attempt(
                    lambda: SchurCalculator.hook_schur(family, m, n) == expected,
                    m=m, n=n,
                )

    @staticmethod
    def _suite_straightening(report, family, seed):
        rng = random.Random(seed)
        for _ in range(settings.JTVO_RANDOM_SAMPLES):
            vector = tuple(rng.randint(-3, 6) for _ in range(rng.randint(0, 4)))
            signed = straighten(vector)
            report.record(
                straighten_by_exchange(vector) == signed,
                check="closed form vs exchange rule", vector=vector,
            )
            report.attempt(
                lambda: SchurCalculator.schur(family, vector)
                == SchurCalculator.schur(family, signed.shape.parts) * signed.sign,
                check="schur of vector", vector=vector,
            )

    # -- Clifford action ------------------------------------------------------

    @staticmethod
    def _suite_clifford(report, family, maxweight, kmax):
        # the action is written on the Schur basis, so the family only labels the report
        psi, psi_star = CliffordAction.psi, CliffordAction.psi_star
        for shape, charge in _basis_vectors(maxweight, 2):
            vector = BosonState.basis(shape, charge)
            for k in range(-kmax, kmax + 1):
                for l in range(-kmax, kmax + 1):
                    context = {'shape': shape, 'charge': charge, 'k': k, 'l': l}
                    report.record(not (psi(k, psi(l, vector)) + psi(l, psi(k, vector))),
                                  relation="psi psi", **context)
                    report.record(not (psi_star(k, psi_star(l, vector)) + psi_star(l, psi_star(k, vector))),
                                  relation="psi* psi*", **context)
                    report.record(
                        psi(k, psi_star(l, vector)) + psi_star(l, psi(k, vector)) == vector * _delta(k, l),
                        relation="psi psi*", **context,
                    )

    @staticmethod
    def _suite_bernstein(report, family, maxweight):
        for shape in partitions_up_to(maxweight):
            vacuum = BosonState.vacuum()
            created = CliffordAction.apply_word(CliffordAction.creation_word(shape), vacuum)
            report.record(
                created == BosonState.basis(shape, shape.length),
                product="psi", shape=shape, got=str(created),
            )
            annihilated = CliffordAction.apply_word(CliffordAction.annihilation_word(shape), vacuum)
            expected = BosonState.basis(shape.conjugate(), -shape.length, coeff=(-1) ** shape.weight)
            report.record(
                annihilated == expected,
                product="psi*", shape=shape, got=str(annihilated),
            )

    @staticmethod
    def _suite_prop42(report, family, maxweight):
        for shape, k, charge in _vertex_sweep(maxweight):
            report.attempt(
                lambda: all(VertexIdentities.verify_prop42(family, k, charge, shape)),
                shape=shape, k=k, charge=charge,
            )

    @staticmethod
    def _suite_correspondence(report, family, maxweight, kmax):
        for shape, charge in _basis_vectors(maxweight, 2):
            fermion = FermionState.basis(charge, shape)
            boson = to_boson(fermion)
            for k in range(-kmax, kmax + 1):
                context = {'shape': shape, 'charge': charge, 'k': k}
                report.record(
                    to_boson(FermionAction.psi(k, fermion)) == CliffordAction.psi(k, boson),
                    operator="psi", **context,
                )
                report.record(
                    to_boson(FermionAction.psi_star(k, fermion)) == CliffordAction.psi_star(k, boson),
                    operator="psi*", **context,
                )
                for l in range(-kmax, kmax + 1):
                    mixed = (
                        FermionAction.psi(k, FermionAction.psi_star(l, fermion))
                        + FermionAction.psi_star(l, FermionAction.psi(k, fermion))
                    )
                    report.record(mixed == fermion * _delta(k, l), relation="wedge psi psi*", l=l, **context)

    @staticmethod
    def _suite_heisenberg(report, family, maxweight, kmax):
        for shape, charge in _basis_vectors(maxweight, 2):
            vector = BosonState.basis(shape, charge)
            context = {'shape': shape, 'charge': charge}
            report.attempt(
                lambda: HeisenbergAction.alpha(0, vector) == vector * charge,
                relation="alpha_0", **context,
            )
            for j in range(-kmax, kmax + 1):
                for k in range(-kmax, kmax + 1):
                    report.attempt(
                        lambda: HeisenbergAction.commutator(j, k, vector) == vector * (j * _delta(j, -k)),
                        relation="commutator", j=j, k=k, **context,
                    )

    @staticmethod
    def _suite_skew(report, family, maxweight):
        for shape in partitions_up_to(maxweight):
            if isinstance(family, ClassicalFamily):
                for p in range(0, shape.length + 1):
                    report.attempt(
                        lambda: SkewOperators.d_skew(family, p, shape) == SkewOperators.skew_by_column(shape, p),
                        check="D_p skew determinant", shape=shape, p=p,
                    )
            for p in range(0, 3):
                report.attempt(
                    lambda: not SkewOperators.d_upper(family, p, shape),
                    check="D^(p) vanishes for p >= 0", shape=shape, p=p,
                )
            p = -(shape.part(1) + 2)
            report.attempt(
                lambda: not SkewOperators.d_upper(family, p, shape),
                check="D^(p) vanishes past lambda_1 + 1", shape=shape, p=p,
            )
        report.attempt(
            lambda: SkewOperators.d_upper(family, -1, Partition()) == 1
            and SkewOperators.d_skew(family, 0, Partition()) == 1,
            check="D^(-1)(1) = D_0(1) = 1",
        )

    @staticmethod
    def _suite_basis(report, family, maxweight):
        for degree in range(0, min(maxweight, 6) + 1):
            polys = [SchurCalculator.schur(family, shape.parts) for shape in partitions_up_to(degree)]
            report.attempt(lambda: rank_of(polys) == len(polys), degree=degree, size=len(polys))

    # -- family-specific vertex identities ------------------------------------

    @staticmethod
    def _suite_char(report, family, maxweight, span):
        if not isinstance(family, LieCharacterFamily):
            raise UnsupportedFamilyError(f"the char suite runs on the lie family, got {family}")
        for shape, k, charge in _vertex_sweep(maxweight, -3, 4):
            report.attempt(
                lambda: all(VertexIdentities.verify_char_vertex(family, k, charge, shape)),
                check="vertex", shape=shape, k=k, charge=charge,
            )
        for i in range(-span, span + 1):
            for j in range(-span, span + 1):
                expected = family.k_coeff(i - j) - (family.k_coeff(-i - j) if i > 0 else 0)
                report.attempt(
                    lambda: SchurCalculator.elementary(family, i, j) == expected,
                    check="e via K", i=i, j=j,
                )
        for p in range(0, span + 1):
            report.attempt(
                lambda: SchurCalculator.schur(family, (1,) * p) == family.k_coeff(p) - family.k_coeff(p - 2),
                check="column character", p=p,
            )
        for n in range(0, 2 * span + 1):
            report.attempt(
                lambda: Poly.sum((-1) ** s * family.k_coeff(s) * family.J(n - s) for s in range(0, n + 1))
                == _delta(n, 0),
                check="J(u)K(-u) = 1", n=n,
            )

    @staticmethod
    def _suite_linrec(report, family, maxweight, span):
        VertexIdentities._require_constant_recurrence(family)
        degenerate = get_family(FamilyKind.LINREC, (0,))
        classical = get_family(FamilyKind.CLASSICAL)
        for r in range(-5, 6):
            for k in range(-5, 9):
                report.record(degenerate.h(r, k) == classical.h(r, k), check="zero coefficients", r=r, k=k)
        for candidate in (family, degenerate):
            for shape, k, charge in _vertex_sweep(maxweight, -3, 4):
                report.attempt(
                    lambda: all(VertexIdentities.verify_linrec_vertex(candidate, k, charge, shape)),
                    check="vertex", family=str(candidate), shape=shape, k=k, charge=charge,
                )
        for p in range(0, span + 1):
            for a in range(-span, span + 1):
                report.attempt(
                    lambda: VertexIdentities.elementary_by_convolution(family, p, a)
                    == SchurCalculator.elementary(family, p, a),
                    check="e recursion", p=p, a=a,
                )

    @staticmethod
    def _random_shifted_poly(rng, family):
        terms = []
        for _ in range(rng.randint(1, 4)):
            term = Poly.constant(rng.randint(-5, 5))
            budget = rng.randint(0, 6)
            while budget > 0:
                index = rng.randint(1, budget)
                term = term * family.base(index)
                budget -= index
            terms.append(term)
        return Poly.sum(terms)

    @staticmethod
    def _suite_shifted(report, family, span, seed):
        if not isinstance(family, ShiftedFamily):
            raise UnsupportedFamilyError(f"the shifted suite runs on the shifted family, got {family}")
        for k in range(1, span + 2):
            shifted_elementary = SchurCalculator.schur(family, (1,) * k)
            report.attempt(
                lambda: shifted_elementary == SchurCalculator.elementary(family, 1, 1 - k),
                check="e*_k = e(1, 1-k)", k=k,
            )
            for p in range(0, span + 1):
                report.attempt(
                    lambda: family.phi_power(shifted_elementary, 1 - p) == SchurCalculator.elementary(family, p, p - k),
                    check="phi^(1-p) e*_k = e(p, p-k)", k=k, p=p,
                )
        rng = random.Random(seed)
        for sample in range(settings.JTVO_RANDOM_SAMPLES // 10):
            poly = IdentityVerifier._random_shifted_poly(rng, family)
            report.record(
                family.phi_inverse(family.phi(poly)) == poly and family.phi(family.phi_inverse(poly)) == poly,
                check="phi round trip", sample=sample, poly=str(poly),
            )

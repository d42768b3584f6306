from dataclasses import dataclass

from django.conf import settings
from rest_framework import serializers

from .exceptions import LiteralError
from .models import VerificationRun
from .services.boson import BosonState, CliffordAction, OperatorWord
from .services.families import FamilyKind, build_family
from .services.partitions import Partition, parse_vector, straighten
from .services.schur_calculator import SchurCalculator
from .services.verification import SCHEMA_VERSION, IdentityVerifier


@dataclass
class QueryResult:
    """What a query produces: the JSON document, its text rendering and whether identities held."""

    document: dict
    text: str
    ok: bool = True


def poly_document(poly):
    return {'value': poly.to_json(), 'text': str(poly)}


class LiteralField(serializers.Field):
    """CharField-like field whose value goes through one of the literal parsers."""

    parser = None

    def to_internal_value(self, data):
        if isinstance(data, (list, tuple)):
            data = ",".join(str(item) for item in data)
        elif not isinstance(data, str):
            data = str(data)
        try:
            return type(self).parser(data)
        except LiteralError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, value):
        return str(value)


class VectorField(LiteralField):
    parser = staticmethod(parse_vector)


class StateField(LiteralField):
    parser = staticmethod(BosonState.parse)


class WordField(LiteralField):
    parser = staticmethod(OperatorWord.parse)


class FamilyQuerySerializer(serializers.Serializer):
    family = serializers.ChoiceField(choices=FamilyKind.choices, required=False)
    coeffs = serializers.CharField(required=False, allow_blank=True, default='')
    slopes = serializers.CharField(required=False, allow_blank=True, default='')

    def validate(self, attrs):
        attrs.setdefault('family', settings.JTVO_DEFAULT_FAMILY)
        try:
            attrs['generator_family'] = build_family(attrs['family'], attrs['coeffs'], attrs['slopes'])
        except LiteralError as exc:
            raise serializers.ValidationError({'coeffs': str(exc)})
        return attrs

    def base_document(self, command):
        return {
            'schema': SCHEMA_VERSION,
            'command': command,
            'family': self.validated_data['generator_family'].describe(),
        }


class SchurQuerySerializer(FamilyQuerySerializer):
    shape = VectorField()

    def create(self, validated_data):
        family = validated_data['generator_family']
        vector = validated_data['shape']
        signed = straighten(vector)
        value = SchurCalculator.schur(family, vector)
        document = {
            **self.base_document('schur'),
            'shape': list(vector),
            'straightened': {'sign': signed.sign, 'shape': signed.shape.to_json()},
            **poly_document(value),
        }
        return QueryResult(document, str(value))


class ElementaryQuerySerializer(FamilyQuerySerializer):
    p = serializers.IntegerField()
    a = serializers.IntegerField()

    def create(self, validated_data):
        family = validated_data['generator_family']
        value = SchurCalculator.elementary(family, validated_data['p'], validated_data['a'])
        document = {
            **self.base_document('elementary'),
            'p': validated_data['p'],
            'a': validated_data['a'],
            **poly_document(value),
        }
        return QueryResult(document, str(value))


class HookQuerySerializer(FamilyQuerySerializer):
    m = serializers.IntegerField()
    n = serializers.IntegerField()

    def create(self, validated_data):
        family = validated_data['generator_family']
        m, n = validated_data['m'], validated_data['n']
        value = SchurCalculator.hook_schur(family, m, n)
        document = {
            **self.base_document('hook'),
            'm': m,
            'n': n,
            'shape': Partition.hook(m, n).to_json() if m >= 0 and n >= 0 else None,
            **poly_document(value),
        }
        return QueryResult(document, str(value))


class ApplyQuerySerializer(FamilyQuerySerializer):
    word = WordField()
    state = StateField()
    expand = serializers.BooleanField(required=False, default=False)

    def create(self, validated_data):
        family = validated_data['generator_family']
        result = CliffordAction.apply_word(validated_data['word'], validated_data['state'])
        document = {
            **self.base_document('apply'),
            'word': str(validated_data['word']),
            'state': validated_data['state'].to_json(),
            'result': result.to_json(),
            'text': str(result),
        }
        lines = [str(result)]
        if validated_data['expand']:
            expanded = result.expand(family)
            document['expanded'] = {
                str(charge): poly_document(poly) for charge, poly in sorted(expanded.items())
            }
            lines += [f"z^{charge}: {poly}" for charge, poly in sorted(expanded.items())]
        return QueryResult(document, "\n".join(lines))


class MatricesQuerySerializer(FamilyQuerySerializer):
    M = serializers.IntegerField()
    N = serializers.IntegerField()

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if attrs['M'] >= attrs['N']:
            raise serializers.ValidationError({'N': f"need M < N, got M={attrs['M']}, N={attrs['N']}"})
        return attrs

    @staticmethod
    def _render(matrix):
        return [[str(entry) for entry in row] for row in matrix]

    def create(self, validated_data):
        family = validated_data['generator_family']
        M, N = validated_data['M'], validated_data['N']
        H, E = SchurCalculator.he_matrices(family, M, N)
        product = SchurCalculator.matrix_product(H, E)
        identity = SchurCalculator.is_identity(product)
        document = {
            **self.base_document('matrices'),
            'M': M,
            'N': N,
            'H': self._render(H),
            'E': self._render(E),
            'product': self._render(product),
            'identity': identity,
        }
        lines = []
        for name, matrix in (('H', H), ('E', E), ('H*E', product)):
            lines.append(f"{name}({M},{N}):")
            lines += ["  [" + ", ".join(row) + "]" for row in self._render(matrix)]
        lines.append(f"H*E = Id: {'yes' if identity else 'no'}")
        return QueryResult(document, "\n".join(lines), ok=identity)


class VerifyQuerySerializer(FamilyQuerySerializer):
    suite = serializers.ChoiceField(choices=IdentityVerifier.suites())
    maxweight = serializers.IntegerField(required=False, allow_null=True, min_value=0)
    range = serializers.IntegerField(required=False, allow_null=True, min_value=0)
    kmax = serializers.IntegerField(required=False, allow_null=True, min_value=0)
    seed = serializers.IntegerField(required=False, allow_null=True)
    record = serializers.BooleanField(required=False, default=False)

    def create(self, validated_data):
        family = validated_data['generator_family']
        options = {key: validated_data.get(key) for key in ('maxweight', 'range', 'kmax', 'seed')}
        report = IdentityVerifier.run(validated_data['suite'], family, **options)
        if validated_data['record']:
            VerificationRun.from_report(report, family)
        return QueryResult(report.to_json(), report.to_text(), ok=report.passed)


class VerificationRunSerializer(serializers.ModelSerializer):
    class Meta:
        model = VerificationRun
        fields = '__all__'

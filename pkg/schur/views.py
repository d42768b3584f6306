import logging

from rest_framework import generics, status
from rest_framework.response import Response
from rest_framework.views import APIView

from .exceptions import IdentityViolation, JtvoError
from .models import VerificationRun
from .serializers import (
    ApplyQuerySerializer, ElementaryQuerySerializer, HookQuerySerializer,
    MatricesQuerySerializer, SchurQuerySerializer, VerificationRunSerializer,
    VerifyQuerySerializer,
)

logger = logging.getLogger(__name__)


class QueryView(APIView):
    """
    Read-only computation endpoint: query parameters mirror the command flags and
    the response is the same document ``--json`` prints.
    """
    query_serializer = None

    def query_data(self, request, **kwargs):
        data = request.query_params.dict()
        data.update(kwargs)
        return data

    def get(self, request, **kwargs):
        serializer = self.query_serializer(data=self.query_data(request, **kwargs))
        serializer.is_valid(raise_exception=True)
        try:
            result = serializer.save()
        except IdentityViolation as exc:
            logger.warning("identity violation in %s: %s", type(self).__name__, exc)
            return Response(
                {'error': str(exc), 'context': exc.context},
                status=status.HTTP_422_UNPROCESSABLE_ENTITY
            )
        except JtvoError as exc:
            return Response({'error': str(exc)}, status=status.HTTP_422_UNPROCESSABLE_ENTITY)
        return Response(result.document)


class SchurView(QueryView):
    """Generalized Schur function of an integer vector"""
    query_serializer = SchurQuerySerializer


class ElementaryView(QueryView):
    """Generalized elementary function e^(p)_a"""
    query_serializer = ElementaryQuerySerializer


class HookView(QueryView):
    """Hook Schur function s_(m|n)"""
    query_serializer = HookQuerySerializer


class ApplyView(QueryView):
    """Clifford operator word applied to a boson state"""
    query_serializer = ApplyQuerySerializer


class MatricesView(QueryView):
    """Truncated H and E matrices and their product"""
    query_serializer = MatricesQuerySerializer


class VerifyView(QueryView):
    """Run a verification suite; the report is returned whether or not it passed"""
    query_serializer = VerifyQuerySerializer

    def query_data(self, request, **kwargs):
        data = super().query_data(request, **kwargs)
        # recording is a command-line feature; the API stays read-only
        data.pop('record', None)
        return data


class VerificationRunListView(generics.ListAPIView):
    """Recorded verification runs, newest first"""
    queryset = VerificationRun.objects.all()
    serializer_class = VerificationRunSerializer

    def get_queryset(self):
        queryset = super().get_queryset()
        for field in ('suite', 'family'):
            value = self.request.query_params.get(field)
            if value:
                queryset = queryset.filter(**{field: value})
        return queryset

# Custom exceptions raised by the Abelian volume formulas
from django.utils.translation import gettext_lazy as _
from rest_framework import status
from rest_framework.exceptions import APIException


class GradedDegreeException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("graded degree error")
    default_code = 'graded-degree'


class IncompletePairingDataException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("incomplete pairing data")
    default_code = 'incomplete-pairing-data'


class NonIntegralRankException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("rank of the bundle of sections must be an integer")
    default_code = 'non-integral-rank'


class EmptyProjectiveBundleException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("empty projective bundle")
    default_code = 'empty-projective-bundle'

# Custom exceptions raised by the exterior algebra
from django.utils.translation import gettext_lazy as _
from rest_framework import status
from rest_framework.exceptions import APIException


class RankMismatchException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("rank mismatch")
    default_code = 'rank-mismatch'


class OddFormExponentialException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("exponential requires even form")
    default_code = 'odd-form-exponential'


class NonAntisymmetricPairingException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("pairing matrix must be antisymmetric")
    default_code = 'non-antisymmetric-pairing'

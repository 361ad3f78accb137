# Custom exceptions raised by the truncated series arithmetic
from django.utils.translation import gettext_lazy as _
from rest_framework import status
from rest_framework.exceptions import APIException


class NonUnitBaseException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("non-unit base for negative power")
    default_code = 'non-unit-base'


class NonNilpotentExponentialException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("exponential of non-nilpotent argument")
    default_code = 'non-nilpotent-exponential'

# Custom exceptions raised by the localization engine
from django.utils.translation import gettext_lazy as _
from rest_framework import status
from rest_framework.exceptions import APIException


class UConcentrationException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("nonzero u-degree in top coefficient")
    default_code = 'u-concentration'


class DegenerateWeightsException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("weights must be pairwise distinct")
    default_code = 'degenerate-weights'


class InsufficientWeightCandidatesException(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("at least two weight vectors are required")
    default_code = 'insufficient-weight-candidates'

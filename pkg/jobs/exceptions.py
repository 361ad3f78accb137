# This File is used to create the exceptions raised while dispatching jobs
from django.utils.translation import gettext_lazy as _
from rest_framework import status
from rest_framework.exceptions import APIException


class InternalComputationException(APIException):
    status_code = status.HTTP_500_INTERNAL_SERVER_ERROR
    default_detail = _("Internal error while computing the job. Something went wrong")
    default_code = 'internal-computation-error'
